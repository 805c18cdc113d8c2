#include <hahn/workbench.hpp>

#include <hahn/couple.hpp>
#include <hahn/derivation.hpp>
#include <hahn/loghyper.hpp>
#include <hahn/series.hpp>
#include <hahn/tower.hpp>

#include <ctime>
#include <fstream>
#include <sstream>
#include <utility>

namespace hahn {

namespace {

nlohmann::json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& error) {
    throw ConfigError(path + ": " + error.what());
  }
}

void expect_inputs(const RunConfig& config, std::size_t count,
                   const std::string& what) {
  if (config.inputs.size() != count) {
    std::ostringstream message;
    message << config.command << " takes " << count << " input file";
    if (count != 1) message << "s";
    if (count != 0) message << " (" << what << ")";
    message << ", got " << config.inputs.size();
    throw ConfigError(message.str());
  }
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

nlohmann::json classification_to_json(const CoupleValidation& validation) {
  nlohmann::json j{{"axioms", validation.axioms_ok},
                   {"hardy_type", validation.hardy_type},
                   {"hahn_type", validation.hahn_type},
                   {"small_derivation", validation.small_derivation},
                   {"grounded", validation.grounded}};
  j["max_psi"] = validation.max_psi ? element_to_json(*validation.max_psi)
                                    : nlohmann::json();
  return j;
}

std::string classification_line(const CoupleValidation& validation) {
  std::ostringstream line;
  line << "classification: axioms=" << yes_no(validation.axioms_ok)
       << " hardy_type=" << yes_no(validation.hardy_type)
       << " hahn_type=" << yes_no(validation.hahn_type)
       << " small_derivation=" << yes_no(validation.small_derivation)
       << " grounded=" << yes_no(validation.grounded);
  if (validation.max_psi) line << " max_psi=" << validation.max_psi->to_string();
  return line.str();
}

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::vector<CheckResult> run_validate_couple(const RunConfig& config,
                                             nlohmann::json& cfg,
                                             nlohmann::json& doc,
                                             std::vector<std::string>& extras) {
  expect_inputs(config, 1, "couple config");
  AsymptoticCouple couple = couple_from_json(load_document(config.inputs[0]));
  cfg["couple"] = couple_to_json(couple);
  CoupleValidation validation =
      validate_axioms(couple, config.samples, config.seed);
  doc["classification"] = classification_to_json(validation);
  extras.push_back(classification_line(validation));
  return std::move(validation.checks);
}

std::vector<CheckResult> run_derive(const RunConfig& config,
                                    nlohmann::json& cfg, nlohmann::json& doc,
                                    std::vector<std::string>& extras) {
  expect_inputs(config, 2, "couple config and series document");
  DerivationContext ctx(couple_from_json(load_document(config.inputs[0])));
  HahnSeries f =
      series_from_json(load_document(config.inputs[1]), ctx.index_set());
  cfg["couple"] = couple_to_json(ctx.couple());
  cfg["series"] = series_to_json(f);
  cfg["dagger"] = config.dagger;

  HahnSeries derivative = ctx.derive(f);
  doc["derivative"] = series_to_json(derivative);
  extras.push_back("derivative: " + derivative.to_string());

  std::vector<CheckResult> checks;
  if (!f.is_zero() && !f.valuation().is_zero())
    checks.push_back(ctx.leading_term_law(f));
  if (config.dagger) {
    if (f.is_zero())
      throw ConfigError("the logarithmic derivative of 0 is undefined");
    TruncationBudget budget(config.budget);
    Inverted dagger = ctx.log_derivative(f, budget);
    doc["dagger"] = series_to_json(dagger.series);
    doc["residual_bound"] = dagger.residual_bound
                                ? element_to_json(*dagger.residual_bound)
                                : nlohmann::json("exact");
    extras.push_back(
        "dagger: " + dagger.series.to_string() + " (residual bound: " +
        (dagger.residual_bound ? dagger.residual_bound->to_string() : "exact") +
        ")");
    checks.push_back(ctx.certify_round_trip(f, budget));
  }
  return checks;
}

std::vector<CheckResult> run_check_hfield(const RunConfig& config,
                                          nlohmann::json& cfg,
                                          nlohmann::json& /*doc*/,
                                          std::vector<std::string>& /*extras*/) {
  expect_inputs(config, 1, "couple config");
  DerivationContext ctx(couple_from_json(load_document(config.inputs[0])));
  cfg["couple"] = couple_to_json(ctx.couple());
  std::vector<CheckResult> checks = ctx.check_hfield(config.samples, config.seed);
  checks.push_back(ctx.extract_couple(config.samples, config.seed,
                                      TruncationBudget(config.budget)));
  return checks;
}

std::vector<CheckResult> run_tower(const RunConfig& config, nlohmann::json& cfg,
                                   nlohmann::json& /*doc*/,
                                   std::vector<std::string>& /*extras*/) {
  expect_inputs(config, 1, "tower config");
  TowerSpec spec = tower_from_json(load_document(config.inputs[0]));
  cfg["tower"] = tower_to_json(spec);
  ValuationTower tower(IndexSet(spec.index_size), spec.cut);
  return verify_tower(tower, config.samples, config.seed);
}

std::vector<CheckResult> run_loghyper(const RunConfig& config,
                                      nlohmann::json& cfg,
                                      nlohmann::json& /*doc*/,
                                      std::vector<std::string>& /*extras*/) {
  expect_inputs(config, 0, "");
  if (!config.index_size) throw ConfigError("loghyper needs --index-size");
  IndexSet index(*config.index_size);
  cfg["index_size"] = *config.index_size;
  DerivationContext ctx(AsymptoticCouple::log_couple(index));
  return verify_isomorphism(ctx, config.samples, config.seed);
}

std::vector<CheckResult> run_extend_psi(const RunConfig& config,
                                        nlohmann::json& cfg,
                                        nlohmann::json& doc,
                                        std::vector<std::string>& extras) {
  expect_inputs(config, 1, "extension config");
  ExtendSpec spec = extend_from_json(load_document(config.inputs[0]));
  cfg["extension"] = extend_to_json(spec);
  AsymptoticCouple extended =
      extend_psi(spec.generators, IndexSet(spec.index_size));
  doc["extended_psi"] = couple_to_json(extended);
  for (std::size_t i = 0; i < spec.index_size; ++i)
    extras.push_back("psi(e_" + std::to_string(i) + ") = " +
                     extended.psi_of_class(i).to_string());
  CoupleValidation validation =
      validate_axioms(extended, config.samples, config.seed);
  doc["classification"] = classification_to_json(validation);
  extras.push_back(classification_line(validation));
  return std::move(validation.checks);
}

std::string render_text(const RunConfig& config, const RunReport& report,
                        const std::vector<std::string>& extras) {
  std::ostringstream out;
  out << "couple-workbench " << tool_version() << " " << config.command
      << "\n";
  out << "samples=" << config.samples << " seed=" << config.seed
      << " budget=" << config.budget << "\n";
  for (const CheckResult& check : report.checks) {
    out << "  [" << to_string(check.status) << "] " << check.name;
    if (!check.note.empty()) out << ": " << check.note;
    out << "\n";
    if (check.status == CheckStatus::fail && !check.witness.is_null())
      out << "      witness: " << check.witness.dump() << "\n";
  }
  for (const std::string& line : extras) out << line << "\n";
  out << "result: " << to_string(aggregate(report.checks)) << " (exit "
      << report.exit_code << ")\n";
  return out.str();
}

}  // namespace

int exit_code_for(const std::vector<CheckResult>& checks,
                  bool allow_inconclusive) {
  CheckStatus overall = aggregate(checks);
  if (overall == CheckStatus::fail) return 1;
  if (overall == CheckStatus::inconclusive) return allow_inconclusive ? 0 : 1;
  return 0;
}

std::string tool_version() { return "1.0.0"; }

RunReport run_command(const RunConfig& config) {
  RunReport report;
  nlohmann::json& doc = report.document;
  doc["tool"] = "couple-workbench";
  doc["version"] = tool_version();
  doc["command"] = config.command;
  nlohmann::json cfg{{"samples", config.samples},
                     {"seed", config.seed},
                     {"budget", config.budget},
                     {"allow_inconclusive", config.allow_inconclusive}};

  std::vector<std::string> extras;
  if (config.command == "validate-couple")
    report.checks = run_validate_couple(config, cfg, doc, extras);
  else if (config.command == "derive")
    report.checks = run_derive(config, cfg, doc, extras);
  else if (config.command == "check-hfield")
    report.checks = run_check_hfield(config, cfg, doc, extras);
  else if (config.command == "tower")
    report.checks = run_tower(config, cfg, doc, extras);
  else if (config.command == "loghyper")
    report.checks = run_loghyper(config, cfg, doc, extras);
  else if (config.command == "extend-psi")
    report.checks = run_extend_psi(config, cfg, doc, extras);
  else
    throw ConfigError("unknown command: " + config.command);

  sort_checks(report.checks);
  doc["config"] = cfg;
  doc["checks"] = checks_to_json(report.checks);
  report.exit_code = exit_code_for(report.checks, config.allow_inconclusive);
  doc["exit_status"] = report.exit_code;
  doc["timestamp"] = iso_timestamp();
  report.text = render_text(config, report, extras);
  return report;
}

}  // namespace hahn
