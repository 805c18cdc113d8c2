// couple-workbench: exact computations and property checks for Hahn-series
// differential fields driven by asymptotic couples.
//
// Exit codes: 0 all checks pass, 1 a check fails (or is inconclusive
// without --allow-inconclusive), 2 malformed input or bad usage.
// JSON reports go to stdout; a one-line summary goes to stderr.

#include <hahn/workbench.hpp>

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>

namespace {

void add_common_options(CLI::App* sub, hahn::RunConfig& config) {
  sub->add_option("--samples", config.samples,
                  "random probes per sampled check (0 disables sampling)")
      ->capture_default_str();
  sub->add_option("--seed", config.seed, "seed for the sampled checks")
      ->capture_default_str();
  sub->add_option("--budget", config.budget,
                  "series-inversion budget: number of Neumann summands")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--format", config.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_flag("--allow-inconclusive", config.allow_inconclusive,
                "exit 0 when checks are inconclusive but none fail");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Hahn-series differential fields over asymptotic couples"};
  app.require_subcommand(1);

  hahn::RunConfig config;
  std::string couple_path;
  std::string series_path;
  std::string tower_path;
  std::string extend_path;
  std::size_t index_size = 1;

  CLI::App* validate =
      app.add_subcommand("validate-couple",
                         "decide the couple axioms and classify the couple");
  validate->add_option("couple", couple_path, "couple config (JSON)")
      ->required();
  add_common_options(validate, config);

  CLI::App* derive = app.add_subcommand(
      "derive", "differentiate a series under the couple's derivation");
  derive->add_option("couple", couple_path, "couple config (JSON)")
      ->required();
  derive->add_option("series", series_path, "series document (JSON)")
      ->required();
  derive->add_flag("--dagger", config.dagger,
                   "also emit the logarithmic derivative f'/f");
  add_common_options(derive, config);

  CLI::App* hfield = app.add_subcommand(
      "check-hfield", "check the ordered-field axioms of the derivation");
  hfield->add_option("couple", couple_path, "couple config (JSON)")
      ->required();
  add_common_options(hfield, config);

  CLI::App* tower = app.add_subcommand(
      "tower", "verify the coarse/fine valuation tower at a cut");
  tower->add_option("tower", tower_path, "tower config (JSON)")->required();
  add_common_options(tower, config);

  CLI::App* loghyper = app.add_subcommand(
      "loghyper",
      "cross-check the abstract derivation against the logarithmic tower");
  loghyper
      ->add_option("--index-size", index_size, "rank of the tower model")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common_options(loghyper, config);

  CLI::App* extend = app.add_subcommand(
      "extend-psi", "extend psi-values from subgroup generators and validate");
  extend->add_option("extension", extend_path, "extension config (JSON)")
      ->required();
  add_common_options(extend, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  if (app.got_subcommand(validate)) {
    config.command = "validate-couple";
    config.inputs = {couple_path};
  } else if (app.got_subcommand(derive)) {
    config.command = "derive";
    config.inputs = {couple_path, series_path};
  } else if (app.got_subcommand(hfield)) {
    config.command = "check-hfield";
    config.inputs = {couple_path};
  } else if (app.got_subcommand(tower)) {
    config.command = "tower";
    config.inputs = {tower_path};
  } else if (app.got_subcommand(loghyper)) {
    config.command = "loghyper";
    config.index_size = index_size;
  } else {
    config.command = "extend-psi";
    config.inputs = {extend_path};
  }

  try {
    hahn::RunReport report = hahn::run_command(config);
    if (config.format == "json") {
      std::cout << report.document.dump(2) << "\n";
      std::cerr << config.command << ": exit " << report.exit_code << "\n";
    } else {
      std::cout << report.text;
    }
    return report.exit_code;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
}
