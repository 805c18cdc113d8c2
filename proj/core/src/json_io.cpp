#include <hahn/json_io.hpp>

namespace hahn {
namespace {

void require_keys(const nlohmann::json& j, const char* what,
                  std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ConfigError(std::string(what) + " must be a JSON object");
  for (const char* key : keys)
    if (!j.contains(key))
      throw ConfigError(std::string(what) + " is missing key \"" + key + "\"");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : keys)
      if (key == k) known = true;
    if (!known)
      throw ConfigError(std::string(what) + " has unknown key \"" + key + "\"");
  }
}

Scalar scalar_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_string())
    throw ConfigError(std::string(what) + " must be a rational string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

std::size_t size_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw ConfigError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

nlohmann::json element_to_json(const GroupElement& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const Scalar& c : g.dense()) out.push_back(c.str());
  return out;
}

GroupElement element_from_json(const nlohmann::json& j, IndexSet index) {
  if (!j.is_array() || j.size() != index.size())
    throw ConfigError("group element must be an array of " +
                      std::to_string(index.size()) + " rational strings");
  std::vector<Scalar> coeffs;
  coeffs.reserve(j.size());
  for (const auto& entry : j)
    coeffs.push_back(scalar_from_json(entry, "group element coefficient"));
  return GroupElement::from_dense(index, coeffs);
}

nlohmann::json series_to_json(const HahnSeries& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : f.terms())
    out.push_back({{"exp", element_to_json(e)}, {"coef", c.str()}});
  return out;
}

HahnSeries series_from_json(const nlohmann::json& j, IndexSet index) {
  if (!j.is_array()) throw ConfigError("series document must be a JSON array");
  HahnSeries f(index);
  for (const auto& term : j) {
    require_keys(term, "series term", {"exp", "coef"});
    GroupElement e = element_from_json(term.at("exp"), index);
    Scalar c = scalar_from_json(term.at("coef"), "series coefficient");
    if (c == 0)
      throw ConfigError("series term with zero coefficient at exponent " +
                        e.to_string());
    if (f.coeff(e) != 0)
      throw ConfigError("duplicate series exponent " + e.to_string());
    f.set_coeff(e, c);
  }
  return f;
}

nlohmann::json couple_to_json(const AsymptoticCouple& couple) {
  nlohmann::json psi = nlohmann::json::array();
  for (const GroupElement& value : couple.psi_table())
    psi.push_back(element_to_json(value));
  return {{"index_size", couple.index_set().size()}, {"psi", psi}};
}

AsymptoticCouple couple_from_json(const nlohmann::json& j) {
  require_keys(j, "couple config", {"index_size", "psi"});
  std::size_t n = size_from_json(j.at("index_size"), "index_size");
  if (n == 0) throw ConfigError("index_size must be positive");
  IndexSet index(n);
  const auto& psi = j.at("psi");
  if (!psi.is_array() || psi.size() != n)
    throw ConfigError("psi must list exactly index_size values");
  std::vector<GroupElement> table;
  table.reserve(n);
  for (const auto& row : psi) table.push_back(element_from_json(row, index));
  return AsymptoticCouple(index, std::move(table));
}

nlohmann::json tower_to_json(const TowerSpec& spec) {
  return {{"index_size", spec.index_size}, {"cut", spec.cut}};
}

TowerSpec tower_from_json(const nlohmann::json& j) {
  require_keys(j, "tower config", {"index_size", "cut"});
  TowerSpec spec;
  spec.index_size = size_from_json(j.at("index_size"), "index_size");
  if (spec.index_size == 0) throw ConfigError("index_size must be positive");
  spec.cut = size_from_json(j.at("cut"), "cut");
  if (spec.cut > spec.index_size)
    throw ConfigError("cut must lie between 0 and index_size");
  return spec;
}

nlohmann::json extend_to_json(const ExtendSpec& spec) {
  nlohmann::json generators = nlohmann::json::array();
  for (const auto& [element, value] : spec.generators)
    generators.push_back(
        {{"element", element_to_json(element)}, {"psi", element_to_json(value)}});
  return {{"index_size", spec.index_size}, {"generators", generators}};
}

ExtendSpec extend_from_json(const nlohmann::json& j) {
  require_keys(j, "extension config", {"index_size", "generators"});
  ExtendSpec spec;
  spec.index_size = size_from_json(j.at("index_size"), "index_size");
  if (spec.index_size == 0) throw ConfigError("index_size must be positive");
  IndexSet index(spec.index_size);
  const auto& generators = j.at("generators");
  if (!generators.is_array() || generators.empty())
    throw ConfigError("generators must be a nonempty array");
  for (const auto& g : generators) {
    require_keys(g, "generator", {"element", "psi"});
    spec.generators.emplace_back(element_from_json(g.at("element"), index),
                                 element_from_json(g.at("psi"), index));
  }
  return spec;
}

nlohmann::json check_to_json(const CheckResult& check) {
  nlohmann::json out = {{"name", check.name},
                        {"status", to_string(check.status)}};
  if (!check.witness.is_null()) out["witness"] = check.witness;
  if (!check.note.empty()) out["note"] = check.note;
  return out;
}

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& check : checks) out.push_back(check_to_json(check));
  return out;
}

}  // namespace hahn
