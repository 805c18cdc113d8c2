#pragma once

/// \file json_io.hpp
/// JSON wire formats. Group elements travel as dense arrays of rational
/// strings; series as arrays of {"exp": [...], "coef": "..."} objects
/// sorted dominant-first; couples as {"index_size": n, "psi": [[...]]}.
/// Parsers are strict: unknown keys, duplicate exponents and zero
/// coefficients are rejected with ConfigError.

#include <hahn/couple.hpp>
#include <hahn/group.hpp>
#include <hahn/report.hpp>
#include <hahn/series.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hahn {

/// Malformed input document or configuration value.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json element_to_json(const GroupElement& g);
GroupElement element_from_json(const nlohmann::json& j, IndexSet index);

nlohmann::json series_to_json(const HahnSeries& f);
HahnSeries series_from_json(const nlohmann::json& j, IndexSet index);

nlohmann::json couple_to_json(const AsymptoticCouple& couple);
AsymptoticCouple couple_from_json(const nlohmann::json& j);

struct TowerSpec {
  std::size_t index_size = 1;
  std::size_t cut = 0;
};
nlohmann::json tower_to_json(const TowerSpec& spec);
TowerSpec tower_from_json(const nlohmann::json& j);

struct ExtendSpec {
  std::size_t index_size = 1;
  std::vector<std::pair<GroupElement, GroupElement>> generators;
};
nlohmann::json extend_to_json(const ExtendSpec& spec);
ExtendSpec extend_from_json(const nlohmann::json& j);

nlohmann::json check_to_json(const CheckResult& check);
nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);

}  // namespace hahn
