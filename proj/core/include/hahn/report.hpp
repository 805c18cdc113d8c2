#pragma once

/// \file report.hpp
/// Check results shared by every validator: each named check passes,
/// fails (with a machine-readable witness), is inconclusive, or was
/// skipped. Commands aggregate these into their exit status.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hahn {

enum class CheckStatus { pass, fail, inconclusive, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  /// Concrete counterexample or evidence; null when there is nothing to show.
  nlohmann::json witness;
  /// Free-form remark, e.g. why a check was skipped.
  std::string note;
};

/// Worst status present: fail beats inconclusive beats pass; skipped
/// checks never affect the outcome.
CheckStatus aggregate(const std::vector<CheckResult>& checks);

/// Stable output order: by name, ties by original position.
void sort_checks(std::vector<CheckResult>& checks);

}  // namespace hahn
