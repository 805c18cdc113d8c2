#include <hahn/report.hpp>

#include <algorithm>
#include <stdexcept>

namespace hahn {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
    case CheckStatus::skipped: return "skipped";
  }
  throw std::logic_error("unknown check status");
}

CheckStatus aggregate(const std::vector<CheckResult>& checks) {
  CheckStatus out = CheckStatus::pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return CheckStatus::fail;
    if (c.status == CheckStatus::inconclusive) out = CheckStatus::inconclusive;
  }
  return out;
}

void sort_checks(std::vector<CheckResult>& checks) {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.name < b.name;
                   });
}

}  // namespace hahn
