// Acceptance suite: replays every exact identity the toolkit promises, one
// pass/fail line per criterion. All comparisons are exact rational equality.

#include "strata/selfcheck.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

int main() {
  using strata::CheckResult;
  const std::vector<CheckResult> checks =
      strata::run_selfchecks(strata::lyapunov_table());

  // criterion number -> selfcheck name
  const std::vector<std::pair<int, std::string>> criteria = {
      {1, "porteous-logan-agreement"},
      {2, "hodge-series-inverse"},
      {3, "strata-divisor-class"},
      {4, "plane-cubic-pencil"},
      {5, "lambda-identity"},
      {6, "kappa-values"},
      {7, "lyapunov-certificates"},
      {8, "g2-tightness"},
      {9, "determinant-oracle"},
      {10, "property-suite"},
  };

  std::map<std::string, const CheckResult*> by_name;
  for (const auto& check : checks) by_name[check.name] = &check;

  int failures = 0;
  for (const auto& [number, name] : criteria) {
    const CheckResult* check = by_name.count(name) ? by_name.at(name) : nullptr;
    if (check && check->pass) {
      std::printf("PASS criterion %2d: %s -- %s\n", number, name.c_str(),
                  check->anchor.c_str());
    } else {
      std::printf("FAIL criterion %2d: %s -- %s\n", number, name.c_str(),
                  check ? check->detail.c_str() : "check missing");
      ++failures;
    }
  }
  std::printf("%s: %zu/%zu criteria passed\n", failures == 0 ? "OK" : "FAILED",
              criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
