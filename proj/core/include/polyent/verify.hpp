#pragma once

#include <string>
#include <vector>

namespace polyent {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Named check suites: "metrics" (exact structural identities and metric
/// axioms), "dynamics" (negative controls, estimator property suite,
/// fixed-set enumeration), "theorem" (slope reproduction of the product /
/// suspension theorem), "coding" (word-census suite), or "all".
std::vector<CheckResult> run_suite(const std::string& suite, int jobs,
                                   unsigned long long cap);

bool all_passed(const std::vector<CheckResult>& results);

/// One line per check: "PASS name  detail".
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace polyent
