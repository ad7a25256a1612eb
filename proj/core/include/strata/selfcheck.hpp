#pragma once

#include "strata/teich.hpp"

#include <string>
#include <vector>

namespace strata {

struct CheckResult {
  std::string name;
  std::string anchor;  // what the check pins down (formula, dataset, bound)
  bool pass;
  std::string detail;  // first failure, or a short summary
};

// Replays every exact identity the toolkit is built on: the Porteous/Logan
// agreement, the Hodge series inverse, the divisor-class coefficients, the
// test-pencil pairing, the lambda identity, kappa values, the Lyapunov
// certificates, the g=2 tightness, the determinant oracle, and the
// randomized property suite (fixed seeds). `table` is the Lyapunov dataset
// to validate, normally lyapunov_table() or a freshly loaded file; it is
// also cross-checked against the compiled-in rows.
std::vector<CheckResult> run_selfchecks(const std::vector<LyapunovRow>& table);

}  // namespace strata
