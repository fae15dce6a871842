#pragma once

#include <string>
#include <vector>

namespace xxchain {

/// Outcome of one closed-form vs brute-force comparison.
struct CheckResult {
  std::string name;
  bool passed;
  double max_error;
  double tolerance;
};

/// Runs the oracle cross-check suite for an N-site chain (N <= kOracleCap):
/// eigenvalue multisets, eigenvector projectors, eigenvector residuals,
/// orthonormality, partition-function sums, analytic vs dense purity and
/// crossing degeneracy, over fixed field and temperature grids.
std::vector<CheckResult> validate_chain(int n, double j = 1.0);

/// Fields used by validate_chain, in units of J.
std::vector<double> validation_fields();
/// Inverse temperatures used by validate_chain, in units of 1/J.
std::vector<double> validation_betas();

} // namespace xxchain
