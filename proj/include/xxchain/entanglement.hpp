#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xxchain/spectrum.hpp"
#include "xxchain/thermal.hpp"

namespace xxchain {

/// Two-party split of the chain's sites (one-based). Both sides non-empty,
/// disjoint, and together covering 1..N.
struct BipartiteSplit {
  std::vector<int> sites_a;
  std::vector<int> sites_b;

  /// Complement of sites_a within 1..n.
  static BipartiteSplit from_a(int n, std::vector<int> sites_a);
  /// First floor(n/2) sites against the rest.
  static BipartiteSplit halves(int n);
  /// Parses "1,2|3,4".
  static BipartiteSplit parse(int n, const std::string& text);

  void validate(int n) const;
  std::string to_string() const;
  BipartiteSplit swapped() const { return {sites_b, sites_a}; }
};

/// Transposes the subsystem-B indices of rho.
Eigen::MatrixXd partial_transpose(const DensityMatrix& rho, const BipartiteSplit& split, int cap);
Eigen::MatrixXd partial_transpose(const DensityMatrix& rho, const BipartiteSplit& split);

/// Sum of |negative eigenvalues| of the partial transpose. Eigenvalues above
/// -1e-13 are treated as zero.
double negativity(const DensityMatrix& rho, const BipartiteSplit& split, int cap);
double negativity(const DensityMatrix& rho, const BipartiteSplit& split);

/// Populations of the N=2 thermal state in the basis
/// |up,up>, singlet psi-, triplet psi+, |down,down>.
struct TwoQubitPopulations {
  double up_up;
  double singlet;
  double triplet;
  double down_down;
};

TwoQubitPopulations two_qubit_populations(const ChainParams& params, double beta);

/// PPT test for the two-qubit X state: separable iff 4 p1 p4 >= (p2 - p3)^2.
/// The boundary counts as separable. Throws std::invalid_argument unless the
/// populations are non-negative and sum to 1 (within 1e-9).
bool two_qubit_separable(double p1, double p2, double p3, double p4);

/// Temperature (k_B = 1) at which the N=2 thermal state turns separable.
/// Bisection on 4 p1 p4 = (p2 - p3)^2 over T in (1e-6, 1e3), evaluated in
/// the log domain. Throws NumericalError if the root is not bracketed.
double critical_temperature_two_qubit(const ChainParams& params);

} // namespace xxchain
