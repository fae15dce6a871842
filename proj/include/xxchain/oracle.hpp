#pragma once

#include <Eigen/Dense>

#include "xxchain/caps.hpp"
#include "xxchain/spectrum.hpp"

namespace xxchain {

/// Dense Hamiltonian of the open XX chain built term by term from Pauli
/// operators,
///   H = -sum_{i<N} (J/2)(X_i X_{i+1} + Y_i Y_{i+1}) - B sum_i Z_i,
/// in the spin product basis (bit l-1 of the index is site l, 0 = up).
/// This is the brute-force reference every closed form is checked against.
struct DenseHamiltonian {
  int n;
  Eigen::MatrixXd matrix;
};

DenseHamiltonian build_hamiltonian(const ChainParams& params, int cap = kOracleCap);

/// Eigenvalues ascending; eigenvectors as orthonormal columns.
struct Eigensystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Full eigensystem of a real symmetric matrix. Throws NumericalError if the
/// solver does not converge or any residual |Hv - lambda v| exceeds
/// residual_tol * max(1, |H|).
Eigensystem diagonalize_symmetric(const Eigen::MatrixXd& matrix, double residual_tol = 1e-8);

Eigensystem diagonalize(const DenseHamiltonian& h);

} // namespace xxchain
