#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "xxchain/caps.hpp"
#include "xxchain/spectrum.hpp"
#include "xxchain/states.hpp"

namespace xxchain {

/// Boltzmann distribution over all 2^N eigenstates.
///
/// probabilities[l-1] is the weight of label l (see SectorIndex). For finite
/// beta, p_l = exp(-beta e_l - log_z). For beta = +inf the weight is spread
/// evenly over the degenerate ground levels and log_z holds the log of their
/// count.
struct ThermalEnsemble {
  double beta;
  std::vector<double> probabilities;
  double log_z;

  double probability(std::uint64_t label) const { return probabilities.at(label - 1); }
};

/// Dense density matrix in the spin product basis (bit l-1 of the index is
/// site l, 0 = up). All entries are real in this model.
class DensityMatrix {
public:
  DensityMatrix(int n, Eigen::MatrixXd matrix);

  int n() const { return n_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  double trace() const { return matrix_.trace(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;

private:
  int n_;
  Eigen::MatrixXd matrix_;
};

/// q_r^m: Boltzmann weights regrouped by magnetization sector.
/// by_sector[m][r-1] = q_r^m.
struct SubspaceWeights {
  int n;
  std::vector<std::vector<double>> by_sector;

  double at(std::uint64_t r, int m) const { return by_sector.at(m).at(r - 1); }
  double sector_total(int m) const;
};

/// Spectral decomposition of every magnetization sector, reusable across
/// (B, beta) since eigenvectors do not depend on either.
class EigenBasis {
public:
  explicit EigenBasis(int n, int cap = kDenseCapMax);

  int n() const { return n_; }
  /// Column r-1 holds the rank-r eigenvector of sector m over the rows'
  /// lexicographic position tuples.
  const Eigen::MatrixXd& sector(int m) const { return sectors_.at(m); }
  const std::vector<std::uint64_t>& sector_masks(int m) const { return masks_.at(m); }

private:
  int n_;
  std::vector<Eigen::MatrixXd> sectors_;
  std::vector<std::vector<std::uint64_t>> masks_;
};

/// Occupation masks in label order (sector by sector, ascending within).
std::vector<std::uint64_t> label_ordered_masks(int n);

ThermalEnsemble boltzmann_weights(const ChainParams& params, double beta, int cap = kEnumerationCap);

SubspaceWeights subspace_weights(const ChainParams& params, double beta, int cap = kEnumerationCap);

DensityMatrix thermal_density_matrix(const ChainParams& params, double beta, int cap);
DensityMatrix thermal_density_matrix(const ChainParams& params, double beta);
DensityMatrix thermal_density_matrix(const ChainParams& params, double beta, const EigenBasis& basis);

/// prod_k [1 - 1/(1 + cosh(beta Lambda_k))]. beta = +inf gives the
/// zero-temperature limit: 1/2 when some Lambda_k vanishes, 1 otherwise.
double purity_analytic(const ChainParams& params, double beta);

/// Tr(rho^2) by direct contraction.
double purity_dense(const DensityMatrix& rho);

/// |psi><psi| for a normalized spin-basis vector.
DensityMatrix pure_state(const SpinBasisVector& psi);

/// Equal mixture of the sector-k and sector-(k+1) ground states, the
/// zero-temperature state where they are degenerate.
DensityMatrix crossing_mixture(int n, int k, int cap);
DensityMatrix crossing_mixture(int n, int k);

} // namespace xxchain
