#include "xxchain/thermal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "xxchain/combinatorics.hpp"
#include "xxchain/error.hpp"
#include "xxchain/oracle.hpp"

namespace xxchain {

namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be >= 0");
}

} // namespace

DensityMatrix::DensityMatrix(int n, Eigen::MatrixXd matrix) : n_(n), matrix_(std::move(matrix)) {
  if (n < 1 || n > 30) throw std::invalid_argument("density matrix chain size out of range");
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (matrix_.rows() != dim || matrix_.cols() != dim)
    throw std::invalid_argument("density matrix must be 2^N x 2^N");
}

double DensityMatrix::hermiticity_error() const {
  return (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  return diagonalize_symmetric(matrix_).values.minCoeff();
}

double SubspaceWeights::sector_total(int m) const {
  double s = 0.0;
  for (double q : by_sector.at(m)) s += q;
  return s;
}

EigenBasis::EigenBasis(int n, int cap) : n_(n) {
  require_within_cap(n, std::min(cap, kDenseCapMax), "EigenBasis");
  for (int m = 0; m <= n; ++m) {
    sectors_.push_back(sector_eigenbasis(n, m));
    masks_.push_back(lex_ordered_masks(n, m));
  }
}

std::vector<std::uint64_t> label_ordered_masks(int n) {
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> masks(count);
  for (std::uint64_t i = 0; i < count; ++i) masks[i] = i;
  // ascending integers within a popcount class are already colex-ordered
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  return masks;
}

ThermalEnsemble boltzmann_weights(const ChainParams& params, double beta, int cap) {
  check_beta(beta);
  const auto energies = level_energies(params, cap);
  const auto masks = label_ordered_masks(params.n);
  ThermalEnsemble out{beta, std::vector<double>(masks.size(), 0.0), 0.0};

  if (std::isinf(beta)) {
    const auto g = ground_sector(params);
    const auto lower = label_for_occupation(OccupationState::lowest(params.n, g.k));
    if (g.degenerate) {
      const auto upper = label_for_occupation(OccupationState::lowest(params.n, g.k + 1));
      out.probabilities[lower - 1] = 0.5;
      out.probabilities[upper - 1] = 0.5;
      out.log_z = std::log(2.0);
    } else {
      out.probabilities[lower - 1] = 1.0;
    }
    return out;
  }

  const double e_min = *std::min_element(energies.begin(), energies.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const double w = std::exp(-beta * (energies[masks[i]] - e_min));
    out.probabilities[i] = w;
    sum += w;
  }
  for (double& p : out.probabilities) p /= sum;
  out.log_z = -beta * e_min + std::log(sum);
  return out;
}

SubspaceWeights subspace_weights(const ChainParams& params, double beta, int cap) {
  const auto ensemble = boltzmann_weights(params, beta, cap);
  SubspaceWeights out{params.n, {}};
  std::size_t offset = 0;
  for (int m = 0; m <= params.n; ++m) {
    const auto count = static_cast<std::size_t>(binomial(params.n, m));
    out.by_sector.emplace_back(ensemble.probabilities.begin() + offset,
                               ensemble.probabilities.begin() + offset + count);
    offset += count;
  }
  return out;
}

DensityMatrix thermal_density_matrix(const ChainParams& params, double beta, const EigenBasis& basis) {
  if (basis.n() != params.n) throw std::invalid_argument("eigenbasis built for a different N");
  const auto weights = subspace_weights(params, beta);
  const Eigen::Index dim = Eigen::Index{1} << params.n;
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
  for (int m = 0; m <= params.n; ++m) {
    const auto& phi = basis.sector(m);
    const Eigen::Map<const Eigen::VectorXd> q(weights.by_sector[m].data(),
                                              static_cast<Eigen::Index>(weights.by_sector[m].size()));
    // Equal weights make the block a multiple of the identity; skip the
    // rounding of phi * phi^T.
    const Eigen::MatrixXd block = beta == 0.0 ? Eigen::MatrixXd(q(0) * Eigen::MatrixXd::Identity(q.size(), q.size()))
                                              : Eigen::MatrixXd(phi * q.asDiagonal() * phi.transpose());
    const auto& masks = basis.sector_masks(m);
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = 0; j < masks.size(); ++j)
        rho(static_cast<Eigen::Index>(masks[i]), static_cast<Eigen::Index>(masks[j])) =
            block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return DensityMatrix(params.n, std::move(rho));
}

DensityMatrix thermal_density_matrix(const ChainParams& params, double beta, int cap) {
  require_within_cap(params.n, cap, "thermal_density_matrix");
  check_beta(beta);
  return thermal_density_matrix(params, beta, EigenBasis(params.n, cap));
}

DensityMatrix thermal_density_matrix(const ChainParams& params, double beta) {
  return thermal_density_matrix(params, beta, dense_cap());
}

double purity_analytic(const ChainParams& params, double beta) {
  check_beta(beta);
  const auto spectrum = mode_energies(params);
  double purity = 1.0;
  if (std::isinf(beta)) {
    const double tol = 2.0 * crossing_tolerance(params.j);
    for (double lambda : spectrum.lambdas)
      if (std::abs(lambda) <= tol) purity *= 0.5;
    return purity;
  }
  for (double lambda : spectrum.lambdas) purity *= 1.0 - 1.0 / (1.0 + std::cosh(beta * lambda));
  return purity;
}

double purity_dense(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

DensityMatrix pure_state(const SpinBasisVector& psi) {
  const Eigen::VectorXd v = psi.to_dense();
  return DensityMatrix(psi.n(), v * v.transpose());
}

DensityMatrix crossing_mixture(int n, int k, int cap) {
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("crossing index k=" + std::to_string(k) + " outside [0, N-1]");
  require_within_cap(n, cap, "crossing_mixture");
  const Eigen::VectorXd lower = ground_state(n, k).to_dense();
  const Eigen::VectorXd upper = ground_state(n, k + 1).to_dense();
  return DensityMatrix(n, 0.5 * (lower * lower.transpose() + upper * upper.transpose()));
}

DensityMatrix crossing_mixture(int n, int k) { return crossing_mixture(n, k, dense_cap()); }

} // namespace xxchain
