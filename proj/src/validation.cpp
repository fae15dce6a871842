#include "xxchain/validation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "xxchain/caps.hpp"
#include "xxchain/oracle.hpp"
#include "xxchain/spectrum.hpp"
#include "xxchain/states.hpp"
#include "xxchain/thermal.hpp"

namespace xxchain {

namespace {

struct Tracker {
  std::string name;
  double tolerance;
  double worst = 0.0;

  void observe(double err) { worst = std::max(worst, std::isnan(err) ? INFINITY : err); }
  CheckResult result() const { return {name, worst <= tolerance, worst, tolerance}; }
};

} // namespace

std::vector<double> validation_fields() { return {-1.2, -0.5, 0.0, 0.31, 0.5, 0.81, 1.2}; }
std::vector<double> validation_betas() { return {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}; }

std::vector<CheckResult> validate_chain(int n, double j) {
  require_within_cap(n, kOracleCap, "validate_chain");
  const auto dim = std::uint64_t{1} << n;

  Tracker spectrum{"eigenvalue multiset", 1e-10};
  Tracker projectors{"eigenvector projectors", 1e-8};
  Tracker residuals{"eigenvector residual", 1e-8};
  Tracker ortho{"eigenstate orthonormality", 1e-10};
  Tracker partition{"partition function sum", 1e-12};
  Tracker purity{"purity analytic vs dense", 1e-10};
  Tracker crossing{"crossing degeneracy", 1e-12};
  Tracker sector{"ground sector vs oracle", 0.0};

  std::vector<SpinBasisVector> states;
  std::vector<Eigen::VectorXd> dense_states;
  states.reserve(dim);
  for (std::uint64_t mask = 0; mask < dim; ++mask) {
    states.push_back(build_eigenstate(n, OccupationState::from_mask(n, mask)));
    dense_states.push_back(states.back().to_dense());
  }
  for (std::uint64_t a = 0; a < dim; ++a)
    for (std::uint64_t b = a; b < dim; ++b)
      ortho.observe(std::abs(states[a].dot(states[b]) - (a == b ? 1.0 : 0.0)));

  const EigenBasis basis(n);
  for (double field : validation_fields()) {
    const ChainParams params(n, j, field * j);
    const auto h = build_hamiltonian(params);
    const auto eig = diagonalize(h);
    auto energies = level_energies(params);

    auto sorted = energies;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint64_t i = 0; i < dim; ++i) spectrum.observe(std::abs(sorted[i] - eig.values(static_cast<Eigen::Index>(i))));

    for (std::uint64_t mask = 0; mask < dim; ++mask) {
      const auto& v = dense_states[mask];
      residuals.observe((h.matrix * v - energies[mask] * v).norm());
    }

    // degenerate groups of the oracle spectrum
    Eigen::Index start = 0;
    while (start < eig.values.size()) {
      Eigen::Index stop = start + 1;
      while (stop < eig.values.size() && eig.values(stop) - eig.values(stop - 1) < 1e-8) ++stop;
      const auto block = eig.vectors.middleCols(start, stop - start);
      Eigen::MatrixXd diff = block * block.transpose();
      const double lo = eig.values(start) - 1e-8;
      const double hi = eig.values(stop - 1) + 1e-8;
      for (std::uint64_t mask = 0; mask < dim; ++mask) {
        if (energies[mask] >= lo && energies[mask] <= hi)
          diff -= dense_states[mask] * dense_states[mask].transpose();
      }
      projectors.observe(diff.cwiseAbs().maxCoeff());
      start = stop;
    }

    const auto g = ground_sector(params);
    if (!g.degenerate) {
      Eigen::Index arg = 0;
      eig.vectors.col(0).cwiseAbs().maxCoeff(&arg);
      sector.observe(std::abs(std::popcount(static_cast<std::uint64_t>(arg)) - g.k));
    }

    for (double beta : validation_betas()) {
      const double b_scaled = beta / j;
      const double e_min = sorted.front();
      double direct = 0.0;
      for (double e : energies) direct += std::exp(-b_scaled * (e - e_min));
      const double log_direct = -b_scaled * e_min + std::log(direct);
      const double closed = log_partition_function(params, b_scaled);
      // relative error of Z equals the absolute error of log Z to first order
      partition.observe(std::abs(std::expm1(closed - log_direct)));

      const auto rho = thermal_density_matrix(params, b_scaled, basis);
      purity.observe(std::abs(purity_analytic(params, b_scaled) - purity_dense(rho)));
    }
  }

  for (double bk : crossing_fields(n, j).fields_b) {
    const ChainParams params(n, j, bk);
    const auto g = ground_sector(params);
    if (!g.degenerate) {
      crossing.observe(INFINITY);
      continue;
    }
    const double lower = ground_energy(params, g.k);
    const double upper = ground_energy(params, g.upper());
    crossing.observe(std::abs(lower - upper));
  }

  return {spectrum.result(),  projectors.result(), residuals.result(), ortho.result(),
          partition.result(), purity.result(),     crossing.result(),  sector.result()};
}

} // namespace xxchain
