#include "xxchain/limits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xxchain/spectrum.hpp"

namespace xxchain {

double thermo_energy_density(double b, double j) {
  if (!(j > 0.0)) throw std::invalid_argument("coupling J must be > 0");
  const double x = b / j;
  // saturated branch; also covers |x| within 1e-12 of 1
  if (std::abs(x) >= 1.0 - 1e-12) return -std::abs(b);
  const double pi = std::numbers::pi;
  return j * (2.0 / pi) * (x * (std::acos(x) - pi / 2.0) - std::sqrt(1.0 - x * x));
}

double finite_size_energy_density(int n, double b, double j) {
  const ChainParams params(n, j, b);
  return ground_energy(params, ground_sector(params).k) / n;
}

double crossing_density(double omega) {
  if (!(omega > 0.0 && omega < 1.0)) throw std::invalid_argument("omega must lie in (0, 1)");
  return std::cos(std::numbers::pi * omega);
}

std::vector<ConvergenceRow> convergence_report(double b, std::span<const int> sizes, double j) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(sizes.size());
  const double limit = thermo_energy_density(b, j);
  for (int n : sizes) {
    const double e = finite_size_energy_density(n, b, j);
    rows.push_back({n, b, e, limit, std::abs(e - limit)});
  }
  return rows;
}

} // namespace xxchain
