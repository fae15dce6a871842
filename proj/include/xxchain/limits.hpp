#pragma once

#include <span>
#include <vector>

namespace xxchain {

/// Ground-state energy per spin of the infinite chain,
///   (2/pi) [b (arccos b - pi/2) - sqrt(1 - b^2)]   for |b| < 1,
///   -|b|                                            for |b| >= 1,
/// with b measured in units of j. Returns j * f(b / j).
double thermo_energy_density(double b, double j = 1.0);

/// Exact ground-state energy per spin of the N-site chain.
double finite_size_energy_density(int n, double b, double j = 1.0);

/// Continuum crossing field cos(pi omega), 0 < omega < 1.
double crossing_density(double omega);

struct ConvergenceRow {
  int n;
  double b;
  double energy_density;
  double limit_value;
  double deviation;
};

std::vector<ConvergenceRow> convergence_report(double b, std::span<const int> sizes, double j = 1.0);

} // namespace xxchain
