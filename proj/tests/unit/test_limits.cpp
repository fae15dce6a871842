#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "test_util.hpp"
#include "xxchain/limits.hpp"
#include "xxchain/spectrum.hpp"

using namespace xxchain;

namespace {

// Continuum reference: e(B) = -B + integral_0^1 min(0, 2B - 2cos(pi x)) dx,
// by composite Simpson on a fine grid (the integrand is continuous).
double quadrature_energy_density(double b) {
  const int steps = 200000;
  const double h = 1.0 / steps;
  auto f = [b](double x) { return std::min(0.0, 2.0 * b - 2.0 * std::cos(std::numbers::pi * x)); };
  double s = f(0.0) + f(1.0);
  for (int i = 1; i < steps; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return -b + s * h / 3.0;
}

} // namespace

TEST_CASE("thermodynamic energy density") {
  CHECK(thermo_energy_density(0.0) == doctest::Approx(-2.0 / std::numbers::pi).epsilon(1e-15));
  CHECK(thermo_energy_density(1.0) == -1.0);
  CHECK(thermo_energy_density(2.0) == -2.0);
  CHECK(thermo_energy_density(-2.0) == -2.0);
  CHECK(std::abs(thermo_energy_density(1.0 - 1e-9) + 1.0) < 1e-8);
  CHECK(thermo_energy_density(0.6, 2.0) == doctest::Approx(2.0 * thermo_energy_density(0.3)));

  SUBCASE("matches the continuum integral") {
    for (double b = -1.4; b <= 1.4; b += 0.1) CHECK(std::abs(thermo_energy_density(b) - quadrature_energy_density(b)) < 1e-9);
  }
  SUBCASE("even in B") {
    for (int i = 0; i < 100; ++i) {
      const double b = xxtest::uniform(-2.0, 2.0);
      CHECK(std::abs(thermo_energy_density(b) - thermo_energy_density(-b)) < 1e-14);
    }
  }
  SUBCASE("first derivative is (2/pi)(arccos B - pi/2)") {
    const double h = 1e-6;
    for (double b = -0.98; b <= 0.98; b += 0.02) {
      const double fd = (thermo_energy_density(b + h) - thermo_energy_density(b - h)) / (2 * h);
      CHECK(std::abs(fd - (2.0 / std::numbers::pi) * (std::acos(b) - std::numbers::pi / 2)) < 1e-6);
    }
  }
  SUBCASE("curvature diverges only at |B| = 1") {
    auto second = [](double b) {
      const double h = 1e-5;
      return (thermo_energy_density(b + h) - 2 * thermo_energy_density(b) + thermo_energy_density(b - h)) / (h * h);
    };
    double bounded = 0.0;
    for (double b = -0.9; b <= 0.9; b += 0.05) bounded = std::max(bounded, std::abs(second(b)));
    CHECK(bounded < 2.0);
    double previous = 0.0;
    for (double gap : {1e-1, 1e-2, 1e-3}) {
      const double c = std::abs(second(1.0 - gap));
      CHECK(c > previous);
      previous = c;
    }
    CHECK(previous > 10.0);
    CHECK(std::abs(second(-1.0 + 1e-3)) > 10.0);
    CHECK(std::abs(second(1.3)) < 1e-3);
  }
}

TEST_CASE("finite-size energy density") {
  CHECK(finite_size_energy_density(4, 0.9) == doctest::Approx(-0.9));
  CHECK(std::abs(finite_size_energy_density(10, 0.0) - (-0.602667418333227)) < 1e-12);
  CHECK(std::abs(finite_size_energy_density(50, 0.5) - thermo_energy_density(0.5)) < 0.02);
  CHECK(std::abs(finite_size_energy_density(2000, 0.3) - thermo_energy_density(0.3)) < 2e-3);
  CHECK(finite_size_energy_density(7, 3.0, 2.0) == doctest::Approx(-3.0));
}

TEST_CASE("crossing density") {
  CHECK(std::abs(crossing_density(0.5)) < 1e-16);
  CHECK(crossing_density(1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-15));
  double previous = 1.0;
  for (double w = 0.01; w < 1.0; w += 0.01) {
    CHECK(crossing_density(w) < previous);
    previous = crossing_density(w);
  }
  CHECK_THROWS_AS(crossing_density(0.0), std::invalid_argument);
  CHECK_THROWS_AS(crossing_density(1.0), std::invalid_argument);
}

TEST_CASE("convergence report") {
  const std::vector<int> sizes{10, 20, 40, 80, 160, 320, 640};
  for (double b : {-0.4, 0.123, 0.3, 0.5}) {
    const auto rows = convergence_report(b, sizes);
    REQUIRE(rows.size() == sizes.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].n == sizes[i]);
      CHECK(rows[i].deviation == std::abs(rows[i].energy_density - rows[i].limit_value));
      if (i > 0) CHECK(rows[i].deviation < rows[i - 1].deviation);
    }
  }
  const auto at_zero = convergence_report(0.0, std::vector<int>{10});
  CHECK(std::abs(at_zero[0].deviation - 0.03395235403435437) < 1e-12);

  SUBCASE("deviation bounded by C/N") {
    // C = 0.45 pinned from a measured maximum of 0.396 on this grid
    for (int n : {10, 20, 40, 80, 160, 320, 640, 1280}) {
      for (double b = -1.2; b <= 1.2; b += 0.05) CHECK(n * std::abs(finite_size_energy_density(n, b) - thermo_energy_density(b)) < 0.45);
    }
  }
  SUBCASE("crossing gaps shrink like 1/N") {
    for (int n : {50, 100, 200, 400}) {
      const auto f = crossing_fields(n).fields_b;
      double widest = 0.0;
      for (int k = 1; k < n; ++k) widest = std::max(widest, f[k - 1] - f[k]);
      CHECK(widest * n < std::numbers::pi);
    }
  }
}
