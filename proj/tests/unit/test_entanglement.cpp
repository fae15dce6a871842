#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "test_util.hpp"
#include "xxchain/entanglement.hpp"
#include "xxchain/error.hpp"

using namespace xxchain;

namespace {

// |psi-> = (|up,down> - |down,up>)/sqrt2; index bit 0 = site 1 flipped.
DensityMatrix singlet() {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
  v(0b10) = 1.0 / std::sqrt(2.0);
  v(0b01) = -1.0 / std::sqrt(2.0);
  return DensityMatrix(2, v * v.transpose());
}

const double kCriticalT = 1.0 / std::log(1.0 + std::sqrt(2.0));

} // namespace

TEST_CASE("bipartite split") {
  const auto s = BipartiteSplit::parse(4, "1,3|2,4");
  CHECK(s.sites_a == std::vector<int>{1, 3});
  CHECK(s.sites_b == std::vector<int>{2, 4});
  CHECK(s.to_string() == "1,3|2,4");
  CHECK(BipartiteSplit::halves(5).to_string() == "1,2|3,4,5");
  CHECK(BipartiteSplit::from_a(3, {2}).to_string() == "2|1,3");
  CHECK_THROWS_AS(BipartiteSplit::parse(4, "1,2|3"), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteSplit::parse(4, "1,2,3,4|"), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteSplit::parse(4, "1,2|2,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteSplit::parse(4, "1 2 3 4"), std::invalid_argument);
}

TEST_CASE("partial transpose") {
  SUBCASE("singlet has eigenvalue -1/2") {
    const auto pt = partial_transpose(singlet(), BipartiteSplit::halves(2));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pt);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-0.5));
    CHECK(pt.trace() == doctest::Approx(1.0));
    CHECK(negativity(singlet(), BipartiteSplit::halves(2)) == doctest::Approx(0.5));
  }
  SUBCASE("maximally mixed state is unchanged") {
    const DensityMatrix mixed(2, Eigen::MatrixXd::Identity(4, 4) / 4.0);
    CHECK((partial_transpose(mixed, BipartiteSplit::halves(2)) - mixed.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(negativity(mixed, BipartiteSplit::halves(2)) == 0.0);
  }
  SUBCASE("product states keep their spectrum") {
    for (int trial = 0; trial < 10; ++trial) {
      // random real 2x2 and 4x4 states: A on site 1, B on sites 2-3
      Eigen::MatrixXd ga = Eigen::MatrixXd::Random(2, 2), gb = Eigen::MatrixXd::Random(4, 4);
      Eigen::MatrixXd ra = ga * ga.transpose(), rb = gb * gb.transpose();
      ra /= ra.trace();
      rb /= rb.trace();
      // site l is bit l-1, so B (sites 2,3) occupies the high bits
      Eigen::MatrixXd prod(8, 8);
      for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) prod(r, c) = ra(r & 1, c & 1) * rb(r >> 1, c >> 1);
      const DensityMatrix rho(3, prod);
      const auto split = BipartiteSplit::from_a(3, {1});
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> before(prod), after(partial_transpose(rho, split));
      CHECK((before.eigenvalues() - after.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(negativity(rho, split) == 0.0);
    }
  }
  SUBCASE("negativity does not depend on which side is transposed") {
    for (int n = 2; n <= 6; ++n) {
      const ChainParams p(n, 1.0, xxtest::uniform(-0.8, 0.8));
      const auto rho = thermal_density_matrix(p, xxtest::uniform(0.5, 10.0));
      const auto split = BipartiteSplit::halves(n);
      CHECK(std::abs(negativity(rho, split) - negativity(rho, split.swapped())) < 1e-12);
    }
  }
  CHECK_THROWS_AS(partial_transpose(DensityMatrix(11, Eigen::MatrixXd::Zero(2048, 2048)), BipartiteSplit::halves(11)),
                  SizeError);
}

TEST_CASE("two-qubit separability") {
  CHECK(two_qubit_separable(0.25, 0.25, 0.25, 0.25));
  CHECK_FALSE(two_qubit_separable(0.0, 1.0, 0.0, 0.0));
  CHECK(two_qubit_separable(0.25, 0.5, 0.0, 0.25));  // boundary 4 p1 p4 = (p2-p3)^2
  CHECK_THROWS_AS(two_qubit_separable(0.5, 0.5, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(two_qubit_separable(-0.1, 0.5, 0.5, 0.1), std::invalid_argument);

  SUBCASE("populations identify singlet and triplet") {
    // at low T and B=0 the triplet (energy -J) dominates
    const auto p = two_qubit_populations(ChainParams(2, 1.0, 0.0), 20.0);
    CHECK(p.triplet > 0.999);
    const auto q = two_qubit_populations(ChainParams(2, 1.0, 0.2), 0.9);
    CHECK(q.up_up + q.singlet + q.triplet + q.down_down == doctest::Approx(1.0));
    CHECK(q.triplet / q.singlet == doctest::Approx(std::exp(0.9 * 2.0)));
  }
  SUBCASE("thermal populations straddle the boundary at the critical temperature") {
    for (double b : {0.0, 0.3, 0.7, 1.5}) {
      const ChainParams params(2, 1.0, b);
      const auto cold = two_qubit_populations(params, 1.0 / (kCriticalT * (1 - 1e-6)));
      const auto hot = two_qubit_populations(params, 1.0 / (kCriticalT * (1 + 1e-6)));
      CHECK_FALSE(two_qubit_separable(cold.up_up, cold.singlet, cold.triplet, cold.down_down));
      CHECK(two_qubit_separable(hot.up_up, hot.singlet, hot.triplet, hot.down_down));
    }
  }
  SUBCASE("PPT criterion agrees with the population condition") {
    const auto split = BipartiteSplit::halves(2);
    for (double b = -1.5; b <= 1.5; b += 0.25) {
      for (double t = 0.05; t < 3.0; t += 0.1) {
        if (std::abs(t - kCriticalT) < 1e-3) continue;
        const ChainParams p(2, 1.0, b);
        const auto pops = two_qubit_populations(p, 1.0 / t);
        const bool separable = two_qubit_separable(pops.up_up, pops.singlet, pops.triplet, pops.down_down);
        const double neg = negativity(thermal_density_matrix(p, 1.0 / t), split);
        // X-state partial transpose: the {upup, downdown} block has diagonal
        // p1, p4 and off-diagonal (p3 - p2) / 2.
        const double c = 0.5 * (pops.triplet - pops.singlet);
        const double lowest = 0.5 * (pops.up_up + pops.down_down) -
                              std::hypot(0.5 * (pops.up_up - pops.down_down), c);
        CHECK(std::abs(neg - std::max(0.0, -lowest)) < 1e-12);
        if (std::abs(lowest) > 1e-10) CHECK((neg > 0.0) == !separable);
      }
    }
  }
  SUBCASE("separable above kT = 2") {
    for (double b : {-0.5, 0.0, 0.9}) {
      CHECK(negativity(thermal_density_matrix(ChainParams(2, 1.0, b), 0.5), BipartiteSplit::halves(2)) == 0.0);
    }
  }
}

TEST_CASE("critical temperature") {
  for (double b : {0.0, 0.3, 0.7, 1.5, -2.0}) {
    const double t = critical_temperature_two_qubit(ChainParams(2, 1.0, b));
    CHECK(std::abs(t - kCriticalT) < 1e-10);
  }
  CHECK(std::abs(critical_temperature_two_qubit(ChainParams(2, 1.0, 0.0)) - 1.134593) < 1e-6);
  for (double j : {0.5, 2.0, 3.7})
    CHECK(std::abs(critical_temperature_two_qubit(ChainParams(2, j, 0.4)) - j * kCriticalT) < 1e-8 * j);
  CHECK_THROWS_AS(critical_temperature_two_qubit(ChainParams(3, 1.0, 0.0)), std::invalid_argument);
}
