#include <doctest.h>

#include <bit>
#include <cmath>
#include <stdexcept>

#include "test_util.hpp"
#include "xxchain/error.hpp"
#include "xxchain/oracle.hpp"
#include "xxchain/spectrum.hpp"

using namespace xxchain;
using doctest::Approx;

TEST_CASE("chain parameters are validated") {
  CHECK_THROWS_AS(ChainParams(0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ChainParams(3, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ChainParams(3, -1.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(ChainParams(3, 1.0, -2.0));
}

TEST_CASE("occupation state") {
  const auto occ = OccupationState::from_mask(4, 0b0101);
  CHECK(occ.m() == 2);
  CHECK(occ.modes() == std::vector<int>{1, 3});
  CHECK(occ.mask() == 0b0101);
  CHECK(OccupationState::lowest(4, 3).mask() == 0b0111);
  CHECK_THROWS_AS(OccupationState({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(OccupationState::from_mask(2, 0b100), std::invalid_argument);
}

TEST_CASE("mode energies") {
  SUBCASE("single spin") {
    const auto s = mode_energies(ChainParams(1, 1.0, 0.37));
    REQUIRE(s.lambdas.size() == 1);
    CHECK(s.lambdas[0] == Approx(0.74).epsilon(1e-15));
  }
  SUBCASE("two spins at zero field") {
    const auto s = mode_energies(ChainParams(2, 1.0, 0.0));
    CHECK(s.lambdas[0] == Approx(-1.0).epsilon(1e-14));
    CHECK(s.lambdas[1] == Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("four spins at zero field") {
    // 2 cos(k pi / 5) = golden-ratio values
    const auto s = mode_energies(ChainParams(4, 1.0, 0.0));
    const double expected[] = {-1.6180339887498949, -0.6180339887498949, 0.6180339887498949, 1.6180339887498949};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(s.lambdas[k] - expected[k]) < 1e-14);
  }
  SUBCASE("strictly increasing for J > 0") {
    for (int trial = 0; trial < 50; ++trial) {
      const ChainParams p(xxtest::uniform_int(2, 30), xxtest::uniform(0.1, 3.0), xxtest::uniform(-2.0, 2.0));
      const auto s = mode_energies(p);
      for (std::size_t k = 1; k < s.lambdas.size(); ++k) CHECK(s.lambdas[k] > s.lambdas[k - 1]);
    }
  }
  SUBCASE("particle-hole symmetry") {
    for (int trial = 0; trial < 50; ++trial) {
      const int n = xxtest::uniform_int(1, 25);
      const double j = xxtest::uniform(0.1, 3.0);
      const double b = xxtest::uniform(-2.0, 2.0);
      const auto plus = mode_energies(ChainParams(n, j, b));
      const auto minus = mode_energies(ChainParams(n, j, -b));
      for (int k = 0; k < n; ++k) CHECK(std::abs(plus.lambdas[k] + minus.lambdas[n - 1 - k]) < 1e-12);
    }
  }
}

TEST_CASE("eigenenergy") {
  const int n = 5;
  for (double b : {-0.8, 0.0, 0.3, 1.7}) {
    const ChainParams p(n, 1.3, b);
    CHECK(eigenenergy(p, OccupationState::from_mask(n, 0)) == Approx(-n * b).epsilon(1e-14));
    CHECK(std::abs(eigenenergy(p, OccupationState::from_mask(n, 0b11111)) - n * b) < 1e-12);
    // equals sum of occupied mode energies minus N B
    const auto lambdas = mode_energies(p).lambdas;
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
      double expected = -n * b;
      for (int k = 0; k < n; ++k)
        if ((mask >> k) & 1U) expected += lambdas[k];
      CHECK(std::abs(eigenenergy(p, OccupationState::from_mask(n, mask)) - expected) < 1e-12);
    }
  }
  for (double b : {-1.0, 0.0, 0.4}) {
    CHECK(std::abs(eigenenergy(ChainParams(2, 1.0, b), OccupationState({1, 0})) + 1.0) < 1e-14);
  }
  CHECK_THROWS_AS(eigenenergy(ChainParams(3, 1.0, 0.0), OccupationState({1, 0})), std::invalid_argument);
}

TEST_CASE("ground sector and crossing fields") {
  CHECK(ground_sector(ChainParams(4, 1.0, 0.9)).k == 0);
  CHECK(ground_sector(ChainParams(4, 1.0, 0.5)).k == 1);
  CHECK(ground_sector(ChainParams(4, 1.0, 0.0)).k == 2);
  CHECK(ground_sector(ChainParams(4, 1.0, -0.9)).k == 4);
  CHECK_FALSE(ground_sector(ChainParams(4, 1.0, 0.0)).degenerate);

  const auto two = crossing_fields(2).fields_b;
  CHECK(two[0] == Approx(0.5).epsilon(1e-15));
  CHECK(two[1] == Approx(-0.5).epsilon(1e-15));
  const auto four = crossing_fields(4).fields_b;
  const double expected[] = {0.8090169943749475, 0.30901699437494745, -0.30901699437494745, -0.8090169943749475};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(four[k] - expected[k]) < 1e-15);
  CHECK(std::abs(crossing_fields(1).fields_b[0]) < 1e-16);
  CHECK(crossing_fields(3, 2.0).fields_b[0] == Approx(2.0 * std::cos(M_PI / 4)));

  for (int n = 1; n <= 15; ++n) {
    const auto f = crossing_fields(n).fields_b;
    for (int k = 0; k < n; ++k) CHECK(std::abs(f[k] + f[n - 1 - k]) < 1e-15);
  }

  SUBCASE("sector steps by one across every crossing, degenerate exactly on it") {
    for (int n = 1; n <= 12; ++n) {
      const double j = 1.7;
      const auto f = crossing_fields(n, j).fields_b;
      for (int k = 1; k <= n; ++k) {
        const double bk = f[k - 1];
        const auto above = ground_sector(ChainParams(n, j, bk + 1e-9));
        const auto below = ground_sector(ChainParams(n, j, bk - 1e-9));
        const auto at = ground_sector(ChainParams(n, j, bk));
        CHECK(above.k == k - 1);
        CHECK(below.k == k);
        CHECK(at.degenerate);
        CHECK(at.k == k - 1);
        CHECK(at.upper() == k);
        const ChainParams p(n, j, bk);
        CHECK(std::abs(ground_energy(p, k - 1) - ground_energy(p, k)) < 1e-12);
      }
    }
  }
}

TEST_CASE("ground energy") {
  for (double b : {-0.3, 0.0, 0.6}) {
    CHECK(ground_energy(ChainParams(4, 1.0, b), 0) == Approx(-4 * b));
    CHECK(std::abs(ground_energy(ChainParams(4, 1.0, b), 1) - (-2 * b - 1.6180339887498949)) < 1e-14);
    CHECK(std::abs(ground_energy(ChainParams(4, 1.0, b), 4) - 4 * b) < 1e-14);
  }
  CHECK_THROWS_AS(ground_energy(ChainParams(4, 1.0, 0.0), 5), std::invalid_argument);
  CHECK_THROWS_AS(ground_energy(ChainParams(4, 1.0, 0.0), -1), std::invalid_argument);
}

TEST_CASE("enumerate levels") {
  SUBCASE("single spin") {
    const auto stream = enumerate_levels(ChainParams(1, 1.0, 0.7));
    const std::vector<EnergyLevel> levels(stream.begin(), stream.end());
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].occupation.mask() == 0);
    CHECK(levels[0].energy == Approx(-0.7));
    CHECK(levels[1].energy == Approx(0.7));
  }
  SUBCASE("two spins at zero field, mask order") {
    const double expected[] = {0.0, -1.0, 1.0, 0.0};
    int i = 0;
    for (const auto& level : enumerate_levels(ChainParams(2, 1.0, 0.0))) {
      CHECK(level.occupation.mask() == static_cast<std::uint64_t>(i));
      CHECK(std::abs(level.energy - expected[i]) < 1e-14);
      ++i;
    }
    CHECK(i == 4);
  }
  SUBCASE("count and agreement with eigenenergy") {
    const ChainParams p(4, 0.8, 0.2);
    int count = 0;
    for (const auto& level : enumerate_levels(p)) {
      CHECK(std::abs(level.energy - eigenenergy(p, level.occupation)) < 1e-13);
      ++count;
    }
    CHECK(count == 16);
    CHECK(enumerate_levels(p).size() == 16);
  }
  CHECK_THROWS_AS(enumerate_levels(ChainParams(21, 1.0, 0.0)), SizeError);
  CHECK_THROWS_AS(level_energies(ChainParams(21, 1.0, 0.0)), SizeError);
  CHECK_NOTHROW(enumerate_levels(ChainParams(21, 1.0, 0.0), 21));
}

TEST_CASE("levels match the dense oracle") {
  // brute-force reference: the Pauli-built Hamiltonian
  for (int n = 1; n <= 10; ++n) {
    const int trials = n <= 7 ? 6 : 2;
    for (int t = 0; t < trials; ++t) {
      const ChainParams p(n, xxtest::uniform(0.3, 2.0), xxtest::uniform(-2.0, 2.0));
      const auto eig = diagonalize(build_hamiltonian(p));
      const auto levels = xxtest::sorted(level_energies(p));
      for (std::size_t i = 0; i < levels.size(); ++i)
        CHECK(std::abs(levels[i] - eig.values(static_cast<Eigen::Index>(i))) < 1e-10);
    }
  }
}

TEST_CASE("minimum level is the sector ground energy away from crossings") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = xxtest::uniform_int(1, 12);
    const ChainParams p(n, xxtest::uniform(0.2, 2.0), xxtest::uniform(-2.5, 2.5));
    const auto g = ground_sector(p);
    if (g.degenerate) continue;
    const auto e = level_energies(p);
    CHECK(std::abs(*std::min_element(e.begin(), e.end()) - ground_energy(p, g.k)) < 1e-12);
  }
}

TEST_CASE("every level in a sector has slope -(N - 2m) in B") {
  const int n = 6;
  const double db = 0.25;
  const auto lo = level_energies(ChainParams(n, 1.0, 0.1));
  const auto hi = level_energies(ChainParams(n, 1.0, 0.1 + db));
  for (std::uint64_t mask = 0; mask < lo.size(); ++mask) {
    const int m = std::popcount(mask);
    CHECK(std::abs((hi[mask] - lo[mask]) / db + (n - 2 * m)) < 1e-12);
  }
}

TEST_CASE("partition function") {
  for (int n : {1, 3, 7}) CHECK(partition_function(ChainParams(n, 1.0, 0.4), 0.0) == Approx(std::ldexp(1.0, n)));
  for (double beta : {0.1, 1.0, 3.0}) {
    const double b = 0.65;
    CHECK(partition_function(ChainParams(1, 1.0, b), beta) == Approx(2.0 * std::cosh(beta * b)).epsilon(1e-14));
  }
  // 2 + e + 1/e from the four levels {0, -1, 1, 0}
  CHECK(partition_function(ChainParams(2, 1.0, 0.0), 1.0) == Approx(5.086161269630487).epsilon(1e-14));

  SUBCASE("equals the Boltzmann sum over enumerated levels") {
    for (int trial = 0; trial < 60; ++trial) {
      const ChainParams p(xxtest::uniform_int(1, 12), xxtest::uniform(0.2, 2.0), xxtest::uniform(-2.0, 2.0));
      const double beta = xxtest::uniform(0.0, 4.0);
      double sum = 0.0;
      for (const auto& level : enumerate_levels(p)) sum += std::exp(-beta * level.energy);
      CHECK(std::abs(partition_function(p, beta) / sum - 1.0) < 1e-12);
    }
  }
  SUBCASE("log domain survives huge beta N B") {
    const ChainParams p(200, 1.0, 3.0);
    const double log_z = log_partition_function(p, 50.0);
    CHECK(std::isfinite(log_z));
    // ground energy -N B dominates
    CHECK(log_z == Approx(50.0 * 600.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(log_partition_function(ChainParams(2, 1.0, 0.0), -1.0), std::invalid_argument);
}
