#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "xxchain/caps.hpp"

namespace xxchain {

/// Physical configuration of an open XX chain in a transverse field.
/// Throws std::invalid_argument unless n >= 1 and j > 0.
struct ChainParams {
  int n;
  double j;
  double b;

  ChainParams(int n, double j, double b);
};

/// Occupation vector of the N fermion modes. Mode k (one-based) is
/// bit k-1; m() is the number of occupied modes, which is also the number
/// of flipped spins in the corresponding eigenstate.
class OccupationState {
public:
  explicit OccupationState(std::vector<std::uint8_t> bits);

  static OccupationState from_mask(int n, std::uint64_t mask);
  /// Modes 1..m occupied: the lowest-energy state of sector m.
  static OccupationState lowest(int n, int m);

  int size() const { return static_cast<int>(bits_.size()); }
  int m() const { return m_; }
  bool occupied(int k) const { return bits_.at(k - 1) != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  /// Requires size() <= 64.
  std::uint64_t mask() const;
  /// Occupied modes, one-based, ascending.
  std::vector<int> modes() const;

  friend bool operator==(const OccupationState&, const OccupationState&) = default;

private:
  std::vector<std::uint8_t> bits_;
  int m_ = 0;
};

/// Single-fermion energies, lambdas[k-1] = Lambda_k = 2B - 2J cos(pi k/(N+1)).
struct ModeSpectrum {
  std::vector<double> lambdas;
};

struct EnergyLevel {
  OccupationState occupation;
  double energy;
};

/// Ground-state level-crossing fields B_k = J cos(pi k/(N+1)), k = 1..N.
struct CrossingSet {
  std::vector<double> fields_b;
};

/// Number of occupied modes in the ground state. At an exact crossing the
/// sectors k and k+1 are degenerate and `degenerate` is set.
struct GroundSector {
  int k = 0;
  bool degenerate = false;

  int upper() const { return degenerate ? k + 1 : k; }
};

/// cos(pi k / (n+1)).
double mode_cosine(int n, int k);

/// Absolute tolerance under which B is treated as sitting on a crossing.
double crossing_tolerance(double j);

ModeSpectrum mode_energies(const ChainParams& params);

/// -(N - 2m)B - 2J sum_k alpha_k cos(pi k/(N+1)).
double eigenenergy(const ChainParams& params, const OccupationState& occ);

GroundSector ground_sector(const ChainParams& params);

CrossingSet crossing_fields(int n, double j = 1.0);

/// Energy of the lowest state in sector k (modes 1..k occupied).
double ground_energy(const ChainParams& params, int k);

/// Energies of all 2^N levels indexed by occupation mask.
std::vector<double> level_energies(const ChainParams& params, int cap = kEnumerationCap);

/// Lazy range over all 2^N levels in ascending occupation-mask order.
class LevelStream {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = EnergyLevel;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = EnergyLevel;

    iterator() = default;
    EnergyLevel operator*() const;
    iterator& operator++() { ++mask_; return *this; }
    iterator operator++(int) { auto t = *this; ++mask_; return t; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

  private:
    friend class LevelStream;
    iterator(const LevelStream* s, std::uint64_t mask) : stream_(s), mask_(mask) {}
    const LevelStream* stream_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, std::uint64_t{1} << n_}; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

private:
  friend LevelStream enumerate_levels(const ChainParams&, int);
  LevelStream(int n, double j, double b);
  int n_;
  double b_;
  std::vector<double> hop_;  // 2 J cos(pi k/(N+1))
};

/// Throws SizeError when N > cap.
LevelStream enumerate_levels(const ChainParams& params, int cap = kEnumerationCap);

/// log Z = beta N B + sum_k log(1 + exp(-beta Lambda_k)), evaluated stably.
/// beta must be finite and non-negative.
double log_partition_function(const ChainParams& params, double beta);
double partition_function(const ChainParams& params, double beta);

} // namespace xxchain
