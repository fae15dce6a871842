#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "xxchain/caps.hpp"
#include "xxchain/spectrum.hpp"

namespace xxchain {

/// Element S_l^k = sqrt(2/(N+1)) sin(pi k l/(N+1)) of the orthogonal sine
/// transform taking site operators to mode operators.
double sine_coefficient(int n, int k, int l);

/// Spin-basis amplitude of the Slater determinant with the given occupied
/// modes on the given flipped-spin positions:
///   (2/(N+1))^{m/2} det[ sin(pi p_a l_b/(N+1)) ]_{a,b}.
/// Both tuples must be strictly ascending, one-based, of equal length.
double slater_amplitude(int n, std::span<const int> modes, std::span<const int> positions);

/// Same determinant without the ordering requirement. Swapping two modes or
/// two positions flips the sign; repeated entries give zero.
double slater_determinant(int n, std::span<const int> modes, std::span<const int> positions);

/// Sector-m eigenstate in the spin basis. Amplitudes are stored over the
/// C(N,m) ascending flipped-spin tuples in lexicographic order.
class SpinBasisVector {
public:
  SpinBasisVector(int n, int m, std::vector<double> amplitudes);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const double> amplitudes() const { return amplitudes_; }

  /// One-based flipped positions of the i-th entry.
  std::vector<int> positions(std::size_t i) const;
  /// Spin product-basis index of the i-th entry: bit l-1 set when site l is down.
  std::uint64_t basis_index(std::size_t i) const { return masks_[i]; }
  /// Amplitude of an ascending position tuple (zero if the tuple is not in sector m).
  double amplitude(std::span<const int> positions) const;

  double norm() const;
  double dot(const SpinBasisVector& other) const;
  /// Embedding into the full 2^N spin product basis.
  Eigen::VectorXd to_dense() const;

private:
  int n_;
  int m_;
  std::vector<double> amplitudes_;
  std::vector<std::uint64_t> masks_;
};

SpinBasisVector build_eigenstate(int n, const OccupationState& occ, int cap = kEigenstateCap);

/// Lowest state of sector k: modes 1..k occupied.
SpinBasisVector ground_state(int n, int k, int cap = kEigenstateCap);

/// Position of an eigenstate inside the magnetization-sector decomposition.
/// l = r + sum_{s<m} C(N,s); r ranks the sector's occupation vectors read
/// as ascending binary integers. All indices one-based.
struct SectorIndex {
  std::uint64_t r;
  int m;
  std::uint64_t l;
};

std::uint64_t sector_index_to_label(std::uint64_t r, int m, int n);
SectorIndex label_to_sector_index(std::uint64_t l, int n);

OccupationState occupation_for_label(std::uint64_t l, int n);
std::uint64_t label_for_occupation(const OccupationState& occ);

/// All eigenvectors of one magnetization sector as a C(N,m) x C(N,m)
/// matrix: row i is the i-th lexicographic position tuple, column r-1 is
/// the occupation of within-sector rank r.
Eigen::MatrixXd sector_eigenbasis(int n, int m);

} // namespace xxchain
