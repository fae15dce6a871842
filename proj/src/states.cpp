#include "xxchain/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "xxchain/combinatorics.hpp"
#include "xxchain/error.hpp"

namespace xxchain {

namespace {

void check_index(int n, int v, const char* what) {
  if (v < 1 || v > n) {
    throw std::invalid_argument(std::string(what) + " index " + std::to_string(v) +
                                " outside [1, " + std::to_string(n) + "]");
  }
}

void check_ascending(std::span<const int> v, const char* what) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) throw std::invalid_argument(std::string(what) + " must be strictly ascending");
  }
}

// Determinant by Gaussian elimination with partial pivoting. Destroys a.
double lu_determinant(std::vector<double>& a, int m) {
  double det = 1.0;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int row = col + 1; row < m; ++row)
      if (std::abs(a[row * m + col]) > std::abs(a[pivot * m + col])) pivot = row;
    if (a[pivot * m + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < m; ++c) std::swap(a[col * m + c], a[pivot * m + c]);
      det = -det;
    }
    const double p = a[col * m + col];
    det *= p;
    for (int row = col + 1; row < m; ++row) {
      const double f = a[row * m + col] / p;
      if (f == 0.0) continue;
      for (int c = col + 1; c < m; ++c) a[row * m + c] -= f * a[col * m + c];
    }
  }
  return det;
}

double scaled_determinant(int n, std::span<const int> modes, std::span<const int> positions) {
  const int m = static_cast<int>(modes.size());
  if (m == 0) return 1.0;
  const double w = std::numbers::pi / (n + 1);
  std::vector<double> a(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) a[r * m + c] = std::sin(w * modes[r] * positions[c]);
  return std::pow(2.0 / (n + 1), 0.5 * m) * lu_determinant(a, m);
}

} // namespace

double sine_coefficient(int n, int k, int l) {
  if (n < 1) throw std::invalid_argument("chain size must be >= 1");
  check_index(n, k, "mode");
  check_index(n, l, "site");
  return std::sqrt(2.0 / (n + 1)) * std::sin(std::numbers::pi * k * l / (n + 1));
}

double slater_determinant(int n, std::span<const int> modes, std::span<const int> positions) {
  if (n < 1) throw std::invalid_argument("chain size must be >= 1");
  if (modes.size() != positions.size())
    throw std::invalid_argument("mode and position tuples differ in length");
  for (int k : modes) check_index(n, k, "mode");
  for (int l : positions) check_index(n, l, "site");
  return scaled_determinant(n, modes, positions);
}

double slater_amplitude(int n, std::span<const int> modes, std::span<const int> positions) {
  check_ascending(modes, "modes");
  check_ascending(positions, "positions");
  return slater_determinant(n, modes, positions);
}

SpinBasisVector::SpinBasisVector(int n, int m, std::vector<double> amplitudes)
    : n_(n), m_(m), amplitudes_(std::move(amplitudes)), masks_(lex_ordered_masks(n, m)) {
  if (m < 0 || m > n) throw std::invalid_argument("sector out of range");
  if (amplitudes_.size() != masks_.size())
    throw std::invalid_argument("expected C(N,m) = " + std::to_string(masks_.size()) + " amplitudes");
}

std::vector<int> SpinBasisVector::positions(std::size_t i) const { return mask_positions(masks_.at(i)); }

double SpinBasisVector::amplitude(std::span<const int> positions) const {
  check_ascending(positions, "positions");
  if (static_cast<int>(positions.size()) != m_) return 0.0;
  std::uint64_t mask = 0;
  for (int p : positions) {
    check_index(n_, p, "site");
    mask |= std::uint64_t{1} << (p - 1);
  }
  auto it = std::find(masks_.begin(), masks_.end(), mask);
  return it == masks_.end() ? 0.0 : amplitudes_[it - masks_.begin()];
}

double SpinBasisVector::norm() const {
  double s = 0.0;
  for (double a : amplitudes_) s += a * a;
  return std::sqrt(s);
}

double SpinBasisVector::dot(const SpinBasisVector& other) const {
  if (n_ != other.n_) throw std::invalid_argument("vectors belong to different chain sizes");
  if (m_ != other.m_) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) s += amplitudes_[i] * other.amplitudes_[i];
  return s;
}

Eigen::VectorXd SpinBasisVector::to_dense() const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(Eigen::Index{1} << n_);
  for (std::size_t i = 0; i < masks_.size(); ++i) v(static_cast<Eigen::Index>(masks_[i])) = amplitudes_[i];
  return v;
}

SpinBasisVector build_eigenstate(int n, const OccupationState& occ, int cap) {
  if (occ.size() != n)
    throw std::invalid_argument("occupation length does not match N=" + std::to_string(n));
  require_within_cap(n, cap, "build_eigenstate");
  const auto modes = occ.modes();
  const auto masks = lex_ordered_masks(n, occ.m());
  std::vector<double> amps(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const auto pos = mask_positions(masks[i]);
    amps[i] = scaled_determinant(n, modes, pos);
  }
  return SpinBasisVector(n, occ.m(), std::move(amps));
}

SpinBasisVector ground_state(int n, int k, int cap) {
  return build_eigenstate(n, OccupationState::lowest(n, k), cap);
}

std::uint64_t sector_index_to_label(std::uint64_t r, int m, int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("label indexing supports 1 <= N <= 62");
  if (m < 0 || m > n) throw std::invalid_argument("sector m=" + std::to_string(m) + " out of range");
  if (r < 1 || r > binomial(n, m))
    throw std::invalid_argument("rank r=" + std::to_string(r) + " outside [1, C(N,m)]");
  std::uint64_t l = r;
  for (int s = 0; s < m; ++s) l += binomial(n, s);
  return l;
}

SectorIndex label_to_sector_index(std::uint64_t l, int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("label indexing supports 1 <= N <= 62");
  if (l < 1 || l > (std::uint64_t{1} << n))
    throw std::invalid_argument("label l=" + std::to_string(l) + " outside [1, 2^N]");
  std::uint64_t rest = l;
  int m = 0;
  while (rest > binomial(n, m)) {
    rest -= binomial(n, m);
    ++m;
  }
  return {rest, m, l};
}

OccupationState occupation_for_label(std::uint64_t l, int n) {
  const auto idx = label_to_sector_index(l, n);
  return OccupationState::from_mask(n, colex_unrank(n, idx.m, idx.r - 1));
}

std::uint64_t label_for_occupation(const OccupationState& occ) {
  return sector_index_to_label(colex_rank(occ.mask()) + 1, occ.m(), occ.size());
}

Eigen::MatrixXd sector_eigenbasis(int n, int m) {
  require_within_cap(n, kEigenstateCap, "sector_eigenbasis");
  const auto positions = lex_ordered_masks(n, m);
  const auto dim = static_cast<Eigen::Index>(positions.size());
  Eigen::MatrixXd basis(dim, dim);
  std::vector<std::vector<int>> pos(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) pos[i] = mask_positions(positions[i]);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const auto modes = mask_positions(colex_unrank(n, m, static_cast<std::uint64_t>(r)));
    for (Eigen::Index i = 0; i < dim; ++i) basis(i, r) = scaled_determinant(n, modes, pos[i]);
  }
  return basis;
}

} // namespace xxchain
