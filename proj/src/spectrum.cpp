#include "xxchain/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "xxchain/error.hpp"

namespace xxchain {

namespace {

double softplus_neg(double x) {
  // log(1 + exp(-x))
  return std::max(-x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

void check_occupation(const ChainParams& params, const OccupationState& occ) {
  if (occ.size() != params.n) {
    throw std::invalid_argument("occupation length " + std::to_string(occ.size()) +
                                " does not match N=" + std::to_string(params.n));
  }
}

} // namespace

ChainParams::ChainParams(int n_, double j_, double b_) : n(n_), j(j_), b(b_) {
  if (n < 1) throw std::invalid_argument("chain size must be >= 1, got " + std::to_string(n));
  if (!(j > 0.0) || !std::isfinite(j)) throw std::invalid_argument("coupling J must be finite and > 0");
  if (!std::isfinite(b)) throw std::invalid_argument("field B must be finite");
}

OccupationState::OccupationState(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto v : bits_) {
    if (v > 1) throw std::invalid_argument("occupation entries must be 0 or 1");
    m_ += v;
  }
}

OccupationState OccupationState::from_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > 64) throw std::invalid_argument("mask form supports 0 <= N <= 64");
  if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("mask has bits beyond N");
  std::vector<std::uint8_t> bits(n);
  for (int k = 0; k < n; ++k) bits[k] = static_cast<std::uint8_t>((mask >> k) & 1U);
  return OccupationState(std::move(bits));
}

OccupationState OccupationState::lowest(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("sector m=" + std::to_string(m) + " out of range");
  std::vector<std::uint8_t> bits(n, 0);
  std::fill_n(bits.begin(), m, std::uint8_t{1});
  return OccupationState(std::move(bits));
}

std::uint64_t OccupationState::mask() const {
  if (size() > 64) throw std::invalid_argument("mask form supports N <= 64");
  std::uint64_t mask = 0;
  for (int k = 0; k < size(); ++k) mask |= std::uint64_t{bits_[k]} << k;
  return mask;
}

std::vector<int> OccupationState::modes() const {
  std::vector<int> out;
  out.reserve(m_);
  for (int k = 0; k < size(); ++k)
    if (bits_[k] != 0) out.push_back(k + 1);
  return out;
}

double mode_cosine(int n, int k) {
  return std::cos(std::numbers::pi * k / (n + 1));
}

double crossing_tolerance(double j) { return 1e-12 * std::max(1.0, std::abs(j)); }

ModeSpectrum mode_energies(const ChainParams& params) {
  ModeSpectrum out;
  out.lambdas.resize(params.n);
  for (int k = 1; k <= params.n; ++k)
    out.lambdas[k - 1] = 2.0 * params.b - 2.0 * params.j * mode_cosine(params.n, k);
  return out;
}

double eigenenergy(const ChainParams& params, const OccupationState& occ) {
  check_occupation(params, occ);
  double hop = 0.0;
  for (int k = 1; k <= params.n; ++k)
    if (occ.occupied(k)) hop += mode_cosine(params.n, k);
  return -(params.n - 2 * occ.m()) * params.b - 2.0 * params.j * hop;
}

GroundSector ground_sector(const ChainParams& params) {
  const double tol = crossing_tolerance(params.j);
  GroundSector out;
  for (int k = 1; k <= params.n; ++k) {
    const double bk = params.j * mode_cosine(params.n, k);
    if (std::abs(bk - params.b) <= tol) {
      out.degenerate = true;
    } else if (bk > params.b) {
      ++out.k;
    }
  }
  return out;
}

CrossingSet crossing_fields(int n, double j) {
  if (n < 1) throw std::invalid_argument("chain size must be >= 1");
  CrossingSet out;
  out.fields_b.resize(n);
  for (int k = 1; k <= n; ++k) out.fields_b[k - 1] = j * mode_cosine(n, k);
  return out;
}

double ground_energy(const ChainParams& params, int k) {
  if (k < 0 || k > params.n) {
    throw std::invalid_argument("sector k=" + std::to_string(k) + " outside [0, " +
                                std::to_string(params.n) + "]");
  }
  double sum = 0.0;
  for (int l = 1; l <= k; ++l) sum += mode_cosine(params.n, l);
  return -(params.n - 2 * k) * params.b - 2.0 * params.j * sum;
}

LevelStream::LevelStream(int n, double j, double b) : n_(n), b_(b), hop_(n) {
  for (int k = 1; k <= n; ++k) hop_[k - 1] = 2.0 * j * mode_cosine(n, k);
}

EnergyLevel LevelStream::iterator::operator*() const {
  const int n = stream_->n_;
  const int m = std::popcount(mask_);
  double hop = 0.0;
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1)
    hop += stream_->hop_[std::countr_zero(rest)];
  return {OccupationState::from_mask(n, mask_), -(n - 2 * m) * stream_->b_ - hop};
}

LevelStream enumerate_levels(const ChainParams& params, int cap) {
  require_within_cap(params.n, std::min(cap, 62), "enumerate_levels");
  return LevelStream(params.n, params.j, params.b);
}

std::vector<double> level_energies(const ChainParams& params, int cap) {
  require_within_cap(params.n, std::min(cap, 62), "level_energies");
  const int n = params.n;
  std::vector<double> hop(n);
  for (int k = 1; k <= n; ++k) hop[k - 1] = 2.0 * params.j * mode_cosine(n, k);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> out(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const int m = std::popcount(mask);
    double h = 0.0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) h += hop[std::countr_zero(rest)];
    out[mask] = -(n - 2 * m) * params.b - h;
  }
  return out;
}

double log_partition_function(const ChainParams& params, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("beta must be finite and >= 0");
  double log_z = beta * params.n * params.b;
  for (double lambda : mode_energies(params).lambdas) log_z += softplus_neg(beta * lambda);
  return log_z;
}

double partition_function(const ChainParams& params, double beta) {
  return std::exp(log_partition_function(params, beta));
}

} // namespace xxchain
