#include "xxchain/combinatorics.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace xxchain {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    r = r / i * (n - k + i) + r % i * (n - k + i) / i;
  }
  return r;
}

std::uint64_t colex_rank(std::uint64_t mask) {
  std::uint64_t rank = 0;
  int taken = 0;
  while (mask != 0) {
    const int pos = std::countr_zero(mask);
    ++taken;
    rank += binomial(pos, taken);
    mask &= mask - 1;
  }
  return rank;
}

std::uint64_t colex_unrank(int n, int m, std::uint64_t rank) {
  if (m < 0 || m > n || rank >= binomial(n, m)) {
    throw std::invalid_argument("colex_unrank: rank " + std::to_string(rank) +
                                " out of range for C(" + std::to_string(n) + "," +
                                std::to_string(m) + ")");
  }
  std::uint64_t mask = 0;
  int pos = n - 1;
  for (int i = m; i >= 1; --i) {
    while (binomial(pos, i) > rank) --pos;
    rank -= binomial(pos, i);
    mask |= std::uint64_t{1} << pos;
    --pos;
  }
  return mask;
}

std::vector<std::uint64_t> lex_ordered_masks(int n, int m) {
  std::vector<std::uint64_t> out;
  if (m < 0 || m > n) return out;
  out.reserve(binomial(n, m));
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int v : idx) mask |= std::uint64_t{1} << v;
    out.push_back(mask);
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<int> mask_positions(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(std::popcount(mask));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t positions_mask(const std::vector<int>& positions) {
  std::uint64_t mask = 0;
  for (int p : positions) {
    if (p < 1 || p > 64) throw std::invalid_argument("position out of range: " + std::to_string(p));
    mask |= std::uint64_t{1} << (p - 1);
  }
  return mask;
}

} // namespace xxchain
