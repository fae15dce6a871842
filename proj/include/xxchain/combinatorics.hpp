#pragma once

#include <cstdint>
#include <vector>

namespace xxchain {

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n. Exact for n <= 62.
std::uint64_t binomial(int n, int k);

/// Rank of a bitmask among all masks with the same popcount, ordered as
/// ascending integers (colexicographic order of the set bits). Zero-based.
std::uint64_t colex_rank(std::uint64_t mask);

/// Inverse of colex_rank: the rank-th (zero-based) n-bit mask with m set bits.
std::uint64_t colex_unrank(int n, int m, std::uint64_t rank);

/// All n-bit masks with m set bits, as ascending position tuples in
/// lexicographic order. Bit l-1 set means site (or mode) l is selected.
std::vector<std::uint64_t> lex_ordered_masks(int n, int m);

/// Ascending one-based positions of the set bits.
std::vector<int> mask_positions(std::uint64_t mask);

/// Mask with the given one-based positions set.
std::uint64_t positions_mask(const std::vector<int>& positions);

} // namespace xxchain
