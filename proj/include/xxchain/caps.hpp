#pragma once

#include <string_view>

namespace xxchain {

// Size caps, all in number of spins.
inline constexpr int kEnumerationCap = 20; // 2^N energies, no vectors
inline constexpr int kOracleCap = 12;      // dense Hamiltonian
inline constexpr int kEigenstateCap = 12;  // spin-basis eigenvectors
inline constexpr int kDenseCapDefault = 10;
inline constexpr int kDenseCapMax = 12;

/// Cap for dense density matrices. Defaults to kDenseCapDefault; the
/// XXCHAIN_DENSE_CAP environment variable overrides it (1..kDenseCapMax).
int dense_cap();

/// Validates an explicit cap override against kDenseCapMax.
int checked_dense_cap(int requested);

/// Throws SizeError when n > cap.
void require_within_cap(int n, int cap, std::string_view what);

} // namespace xxchain
