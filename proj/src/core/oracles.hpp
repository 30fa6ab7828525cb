#pragma once

#include <functional>
#include <span>
#include <vector>

#include "core/types.hpp"

namespace colbn {

// Independent routes to T_n, used to cross-verify the recurrence table.

// Stirling number of the second kind via the standard triangle
// S(n,k) = S(n-1,k-1) + k S(n-1,k); zero outside 0 <= k <= n, S(0,0) = 1.
Int stirling2(unsigned n, unsigned k);

// T_n = sum_{k=0}^n C(n,k) c^{n-k} sum_{j=0}^k m^{k-j} S(k,j).
// Rolling rows; O(n^2) time, O(n) memory.
Int closed_form_total(ColorParams params, unsigned n);

// Coefficients of F(z) = exp((e^{mz}-1)/m + cz) as exact rationals, via
// series exponentiation of the truncated argument polynomial. Returns
// n! [z^n] F(z) for n = 0..n_max; throws std::logic_error if any value
// comes out non-integral (an implementation bug, never valid input).
std::vector<Int> egf_series_totals(ColorParams params, unsigned n_max);

inline constexpr unsigned kBruteForceTotalCap = 10;
inline constexpr unsigned kBruteForceEnumerateCap = 7;

// Sums c^(zero-block size - 1) * prod m^(block size - 1) over all set
// partitions of [n] u {0}. Rejects n > kBruteForceTotalCap.
Int brute_force_total(ColorParams params, unsigned n);

// Visits every set partition of {0,...,n} (n+1 elements) encoded as a
// restricted growth string: code[i] is the block index of element i,
// code[0] = 0, so block 0 is the zero-block and blocks 1.. are ordered
// by their minimum element.
void for_each_set_partition(unsigned n,
                            const std::function<void(std::span<const unsigned>)>& visit);

}  // namespace colbn
