#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "core/types.hpp"

namespace colbn {

// Triangular table of T_{n,k}, the number of (c,m)-colored B_n-partitions
// with k non-zero-blocks, for 0 <= k <= n <= n_max. Built in one forward
// pass from
//
//     T_{n,k} = T_{n-1,k-1} + (m k + c) T_{n-1,k},   T_{0,0} = 1,
//
// and stored row-major triangular. Row sums T_n are cached. A completed
// table is immutable and safe for concurrent reads.
class CountTable {
public:
    CountTable(ColorParams params, unsigned n_max);

    ColorParams params() const { return params_; }
    unsigned n_max() const { return n_max_; }

    // T_{n,k}; requires k <= n <= n_max, throws std::out_of_range otherwise.
    const Int& at(unsigned n, unsigned k) const;

    // T_{n,k} extended by zero outside the triangle.
    Int value(long long n, long long k) const;

    // Row n as [T_{n,0}, ..., T_{n,n}].
    std::span<const Int> row(unsigned n) const;

    // T_n = sum_k T_{n,k}.
    const Int& total(unsigned n) const;

    // CSV dump with header "n,k,T", decimal values.
    void write_csv(std::ostream& os) const;

private:
    static std::size_t row_offset(unsigned n) {
        return std::size_t(n) * (n + 1) / 2;
    }

    ColorParams params_;
    unsigned n_max_;
    std::vector<Int> entries_;
    std::vector<Int> totals_;
};

// Row n only, keeping a single rolling row (O(n) memory instead of O(n^2)).
std::vector<Int> count_row(ColorParams params, unsigned n);

// T_0..T_{n_max} with a rolling row.
std::vector<Int> totals(ColorParams params, unsigned n_max);

// T_n.
Int total(ColorParams params, unsigned n);

}  // namespace colbn
