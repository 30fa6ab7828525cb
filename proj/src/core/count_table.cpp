#include "core/count_table.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace colbn {

namespace {

// next[k] = prev[k-1] + (m k + c) prev[k] for one row step n-1 -> n.
void step_row(std::vector<Int>& row, unsigned n, const ColorParams& p) {
    std::vector<Int> next(n + 1);
    next[0] = row[0] * p.c;
    for (unsigned k = 1; k < n; ++k) {
        next[k] = row[k - 1];
        mpz_addmul_ui(next[k].get_mpz_t(), row[k].get_mpz_t(),
                      static_cast<unsigned long>(p.m) * k + p.c);
    }
    next[n] = 1;
    row = std::move(next);
}

}  // namespace

CountTable::CountTable(ColorParams params, unsigned n_max)
    : params_(params), n_max_(n_max) {
    entries_.resize(row_offset(n_max) + n_max + 1);
    totals_.resize(std::size_t(n_max) + 1);
    entries_[0] = 1;
    totals_[0] = 1;
    const unsigned long c = params_.c, m = params_.m;
    for (unsigned n = 1; n <= n_max; ++n) {
        const Int* prev = entries_.data() + row_offset(n - 1);
        Int* cur = entries_.data() + row_offset(n);
        cur[0] = prev[0] * c;
        for (unsigned k = 1; k < n; ++k) {
            cur[k] = prev[k - 1];
            mpz_addmul_ui(cur[k].get_mpz_t(), prev[k].get_mpz_t(), m * k + c);
        }
        cur[n] = 1;
        Int& t = totals_[n];
        for (unsigned k = 0; k <= n; ++k) t += cur[k];
    }
}

const Int& CountTable::at(unsigned n, unsigned k) const {
    if (n > n_max_ || k > n)
        throw std::out_of_range("CountTable::at: (n,k) outside triangle");
    return entries_[row_offset(n) + k];
}

Int CountTable::value(long long n, long long k) const {
    if (n < 0 || k < 0 || k > n || n > static_cast<long long>(n_max_)) return 0;
    return entries_[row_offset(static_cast<unsigned>(n)) + static_cast<std::size_t>(k)];
}

std::span<const Int> CountTable::row(unsigned n) const {
    if (n > n_max_) throw std::out_of_range("CountTable::row: n > n_max");
    return {entries_.data() + row_offset(n), std::size_t(n) + 1};
}

const Int& CountTable::total(unsigned n) const {
    if (n > n_max_) throw std::out_of_range("CountTable::total: n > n_max");
    return totals_[n];
}

void CountTable::write_csv(std::ostream& os) const {
    os << "n,k,T\n";
    for (unsigned n = 0; n <= n_max_; ++n)
        for (unsigned k = 0; k <= n; ++k)
            os << n << ',' << k << ',' << entries_[row_offset(n) + k].get_str() << '\n';
}

std::vector<Int> count_row(ColorParams params, unsigned n) {
    std::vector<Int> row{Int(1)};
    for (unsigned i = 1; i <= n; ++i) step_row(row, i, params);
    return row;
}

std::vector<Int> totals(ColorParams params, unsigned n_max) {
    std::vector<Int> out(std::size_t(n_max) + 1);
    out[0] = 1;
    std::vector<Int> row{Int(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        step_row(row, n, params);
        Int& t = out[n];
        for (const Int& v : row) t += v;
    }
    return out;
}

Int total(ColorParams params, unsigned n) {
    std::vector<Int> row = count_row(params, n);
    Int t = 0;
    for (const Int& v : row) t += v;
    return t;
}

}  // namespace colbn
