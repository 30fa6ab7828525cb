#include "core/oracles.hpp"

#include <stdexcept>
#include <string>

namespace colbn {

Int stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (n == 0) return 1;  // S(0,0)
    if (k == 0) return 0;
    std::vector<Int> row{Int(1)};  // row 0
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Int> next(i + 1);
        next[0] = 0;
        for (unsigned j = 1; j < i; ++j) {
            next[j] = row[j - 1];
            mpz_addmul_ui(next[j].get_mpz_t(), row[j].get_mpz_t(), j);
        }
        next[i] = 1;
        row = std::move(next);
    }
    return row[k];
}

Int closed_form_total(ColorParams params, unsigned n) {
    // D_k = sum_j m^{k-j} S(k,j), accumulated while rolling the Stirling rows.
    std::vector<Int> dowling(std::size_t(n) + 1);
    std::vector<Int> srow{Int(1)};
    dowling[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<Int> next(k + 1);
        next[0] = 0;
        for (unsigned j = 1; j < k; ++j) {
            next[j] = srow[j - 1];
            mpz_addmul_ui(next[j].get_mpz_t(), srow[j].get_mpz_t(), j);
        }
        next[k] = 1;
        srow = std::move(next);
        Int mp = 1;
        for (unsigned j = k + 1; j-- > 0;) {  // j = k down to 0, m^{k-j}
            dowling[k] += mp * srow[j];
            mp *= params.m;
        }
    }
    // Binomial row C(n,k) by the multiplicative recurrence (exact divisions).
    Int binom = 1, cpow = 1, out = 0;
    std::vector<Int> cpows(std::size_t(n) + 1);
    for (unsigned k = 0; k <= n; ++k) {
        cpows[k] = cpow;
        cpow *= params.c;
    }
    for (unsigned k = 0; k <= n; ++k) {
        out += binom * cpows[n - k] * dowling[k];
        if (k < n) {
            binom *= n - k;
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
        }
    }
    return out;
}

std::vector<Int> egf_series_totals(ColorParams params, unsigned n_max) {
    // Argument polynomial g(z) = (e^{mz}-1)/m + cz truncated at z^{n_max}:
    // g_1 = 1 + c, g_j = m^{j-1}/j! for j >= 2.
    std::vector<Rat> g(std::size_t(n_max) + 1);
    if (n_max >= 1) g[1] = Rat(params.c + 1);
    Int mpow = params.m, fact = 2;
    for (unsigned j = 2; j <= n_max; ++j) {
        g[j] = Rat(mpow) / Rat(fact);
        g[j].canonicalize();
        mpow *= params.m;
        fact *= j + 1;
    }
    // exp of a power series with f_0 = 1: n f_n = sum_{k=1}^n k g_k f_{n-k}.
    std::vector<Rat> f(std::size_t(n_max) + 1);
    f[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        Rat acc = 0;
        for (unsigned k = 1; k <= n; ++k) acc += Rat(k) * g[k] * f[n - k];
        f[n] = acc / Rat(n);
        f[n].canonicalize();
    }
    std::vector<Int> out(std::size_t(n_max) + 1);
    Int nfact = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) nfact *= n;
        Rat v = Rat(nfact) * f[n];
        v.canonicalize();
        if (v.get_den() != 1)
            throw std::logic_error("egf_series_totals: non-integral coefficient at n=" +
                                   std::to_string(n));
        out[n] = v.get_num();
    }
    return out;
}

namespace {

void visit_partitions_rec(std::vector<unsigned>& code, unsigned pos, unsigned n_blocks,
                          const std::function<void(std::span<const unsigned>)>& visit) {
    if (pos == code.size()) {
        visit(code);
        return;
    }
    for (unsigned b = 0; b <= n_blocks; ++b) {
        code[pos] = b;
        visit_partitions_rec(code, pos + 1, b == n_blocks ? n_blocks + 1 : n_blocks, visit);
    }
}

}  // namespace

void for_each_set_partition(unsigned n,
                            const std::function<void(std::span<const unsigned>)>& visit) {
    std::vector<unsigned> code(std::size_t(n) + 1, 0);
    visit_partitions_rec(code, 1, 1, visit);
}

Int brute_force_total(ColorParams params, unsigned n) {
    if (n > kBruteForceTotalCap)
        throw std::invalid_argument("brute_force_total: n exceeds cap " +
                                    std::to_string(kBruteForceTotalCap));
    Int sum = 0;
    for_each_set_partition(n, [&](std::span<const unsigned> code) {
        std::vector<unsigned> size;
        for (unsigned b : code) {
            if (b >= size.size()) size.resize(b + 1, 0);
            ++size[b];
        }
        Int ways = 1;
        for (unsigned e = 1; e < size[0]; ++e) ways *= params.c;
        for (unsigned b = 1; b < size.size(); ++b)
            for (unsigned e = 1; e < size[b]; ++e) ways *= params.m;
        sum += ways;
    });
    return sum;
}

}  // namespace colbn
