#include "core/sampler.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace colbn {

namespace {

void check_table(const CountTable& table, unsigned n) {
    if (n > table.n_max())
        throw std::out_of_range("sampler: table does not extend to n");
}

void unrank_level(const CountTable& table, unsigned level, unsigned k, Int r,
                  ColoredPartition& p) {
    if (level == 0) return;  // r == 0 by construction
    const unsigned c = table.params().c, m = table.params().m;
    const Int singleton_count = table.value(level - 1, static_cast<long long>(k) - 1);
    if (r < singleton_count) {
        unrank_level(table, level - 1, k - 1, std::move(r), p);
        p.blocks.push_back({{level, 1u}});  // level is the maximum: minima stay ascending
        return;
    }
    Int u = r - singleton_count;
    const Int& group = table.at(level - 1, k);
    Int d_big, s;
    mpz_fdiv_qr(d_big.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), group.get_mpz_t());
    const unsigned long d = d_big.get_ui();  // d < c + m k
    unrank_level(table, level - 1, k, std::move(s), p);
    if (d < c) {
        p.zero_block.emplace_back(level, static_cast<unsigned>(d) + 1);
    } else {
        const unsigned long e = d - c;
        p.blocks[e / m].emplace_back(level, static_cast<unsigned>(e % m) + 1);
    }
}

}  // namespace

ColoredPartition unrank(const CountTable& table, unsigned n, const Int& rank_value) {
    check_table(table, n);
    if (rank_value < 0 || rank_value >= table.total(n))
        throw std::out_of_range("unrank: rank outside [0, T_n)");
    Int r = rank_value;
    unsigned k = 0;
    while (r >= table.at(n, k)) {
        r -= table.at(n, k);
        ++k;
    }
    ColoredPartition p;
    p.n = n;
    unrank_level(table, n, k, std::move(r), p);
    return p;
}

Int rank(const CountTable& table, const ColoredPartition& p) {
    check_table(table, p.n);
    if (!validate(table.params(), p))
        throw std::invalid_argument("rank: partition fails validation");
    const unsigned c = table.params().c, m = table.params().m;

    // Peel elements n, n-1, ..., 1 off a working copy, accumulating the
    // local rank of each insertion decision from the inside out.
    ColoredPartition w = p;
    Int r = 0;
    for (unsigned level = p.n; level >= 1; --level) {
        unsigned k = static_cast<unsigned>(w.blocks.size());
        if (!w.zero_block.empty() && w.zero_block.back().first == level) {
            const unsigned long d = w.zero_block.back().second - 1;
            w.zero_block.pop_back();
            r += (table.value(level - 1, static_cast<long long>(k) - 1)) +
                 Int(d) * table.at(level - 1, k);
        } else {
            // level is the maximum element, so it sits at the back of its block.
            std::size_t j = w.blocks.size();
            while (j > 0 && w.blocks[j - 1].back().first != level) --j;
            std::vector<ColoredPartition::Member>& block = w.blocks[j - 1];
            if (block.size() == 1) {
                // singleton: only valid as the final block with color 1
                w.blocks.pop_back();
                // segment offset 0: r accumulates nothing
            } else {
                const unsigned long e =
                    (static_cast<unsigned long>(j) - 1) * m + (block.back().second - 1);
                block.pop_back();
                r += table.value(level - 1, static_cast<long long>(k) - 1) +
                     Int(c + e) * table.at(level - 1, k);
            }
        }
    }
    // Offset of the k-group holding p.
    for (unsigned k = 0; k < p.blocks.size(); ++k) r += table.at(p.n, k);
    return r;
}

namespace {

Int draw_below(SplitMix64& rng, const Int& bound, std::size_t bits) {
    // bits = ceil(log2 bound): draw bits-wide words, reject values >= bound.
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_bits = bits % 64 ? unsigned(bits % 64) : 64;
    const std::uint64_t top_mask =
        top_bits == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << top_bits) - 1);
    std::vector<std::uint64_t> buf(words);
    Int value;
    for (;;) {
        for (std::size_t i = 0; i < words; ++i) buf[i] = rng.next();
        buf[words - 1] &= top_mask;
        mpz_import(value.get_mpz_t(), words, -1 /*lsw first*/, sizeof(std::uint64_t),
                   0 /*native endian*/, 0, buf.data());
        if (value < bound) return value;
    }
}

}  // namespace

UniformSampler::UniformSampler(const CountTable& table, unsigned n, std::uint64_t seed)
    : table_(table), n_(n), rng_(seed), bound_(0), bits_(0) {
    check_table(table, n);
    bound_ = table.total(n);
    if (bound_ > 1) {
        Int top = bound_ - 1;
        bits_ = mpz_sizeinbase(top.get_mpz_t(), 2);
    }
}

std::pair<ColoredPartition, Int> UniformSampler::next() {
    Int r = bound_ > 1 ? draw_below(rng_, bound_, bits_) : Int(0);
    ColoredPartition p = unrank(table_, n_, r);
    return {std::move(p), std::move(r)};
}

ColoredPartition sample_uniform(const CountTable& table, unsigned n, std::uint64_t seed) {
    return UniformSampler(table, n, seed).next().first;
}

}  // namespace colbn
