#pragma once

#include <cstdint>
#include <utility>

#include "core/count_table.hpp"
#include "core/partition.hpp"
#include "core/types.hpp"

namespace colbn {

// SplitMix64 (Steele, Lea & Flood; the java.util.SplittableRandom step
// function). Fixed constants, exact 64-bit wraparound semantics, so streams
// reproduce bit-for-bit across platforms. Derive independent worker streams
// with derive_seed(seed, worker_index).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t worker_index) {
    SplitMix64 g(seed + 0x9e3779b97f4a7c15ull * worker_index);
    return g.next();
}

// Bijection between {0, ..., T_n - 1} and the (c,m)-colored B_n-partitions.
//
// Ordering contract, mirroring the three summands of the counting
// recurrence: ranks are grouped by the number k of non-zero blocks,
// ascending, the k-group having size T_{n,k}; within a group, recursively
// on n, the first T_{n-1,k-1} ranks make n a singleton non-zero block
// (color 1); for the rest, with u the remaining local rank,
// d = u div T_{n-1,k} and s = u mod T_{n-1,k}, element n joins the
// zero-block with color d+1 when d < c, else, with e = d - c, it joins
// non-zero block number (e div m) + 1 (blocks by ascending minimum) with
// color (e mod m) + 1; recursion continues on s. Base: n = 0, rank 0, the
// empty partition.
//
// The table must extend to n and carry the same (c,m).
ColoredPartition unrank(const CountTable& table, unsigned n, const Int& rank_value);

// Inverse of unrank; requires validate(params, p). Throws
// std::invalid_argument on an invalid partition.
Int rank(const CountTable& table, const ColoredPartition& p);

// One uniform draw from the T_n partitions: an integer is drawn uniformly
// from [0, T_n) by rejection on ceil(log2 T_n)-bit words from SplitMix64,
// then unranked. Identical seeds give identical partitions.
ColoredPartition sample_uniform(const CountTable& table, unsigned n, std::uint64_t seed);

// Stream of uniform draws sharing one generator state.
class UniformSampler {
public:
    UniformSampler(const CountTable& table, unsigned n, std::uint64_t seed);

    // Returns the partition together with its rank.
    std::pair<ColoredPartition, Int> next();

private:
    const CountTable& table_;
    unsigned n_;
    SplitMix64 rng_;
    Int bound_;         // T_n
    std::size_t bits_;  // ceil(log2 T_n)
};

}  // namespace colbn
