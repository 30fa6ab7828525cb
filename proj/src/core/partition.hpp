#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/types.hpp"

namespace colbn {

// One concrete colored B_n-partition. The element 0 is left implicit: the
// zero-block lists only its elements from [n] (empty means the zero-block
// is {0}, or absent -- the two are identified). Non-zero blocks are kept
// in ascending order of their minimum element, and every member list is
// sorted by element. Colors are 1-based indices: 1..c in the zero-block,
// 1..m elsewhere, with each block minimum pinned to color 1.
struct ColoredPartition {
    using Member = std::pair<unsigned, unsigned>;  // (element, color)

    unsigned n = 0;
    std::vector<Member> zero_block;
    std::vector<std::vector<Member>> blocks;

    bool operator==(const ColoredPartition&) const = default;
};

// Checks every structural invariant: exact cover of [n], color ranges,
// minimum-element color 1, sortedness, block ordering by minima.
bool validate(ColorParams params, const ColoredPartition& p);

// Canonical text form: the zero-block first as "0" or "0:(e,c),(e,c)...",
// then the non-zero blocks as "(e,c),(e,c)..." joined with "/".
// Example: "0:(1,2)/(2,1),(3,2)".
std::string to_text(const ColoredPartition& p);

// Parses the canonical text form; throws std::invalid_argument on any
// deviation from it. The result is structurally well-formed but not
// necessarily valid for a given (c,m) -- run validate for that.
ColoredPartition parse_text(std::string_view text);

// Every (c,m)-colored B_n-partition exactly once, ordered by the zero-block
// first / blocks-by-minima enumeration of the underlying set partitions.
// Rejects n > kBruteForceEnumerateCap.
std::vector<ColoredPartition> brute_force_enumerate(ColorParams params, unsigned n);

}  // namespace colbn
