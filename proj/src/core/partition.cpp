#include "core/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "core/oracles.hpp"

namespace colbn {

bool validate(ColorParams params, const ColoredPartition& p) {
    std::vector<char> seen(std::size_t(p.n) + 1, 0);
    auto claim = [&](unsigned e) {
        if (e < 1 || e > p.n || seen[e]) return false;
        seen[e] = 1;
        return true;
    };
    unsigned prev_e = 0;
    for (const auto& [e, col] : p.zero_block) {
        if (!claim(e) || col < 1 || col > params.c) return false;
        if (e <= prev_e) return false;  // sorted, no repeats
        prev_e = e;
    }
    unsigned prev_min = 0;
    for (const auto& block : p.blocks) {
        if (block.empty()) return false;
        unsigned block_min = block.front().first;
        if (block_min <= prev_min) return false;  // ascending minima
        prev_min = block_min;
        prev_e = 0;
        for (const auto& [e, col] : block) {
            if (!claim(e) || col < 1 || col > params.m) return false;
            if (e <= prev_e) return false;
            prev_e = e;
        }
        if (block.front().second != 1) return false;  // minimum takes color 1
    }
    for (unsigned e = 1; e <= p.n; ++e)
        if (!seen[e]) return false;
    return true;
}

std::string to_text(const ColoredPartition& p) {
    std::ostringstream os;
    os << '0';
    if (!p.zero_block.empty()) {
        os << ':';
        for (std::size_t i = 0; i < p.zero_block.size(); ++i) {
            if (i) os << ',';
            os << '(' << p.zero_block[i].first << ',' << p.zero_block[i].second << ')';
        }
    }
    for (const auto& block : p.blocks) {
        os << '/';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) os << ',';
            os << '(' << block[i].first << ',' << block[i].second << ')';
        }
    }
    return os.str();
}

namespace {

class TextReader {
public:
    explicit TextReader(std::string_view s) : s_(s) {}

    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail();
    }

    unsigned number() {
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
        if (ec != std::errc() || ptr == s_.data() + pos_) fail();
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return value;
    }

    bool done() const { return pos_ == s_.size(); }

    [[noreturn]] void fail() const {
        throw std::invalid_argument("parse_text: malformed partition at offset " +
                                    std::to_string(pos_));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::vector<ColoredPartition::Member> parse_members(TextReader& r) {
    std::vector<ColoredPartition::Member> members;
    do {
        r.expect('(');
        unsigned e = r.number();
        r.expect(',');
        unsigned col = r.number();
        r.expect(')');
        members.emplace_back(e, col);
    } while (r.eat(','));
    return members;
}

}  // namespace

ColoredPartition parse_text(std::string_view text) {
    TextReader r(text);
    ColoredPartition p;
    r.expect('0');
    if (r.eat(':')) p.zero_block = parse_members(r);
    while (r.eat('/')) p.blocks.push_back(parse_members(r));
    if (!r.done()) r.fail();
    unsigned max_e = 0, count = 0;
    for (const auto& [e, col] : p.zero_block) {
        max_e = std::max(max_e, e);
        ++count;
    }
    for (const auto& block : p.blocks)
        for (const auto& [e, col] : block) {
            max_e = std::max(max_e, e);
            ++count;
        }
    if (max_e != count)
        throw std::invalid_argument("parse_text: elements do not cover [n]");
    p.n = max_e;
    return p;
}

std::vector<ColoredPartition> brute_force_enumerate(ColorParams params, unsigned n) {
    if (n > kBruteForceEnumerateCap)
        throw std::invalid_argument("brute_force_enumerate: n exceeds cap " +
                                    std::to_string(kBruteForceEnumerateCap));
    std::vector<ColoredPartition> out;
    for_each_set_partition(n, [&](std::span<const unsigned> code) {
        // code[e] is the block of element e; block 0 is the zero-block.
        unsigned n_blocks = 0;
        for (unsigned b : code) n_blocks = std::max(n_blocks, b);

        // Elements whose color is free: zero-block members range over 1..c,
        // non-minimal members of other blocks over 1..m.
        std::vector<unsigned> free_elem, radix;
        std::vector<char> is_min(std::size_t(n) + 1, 0);
        std::vector<unsigned> seen_block(n_blocks + 1, 0);
        for (unsigned e = 1; e <= n; ++e) {
            unsigned b = code[e];
            if (b != 0 && !seen_block[b]) {
                seen_block[b] = 1;
                is_min[e] = 1;  // pinned to color 1
            } else {
                free_elem.push_back(e);
                radix.push_back(b == 0 ? params.c : params.m);
            }
        }

        std::vector<unsigned> color(free_elem.size(), 1);
        for (;;) {
            ColoredPartition p;
            p.n = n;
            p.blocks.resize(n_blocks);
            std::size_t fi = 0;
            for (unsigned e = 1; e <= n; ++e) {
                unsigned b = code[e];
                unsigned col = is_min[e] ? 1 : color[fi++];
                if (b == 0)
                    p.zero_block.emplace_back(e, col);
                else
                    p.blocks[b - 1].emplace_back(e, col);
            }
            out.push_back(std::move(p));

            // Next mixed-radix color assignment.
            std::size_t i = 0;
            while (i < color.size() && color[i] == radix[i]) color[i++] = 1;
            if (i == color.size()) break;
            ++color[i];
        }
    });
    return out;
}

}  // namespace colbn
