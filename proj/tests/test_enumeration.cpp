#include <doctest.h>

#include <set>
#include <sstream>

#include "core/count_table.hpp"
#include "core/oracles.hpp"
#include "core/partition.hpp"
#include "support.hpp"

using namespace colbn;

namespace {
const std::vector<std::pair<unsigned, unsigned>> kGrid = {
    {1, 1}, {1, 2}, {2, 2}, {3, 1}, {2, 3}};
}

TEST_CASE("count table matches the small displayed rows") {
    CountTable t22(ColorParams(2, 2), 2);
    CHECK(t22.at(2, 0) == 4);  // c^2
    CHECK(t22.at(2, 1) == 6);  // m + 2c
    CHECK(t22.at(2, 2) == 1);
    CHECK(t22.total(2) == 11);

    CountTable t53(ColorParams(5, 3), 1);
    CHECK(t53.at(1, 0) == 5);  // T_1(x) = x + c
    CHECK(t53.at(1, 1) == 1);
}

TEST_CASE("count table boundary and recurrence invariants") {
    for (auto [c, m] : kGrid) {
        CountTable t(ColorParams(c, m), 12);
        Int cpow = 1;
        for (unsigned n = 0; n <= 12; ++n) {
            CHECK(t.at(n, 0) == cpow);
            cpow *= c;
            CHECK(t.at(n, n) == 1);
            Int sum = 0;
            for (unsigned k = 0; k <= n; ++k) {
                CHECK(t.at(n, k) > 0);
                sum += t.at(n, k);
            }
            CHECK(sum == t.total(n));
            if (n >= 1)
                for (unsigned k = 1; k <= n; ++k)
                    CHECK(t.at(n, k) ==
                          t.value(n - 1, k - 1) + (Int(m) * k + c) * t.value(n - 1, k));
        }
    }
}

TEST_CASE("row sums at (1,1) follow the Bell triangle") {
    // (1,1)-colored partitions are ordinary partitions of [n] u {0}.
    CountTable t(ColorParams(1, 1), 4);
    auto bell = testsupport::bell_numbers(5);
    std::vector<Int> expected = {1, 2, 5, 15, 52};
    for (unsigned n = 0; n <= 4; ++n) {
        CHECK(t.total(n) == expected[n]);
        CHECK(t.total(n) == bell[n + 1]);
    }
}

TEST_CASE("total: values and rolling-row route") {
    CHECK(total(ColorParams(2, 2), 2) == 11);
    CHECK(total(ColorParams(2, 2), 3) == 49);  // T_3(x) at (2,2), x=1
    for (auto [c, m] : kGrid) CHECK(total(ColorParams(c, m), 0) == 1);

    CountTable t(ColorParams(3, 2), 20);
    auto tot = totals(ColorParams(3, 2), 20);
    auto row = count_row(ColorParams(3, 2), 20);
    for (unsigned k = 0; k <= 20; ++k) CHECK(row[k] == t.at(20, k));
    for (unsigned n = 0; n <= 20; ++n) CHECK(tot[n] == t.total(n));
}

TEST_CASE("stirling2 triangle") {
    CHECK(stirling2(0, 0) == 1);
    for (unsigned n = 1; n <= 12; ++n) CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(5, 7) == 0);
    CHECK(stirling2(6, 3) == 90);
}

TEST_CASE("closed-form total") {
    CHECK(closed_form_total(ColorParams(2, 2), 2) == 11);
    CHECK(closed_form_total(ColorParams(1, 2), 3) == 24);  // T_3(x) at (1,2), x=1
    for (auto [c, m] : kGrid) CHECK(closed_form_total(ColorParams(c, m), 0) == 1);
}

TEST_CASE("egf series totals") {
    auto v22 = egf_series_totals(ColorParams(2, 2), 2);
    CHECK(v22[0] == 1);
    CHECK(v22[1] == 3);  // 1 + c
    CHECK(v22[2] == 11);

    auto v11 = egf_series_totals(ColorParams(1, 1), 4);
    CHECK(v11[4] == 52);  // Bell(5)

    for (auto [c, m] : kGrid) CHECK(egf_series_totals(ColorParams(c, m), 0)[0] == 1);
}

TEST_CASE("brute-force total") {
    CHECK(brute_force_total(ColorParams(2, 2), 2) == 11);
    for (auto [c, m] : kGrid) CHECK(brute_force_total(ColorParams(c, m), 0) == 1);
    CHECK(brute_force_total(ColorParams(3, 1), 3) == total(ColorParams(3, 1), 3));
    CHECK_THROWS_AS(brute_force_total(ColorParams(1, 1), 11), std::invalid_argument);
}

TEST_CASE("all four counting routes agree on the grid") {
    for (auto [c, m] : kGrid) {
        ColorParams p(c, m);
        CountTable t(p, 8);
        auto egf = egf_series_totals(p, 8);
        for (unsigned n = 0; n <= 8; ++n) {
            const Int& reference = t.total(n);
            CHECK(brute_force_total(p, n) == reference);
            CHECK(closed_form_total(p, n) == reference);
            CHECK(egf[n] == reference);
        }
    }
}

TEST_CASE("counting routes agree for larger palettes too") {
    for (auto [c, m] : {std::pair<unsigned, unsigned>{5, 7}, {10, 1}, {1, 9}, {6, 6}}) {
        ColorParams p(c, m);
        CountTable t(p, 6);
        auto egf = egf_series_totals(p, 6);
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(brute_force_total(p, n) == t.total(n));
            CHECK(closed_form_total(p, n) == t.total(n));
            CHECK(egf[n] == t.total(n));
        }
    }
}

TEST_CASE("c=1 rows satisfy the Whitney recurrence") {
    for (unsigned m : {1u, 2u, 3u}) {
        CountTable t(ColorParams(1, m), 30);
        for (unsigned n = 1; n <= 30; ++n)
            for (unsigned k = 1; k <= n; ++k)
                CHECK(t.at(n, k) == t.value(n - 1, k - 1) + (Int(m) * k + 1) * t.value(n - 1, k));
    }
}

TEST_CASE("(1,1) specialization: totals are shifted Bell, entries shifted Stirling") {
    CountTable t(ColorParams(1, 1), 20);
    auto bell = testsupport::bell_numbers(21);
    for (unsigned n = 0; n <= 20; ++n) CHECK(t.total(n) == bell[n + 1]);
    for (unsigned n = 0; n <= 15; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(t.at(n, k) == stirling2(n + 1, k + 1));
}

TEST_CASE("brute-force enumeration: counts, validity, uniqueness") {
    for (auto [c, m] : kGrid) {
        ColorParams p(c, m);
        for (unsigned n = 0; n <= 5; ++n) {
            auto all = brute_force_enumerate(p, n);
            CHECK(Int(all.size()) == total(p, n));
            std::set<std::string> texts;
            for (const auto& part : all) {
                CHECK(validate(p, part));
                texts.insert(to_text(part));
            }
            CHECK(texts.size() == all.size());
        }
    }
    CHECK(brute_force_enumerate(ColorParams(1, 2), 3).size() == 24);
    CHECK(brute_force_enumerate(ColorParams(2, 2), 0).size() == 1);
    CHECK_THROWS_AS(brute_force_enumerate(ColorParams(1, 1), 8), std::invalid_argument);
}

TEST_CASE("table CSV serialization") {
    CountTable t(ColorParams(2, 2), 2);
    std::ostringstream os;
    t.write_csv(os);
    CHECK(os.str() == "n,k,T\n0,0,1\n1,0,2\n1,1,1\n2,0,4\n2,1,6\n2,2,1\n");
}

TEST_CASE("out-of-range table access throws") {
    CountTable t(ColorParams(1, 1), 3);
    CHECK_THROWS_AS(t.at(4, 0), std::out_of_range);
    CHECK_THROWS_AS(t.at(2, 3), std::out_of_range);
    CHECK(t.value(-1, 0) == 0);
    CHECK(t.value(2, 3) == 0);
}

TEST_CASE("ColorParams rejects zero palettes") {
    CHECK_THROWS_AS(ColorParams(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ColorParams(1, 0), std::invalid_argument);
}
