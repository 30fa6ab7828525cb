#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "colbn/colbn.h"

namespace {

std::string take(char* p) {
    std::string s = p ? p : "";
    colbn_free(p);
    return s;
}

struct TableGuard {
    colbn_table* p = nullptr;
    ~TableGuard() { colbn_table_destroy(p); }
};

}  // namespace

TEST_CASE("table handle lifecycle and entries") {
    TableGuard t;
    REQUIRE(colbn_table_create(2, 2, 3, &t.p) == COLBN_OK);
    CHECK(colbn_table_n_max(t.p) == 3);

    char* s = nullptr;
    REQUIRE(colbn_table_entry(t.p, 2, 1, &s) == COLBN_OK);
    CHECK(take(s) == "6");
    REQUIRE(colbn_table_total(t.p, 2, &s) == COLBN_OK);
    CHECK(take(s) == "11");
    REQUIRE(colbn_table_total(t.p, 3, &s) == COLBN_OK);
    CHECK(take(s) == "49");

    double lg = 0.0;
    REQUIRE(colbn_table_log_total(t.p, 2, &lg) == COLBN_OK);
    CHECK(lg == doctest::Approx(std::log(11.0)).epsilon(1e-12));

    CHECK(colbn_table_entry(t.p, 9, 0, &s) == COLBN_ERANGE);
    CHECK(std::string(colbn_last_error()) != "");
    colbn_table* bad = nullptr;
    CHECK(colbn_table_create(0, 1, 2, &bad) == COLBN_EINVAL);
    CHECK(bad == nullptr);
}

TEST_CASE("status code names") {
    CHECK(std::string(colbn_errstr(COLBN_OK)) == "COLBN_OK");
    CHECK(std::string(colbn_errstr(COLBN_ENOCONV)) == "COLBN_ENOCONV");
    CHECK(std::string(colbn_errstr(999)) == "COLBN_UNKNOWN");
}

TEST_CASE("counting routes agree through the C surface") {
    char* s = nullptr;
    REQUIRE(colbn_total(2, 2, 2, &s) == COLBN_OK);
    CHECK(take(s) == "11");
    REQUIRE(colbn_closed_form_total(2, 2, 2, &s) == COLBN_OK);
    CHECK(take(s) == "11");
    REQUIRE(colbn_brute_force_total(2, 2, 2, &s) == COLBN_OK);
    CHECK(take(s) == "11");
    CHECK(colbn_brute_force_total(2, 2, 11, &s) == COLBN_EINVAL);

    char** arr = nullptr;
    size_t len = 0;
    REQUIRE(colbn_egf_series_totals(2, 2, 2, &arr, &len) == COLBN_OK);
    REQUIRE(len == 3);
    CHECK(std::string(arr[0]) == "1");
    CHECK(std::string(arr[1]) == "3");
    CHECK(std::string(arr[2]) == "11");
    colbn_free_strings(arr, len);

    REQUIRE(colbn_stirling2(4, 2, &s) == COLBN_OK);
    CHECK(take(s) == "7");
}

TEST_CASE("polynomial certificates") {
    TableGuard t;
    REQUIRE(colbn_table_create(1, 2, 12, &t.p) == COLBN_OK);
    int ok = 0;
    REQUIRE(colbn_poly_recurrence_ok(t.p, 12, &ok) == COLBN_OK);
    CHECK(ok == 1);
    unsigned roots = 0, gcd_degree = 7;
    REQUIRE(colbn_poly_negative_roots(t.p, 12, &roots, &gcd_degree) == COLBN_OK);
    CHECK(roots == 12);
    CHECK(gcd_degree == 0);
    REQUIRE(colbn_poly_newton_ok(t.p, 12, &ok) == COLBN_OK);
    CHECK(ok == 1);
}

TEST_CASE("moments and ks through the C surface") {
    TableGuard t;
    REQUIRE(colbn_table_create(2, 2, 3, &t.p) == COLBN_OK);
    colbn_moments direct{}, ratio{};
    REQUIRE(colbn_moments_direct(t.p, 1, &direct) == COLBN_OK);
    REQUIRE(colbn_moments_ratio(t.p, 1, &ratio) == COLBN_OK);
    CHECK(std::string(direct.e_rational) == "1/3");
    CHECK(std::string(direct.v_rational) == "2/9");
    CHECK(std::string(ratio.e_rational) == "1/3");
    CHECK(std::string(ratio.v_rational) == "2/9");
    CHECK(direct.e == doctest::Approx(1.0 / 3));
    colbn_moments_clear(&direct);
    colbn_moments_clear(&ratio);
    CHECK(direct.e_rational == nullptr);

    CHECK(colbn_moments_ratio(t.p, 2, &ratio) == COLBN_ERANGE);  // needs n+2 rows

    double ks = 0.0;
    CHECK(colbn_ks_to_normal(t.p, 0, &ks) == COLBN_EINVAL);  // degenerate at n = 0
    TableGuard t11;
    REQUIRE(colbn_table_create(1, 1, 1, &t11.p) == COLBN_OK);
    REQUIRE(colbn_ks_to_normal(t11.p, 1, &ks) == COLBN_OK);
    CHECK(ks == doctest::Approx(0.0227501).epsilon(1e-4));
}

TEST_CASE("asymptotics through the C surface") {
    double r = 0.0, residual = 1.0;
    REQUIRE(colbn_solve_saddle(0, 1, std::exp(1.0), &r, &residual) == COLBN_OK);
    CHECK(r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(residual) <= 1e-12 * std::exp(1.0));
    CHECK(colbn_solve_saddle(0, 1, 0.25, &r, &residual) == COLBN_EINVAL);

    colbn_log_estimate est{};
    REQUIRE(colbn_log_total_asymptotic(1, 1, 100, &est) == COLBN_OK);
    double sum = 0.0;
    for (double term : est.terms) sum += term;
    CHECK(est.log_value == doctest::Approx(sum).epsilon(1e-15));
    double exact = 0.0;
    REQUIRE(colbn_log_total_exact(1, 1, 100, &exact) == COLBN_OK);
    CHECK(std::abs(est.log_value - exact) < 0.1);

    colbn_lemma_residuals lr{};
    REQUIRE(colbn_lemma_residuals_eval(1, 2, 1000, &lr) == COLBN_OK);
    CHECK(lr.t0 < lr.t1);
    CHECK(lr.t1 < lr.t2);

    colbn_growth_diag gd{};
    REQUIRE(colbn_saddle_growth_check(0, 1, 1000, &gd) == COLBN_OK);
    CHECK(gd.d2 <= 1e-5);

    double dd = 0.0;
    auto h = [](double x, void*) { return x * x; };
    REQUIRE(colbn_second_divided_difference(h, nullptr, 0.5, 2.0, 1.0, &dd) == COLBN_OK);
    CHECK(dd == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partitions, ranking and sampling through the C surface") {
    TableGuard t;
    REQUIRE(colbn_table_create(2, 2, 2, &t.p) == COLBN_OK);

    char* text = nullptr;
    REQUIRE(colbn_unrank(t.p, 2, "0", &text) == COLBN_OK);
    CHECK(take(text) == "0:(1,1),(2,1)");
    REQUIRE(colbn_unrank(t.p, 2, "10", &text) == COLBN_OK);
    std::string last = take(text);
    CHECK(last == "0/(1,1)/(2,1)");
    CHECK(colbn_unrank(t.p, 2, "11", &text) == COLBN_ERANGE);
    CHECK(colbn_unrank(t.p, 2, "pear", &text) == COLBN_EINVAL);

    char* rank = nullptr;
    REQUIRE(colbn_rank(t.p, last.c_str(), &rank) == COLBN_OK);
    CHECK(take(rank) == "10");
    CHECK(colbn_rank(t.p, "0/(1,2),(2,1)", &rank) == COLBN_EINVAL);

    int ok = -1;
    REQUIRE(colbn_validate(2, 2, 2, "0:(1,2),(2,2)", &ok) == COLBN_OK);
    CHECK(ok == 1);
    REQUIRE(colbn_validate(2, 2, 2, "0/(1,2),(2,1)", &ok) == COLBN_OK);
    CHECK(ok == 0);
    REQUIRE(colbn_validate(2, 2, 3, "0:(1,1),(2,1)", &ok) == COLBN_OK);
    CHECK(ok == 0);  // claims n=3, covers only [2]

    char** all = nullptr;
    size_t len = 0;
    REQUIRE(colbn_enumerate(2, 2, 2, &all, &len) == COLBN_OK);
    CHECK(len == 11);
    std::set<std::string> texts;
    for (size_t i = 0; i < len; ++i) texts.insert(all[i]);
    CHECK(texts.size() == 11);
    CHECK(texts.count("0:(1,2),(2,2)") == 1);
    colbn_free_strings(all, len);

    colbn_sampler* s1 = nullptr;
    colbn_sampler* s2 = nullptr;
    REQUIRE(colbn_sampler_create(2, 2, 6, 777, &s1) == COLBN_OK);
    REQUIRE(colbn_sampler_create(2, 2, 6, 777, &s2) == COLBN_OK);
    TableGuard t6;
    REQUIRE(colbn_table_create(2, 2, 6, &t6.p) == COLBN_OK);
    for (int i = 0; i < 10; ++i) {
        char *p1 = nullptr, *r1 = nullptr, *p2 = nullptr;
        unsigned k1 = 0, k2 = 0;
        REQUIRE(colbn_sampler_next(s1, &p1, &r1, &k1) == COLBN_OK);
        REQUIRE(colbn_sampler_next(s2, &p2, nullptr, &k2) == COLBN_OK);
        std::string text1 = take(p1);
        CHECK(text1 == take(p2));  // identical seed, identical stream
        CHECK(k1 == k2);
        int valid = 0;
        REQUIRE(colbn_validate(2, 2, 6, text1.c_str(), &valid) == COLBN_OK);
        CHECK(valid == 1);
        char* back = nullptr;
        REQUIRE(colbn_unrank(t6.p, 6, r1, &back) == COLBN_OK);
        CHECK(take(back) == text1);  // the reported rank is the partition's rank
        colbn_free(r1);
    }
    colbn_sampler_destroy(s1);
    colbn_sampler_destroy(s2);
}
