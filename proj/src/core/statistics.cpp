#include "core/statistics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace colbn {

namespace {

MomentPair finish(unsigned n, Rat e, Rat v) {
    e.canonicalize();
    v.canonicalize();
    double ef = e.get_d(), vf = v.get_d();
    return {n, std::move(e), std::move(v), ef, vf};
}

MomentPair moments_from_row(std::span<const Int> row, unsigned n) {
    Int t = 0, s1 = 0, s2 = 0;
    for (unsigned k = 0; k <= n; ++k) {
        t += row[k];
        s1 += Int(k) * row[k];
        s2 += Int(k) * k * row[k];
    }
    Rat e(s1, t), m2(s2, t);
    e.canonicalize();
    m2.canonicalize();
    return finish(n, e, m2 - e * e);
}

MomentPair moments_from_totals(const Int& tn, const Int& tn1, const Int& tn2,
                               ColorParams params, unsigned n) {
    const unsigned long m = params.m;
    Rat e = Rat(tn1, Int(m) * tn) - Rat(params.c + 1, m);
    Rat v = Rat(tn2, Int(m) * m * tn) - Rat(tn1 * tn1, Int(m) * m * tn * tn) - Rat(1, m);
    return finish(n, e, v);
}

}  // namespace

MomentPair moments_direct(const CountTable& table, unsigned n) {
    return moments_from_row(table.row(n), n);
}

MomentPair moments_direct(ColorParams params, unsigned n) {
    return moments_from_row(count_row(params, n), n);
}

MomentPair moments_ratio(const CountTable& table, unsigned n) {
    if (n + 2 > table.n_max())
        throw std::out_of_range("moments_ratio: table must extend to n+2");
    return moments_from_totals(table.total(n), table.total(n + 1), table.total(n + 2),
                               table.params(), n);
}

MomentPair moments_ratio(ColorParams params, unsigned n) {
    std::vector<Int> t = totals(params, n + 2);
    return moments_from_totals(t[n], t[n + 1], t[n + 2], params, n);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

namespace {

double ks_from_row(std::span<const Int> row, unsigned n, const MomentPair& moments) {
    if (moments.v == 0) throw std::domain_error("ks_to_normal: degenerate distribution");
    const double mean = moments.e_float;
    const double sd = std::sqrt(moments.v_float);
    Int t = 0, acc = 0;
    for (unsigned k = 0; k <= n; ++k) t += row[k];
    double sup = 0.0;
    for (unsigned k = 0; k <= n; ++k) {
        acc += row[k];
        Rat cdf(acc, t);
        cdf.canonicalize();
        // continuity-corrected lattice comparison point
        double z = (k + 0.5 - mean) / sd;
        sup = std::max(sup, std::abs(cdf.get_d() - normal_cdf(z)));
    }
    return sup;
}

}  // namespace

double ks_to_normal(const CountTable& table, unsigned n) {
    return ks_from_row(table.row(n), n, moments_direct(table, n));
}

double ks_to_normal(ColorParams params, unsigned n) {
    std::vector<Int> row = count_row(params, n);
    return ks_from_row(row, n, moments_from_row(row, n));
}

DistributionSummary exact_pmf(const CountTable& table, unsigned n) {
    auto row = table.row(n);
    DistributionSummary out;
    out.n = n;
    const Int& t = table.total(n);
    Int acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
        Rat p(row[k], t);
        p.canonicalize();
        out.pmf.push_back(p);
        acc += row[k];
        Rat c(acc, t);
        c.canonicalize();
        out.cdf.push_back(c);
    }
    out.moments = moments_direct(table, n);
    out.ks = out.moments.v == 0 ? std::numeric_limits<double>::quiet_NaN()
                                : ks_from_row(row, n, out.moments);
    return out;
}

DistributionSummary exact_pmf(ColorParams params, unsigned n) {
    return exact_pmf(CountTable(params, n), n);
}

}  // namespace colbn
