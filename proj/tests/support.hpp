#pragma once

// Shared helpers for the test suites: independent oracles and small
// statistical utilities. Everything here is deliberately separate from the
// library implementation paths it is used to check.

#include <cmath>
#include <cstdint>
#include <vector>

#include "core/types.hpp"

namespace testsupport {

// Bell numbers B_0..B_n by Aitken's array (the Bell triangle): independent
// of the count-table recurrence.
inline std::vector<colbn::Int> bell_numbers(unsigned n) {
    std::vector<colbn::Int> bell{colbn::Int(1)};
    std::vector<colbn::Int> row{colbn::Int(1)};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<colbn::Int> next(i + 1);
        next[0] = row.back();
        for (unsigned j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
        row = std::move(next);
        bell.push_back(row[0]);
    }
    return bell;
}

// Regularized incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a), by the series
// for P when x < a+1 and the Lentz continued fraction otherwise (the
// classic gammp/gammq pair).
inline double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) return NAN;
    if (x == 0.0) return 1.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        double p = sum * std::exp(-x + a * std::log(x) - gln);
        return 1.0 - p;
    }
    double b = x + 1.0 - a, c = 1e308, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

// Upper-tail p-value of a chi-square statistic with df degrees of freedom.
inline double chi_square_pvalue(double statistic, double df) {
    return gamma_q(0.5 * df, 0.5 * statistic);
}

}  // namespace testsupport
