#include "core/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace colbn {

namespace {

constexpr unsigned kIterationCap = 200;

double saddle_fn(SaddleParams p, double r) {
    double mr = double(p.m) * r;
    // exp overflow degrades gracefully to +inf; bisection then shrinks.
    return r * (std::exp(mr) + double(p.c));
}

double saddle_fn_deriv(SaddleParams p, double r) {
    double mr = double(p.m) * r;
    return (mr + 1.0) * std::exp(mr) + double(p.c);
}

}  // namespace

SaddlePoint solve_saddle(SaddleParams params, double x, double rel_tol) {
    if (!(x >= 1.0)) throw std::invalid_argument("solve_saddle: x must be >= 1");
    double lo = 0.0;                                   // f(0) = 0 < x
    double hi = std::log(std::fmax(x, 2.0)) / params.m + 1.0;
    while (std::isfinite(hi) && saddle_fn(params, hi) < x) hi *= 2.0;

    double r = std::log(std::fmax(x, 2.0)) / params.m;
    if (r <= lo || r >= hi) r = 0.5 * (lo + hi);
    for (unsigned it = 1; it <= kIterationCap; ++it) {
        double f = saddle_fn(params, r);
        if (std::isfinite(f) && std::abs(f - x) <= rel_tol * x)
            return {params, x, r, f - x, it};
        if (f < x)
            lo = r;
        else
            hi = r;
        double step = std::isfinite(f) ? r - (f - x) / saddle_fn_deriv(params, r)
                                       : 0.5 * (lo + hi);
        r = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
    }
    throw ConvergenceError("solve_saddle: no convergence for x=" + std::to_string(x));
}

LogEstimate log_total_asymptotic(SaddleParams params, unsigned n) {
    if (n < 2) throw std::invalid_argument("log_total_asymptotic: n must be >= 2");
    const double r = solve_saddle(params, n).r;
    const double m = params.m, c = params.c;
    LogEstimate out;
    out.n = n;
    out.r = r;
    out.terms = {m * n * r, -double(n), n / (m * r), 2.0 * c * r,
                 -(1.0 + c) / m, -0.5 * std::log(m * r + 1.0)};
    out.log_value = 0.0;
    for (double t : out.terms) out.log_value += t;
    return out;
}

double log_exact(const Int& value) {
    if (value <= 0) throw std::invalid_argument("log_exact: value must be positive");
    long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, value.get_mpz_t());  // value = d * 2^exp2, d in [0.5,1)
    return std::log(d) + double(exp2) * M_LN2;
}

double log_total_exact(ColorParams params, unsigned n) {
    return log_exact(total(params, n));
}

LemmaResiduals lemma_residuals(SaddleParams params, unsigned n) {
    if (n < 3) throw std::invalid_argument("lemma_residuals: n must be >= 3");
    const double m = params.m, c = params.c;
    const double t0 = solve_saddle(params, n, 1e-13).r;
    // e^{m t0} consistent with the solved equation keeps the increment
    // residual free of an independent exp rounding.
    const double e0 = n / t0 - c;

    // Solve f(t0 + d) - f(t0) = target for the increment d. The left side is
    //   e^{m t0} (t0 expm1(m d) + d e^{m d}) + c d,
    // every term positive, so no cancellation enters.
    auto increment = [&](double target) {
        double d = target / (e0 * (m * t0 + 1.0) + c);
        for (unsigned it = 0; it < 64; ++it) {
            double em1 = std::expm1(m * d);
            double g = e0 * (t0 * em1 + d * (1.0 + em1)) + c * d - target;
            double gp = e0 * (1.0 + em1) * (m * t0 + 1.0 + m * d) + c;
            double next = d - g / gp;
            if (std::abs(next - d) <= 1e-15 * d) return next;
            d = next;
        }
        throw ConvergenceError("lemma_residuals: increment iteration stalled");
    };
    const double d1 = increment(1.0);
    const double d2 = increment(2.0);
    const double t1 = t0 + d1, t2 = t0 + d2;

    LemmaResiduals out;
    out.n = n;
    out.t0 = t0;
    out.t1 = t1;
    out.t2 = t2;
    out.res61 = d1 - 1.0 / (m * n) + 1.0 / (m * m * n * t0);
    out.res62 = (d2 - d1) - 1.0 / (m * n) + 1.0 / (m * m * n * t0);
    out.res63 = (2.0 * d1 - d2) - 1.0 / (m * n * n);
    out.res64 = d1 / (t0 * t1) - (d2 - d1) / (t1 * t2);
    return out;
}

GrowthDiagnostics saddle_growth_check(SaddleParams params, unsigned n) {
    if (n < 3) throw std::invalid_argument("saddle_growth_check: n must be >= 3");
    const double r = solve_saddle(params, n).r;
    const double logn = std::log(double(n));
    const double d1 = std::abs(params.m * r / logn - 1.0);
    const double d2 = std::abs(n * std::log(n / r) - (double(params.m) * r * n + double(params.c) * r));
    return {n, r, d1, d2};
}

double second_divided_difference(const std::function<double(double)>& h,
                                 double a, double b, double c) {
    if (a == b || b == c || a == c)
        throw std::invalid_argument("second_divided_difference: nodes must be distinct");
    return h(a) / ((a - b) * (a - c)) + h(b) / ((b - a) * (b - c)) +
           h(c) / ((c - a) * (c - b));
}

}  // namespace colbn
