#pragma once

#include <array>
#include <functional>

#include "core/count_table.hpp"
#include "core/types.hpp"

namespace colbn {

// Solution of r (e^{m r} + c) = x on (0, inf). The left side is strictly
// increasing, so the root is unique.
struct SaddlePoint {
    SaddleParams params;
    double x;
    double r;
    double residual;  // r (e^{m r} + c) - x
    unsigned iterations;
};

// Bracketed Newton from r0 = log(max(x,2))/m with bisection fallback on any
// step that leaves the bracket. Converges to |residual| <= rel_tol * x or
// throws ConvergenceError after 200 iterations. Requires x >= 1.
SaddlePoint solve_saddle(SaddleParams params, double x, double rel_tol = 1e-12);

// Log-scale value of the saddle-point approximation to T_n:
//   log T_n ~ m n r - n + n/(m r) + 2 c r - (1+c)/m - log(m r + 1)/2.
struct LogEstimate {
    unsigned n;
    double r;
    double log_value;               // sum of the six terms below
    std::array<double, 6> terms;    // m n r, -n, n/(m r), 2 c r, -(1+c)/m, -log(m r+1)/2
};

LogEstimate log_total_asymptotic(SaddleParams params, unsigned n);  // n >= 2

// Natural log of an exact positive integer, 1e-12 relative, from its
// leading bits and bit length.
double log_exact(const Int& value);

// log T_n from a rolling-total computation of the exact count.
double log_total_exact(ColorParams params, unsigned n);

// Residuals of the root-spacing estimates for f(x) = x (e^{m x} + c) at
// f(t_i) = n + i, i = 0,1,2:
//   res61 = (t1 - t0) - 1/(m n) + 1/(m^2 n t0)
//   res62 = (t2 - t1) - 1/(m n) + 1/(m^2 n t0)
//   res63 = (2 t1 - t0 - t2) - 1/(m n^2)
//   res64 = 1/t0 + 1/t2 - 2/t1
// The differences t1-t0, t2-t1 and 2t1-t0-t2 are formed from the root
// increments solved directly (expm1 form), never by subtracting near-equal
// roots, so they stay meaningful even where direct subtraction at double
// precision would cancel (t_i agree to ~1/n).
struct LemmaResiduals {
    unsigned n;
    double t0, t1, t2;
    double res61, res62, res63, res64;
};

LemmaResiduals lemma_residuals(SaddleParams params, unsigned n);  // n >= 3

// d1 = |m r / log n - 1| and d2 = |n log(n/r) - (m r n + c r)|; callers
// assert the trend properties. For c = 0, d2 vanishes up to solver noise.
struct GrowthDiagnostics {
    unsigned n;
    double r;
    double d1;
    double d2;
};

GrowthDiagnostics saddle_growth_check(SaddleParams params, unsigned n);  // n >= 3

// h(a)/((a-b)(a-c)) + h(b)/((b-a)(b-c)) + h(c)/((c-a)(c-b)), which equals
// h''(s)/2 for some s in (a,b). Nodes must be pairwise distinct.
double second_divided_difference(const std::function<double(double)>& h,
                                 double a, double b, double c);

}  // namespace colbn
