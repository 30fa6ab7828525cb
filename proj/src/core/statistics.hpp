#pragma once

#include <vector>

#include "core/count_table.hpp"
#include "core/types.hpp"

namespace colbn {

// Exact expectation and variance of the number of non-zero-blocks, with
// double shadows of each.
struct MomentPair {
    unsigned n;
    Rat e;
    Rat v;
    double e_float;
    double v_float;
};

// E = sum k T_{n,k} / T_n, V = sum k^2 T_{n,k} / T_n - E^2.
MomentPair moments_direct(const CountTable& table, unsigned n);
MomentPair moments_direct(ColorParams params, unsigned n);

// E = T_{n+1}/(m T_n) - (1+c)/m,
// V = T_{n+2}/(m^2 T_n) - T_{n+1}^2/(m^2 T_n^2) - 1/m.
// The table overload needs rows up to n+2.
MomentPair moments_ratio(const CountTable& table, unsigned n);
MomentPair moments_ratio(ColorParams params, unsigned n);

struct DistributionSummary {
    unsigned n;
    std::vector<Rat> pmf;  // p_k = T_{n,k} / T_n
    std::vector<Rat> cdf;
    MomentPair moments;
    double ks;  // distance to the fitted normal; NaN when degenerate (n = 0)
};

DistributionSummary exact_pmf(const CountTable& table, unsigned n);
DistributionSummary exact_pmf(ColorParams params, unsigned n);

// sup_k |P(xi_n <= k) - Phi((k + 1/2 - E_n)/sqrt(V_n))| over k = 0..n,
// with the exact lattice cdf on the left. Throws std::domain_error when
// V_n = 0 (degenerate distribution, only n = 0 here).
double ks_to_normal(const CountTable& table, unsigned n);
double ks_to_normal(ColorParams params, unsigned n);

// Standard normal cdf via erfc; absolute error well below 1e-12.
double normal_cdf(double x);

}  // namespace colbn
