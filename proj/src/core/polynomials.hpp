#pragma once

#include <span>
#include <vector>

#include "core/count_table.hpp"
#include "core/types.hpp"

namespace colbn {

// T_n(x) = sum_k T_{n,k} x^k with exact integer coefficients, ascending in k.
// Leading coefficient is 1, constant term c^n, all coefficients positive.
struct BlockPolynomial {
    ColorParams params;
    unsigned n;
    std::vector<Int> coeffs;
};

BlockPolynomial block_polynomial(const CountTable& table, unsigned n);
BlockPolynomial block_polynomial(ColorParams params, unsigned n);

// Exact coefficient equality of T_n(x) with (x+c) T_{n-1}(x) + m x T'_{n-1}(x),
// both sides assembled by generic polynomial arithmetic. Requires n >= 1.
bool verify_poly_recurrence(const CountTable& table, unsigned n);
bool verify_poly_recurrence(ColorParams params, unsigned n);

// Outcome of the exact Sturm-chain root count over (-inf, 0). gcd_degree is
// the degree of gcd(p, p'); nonzero means p was not square-free and the
// distinct-root count still stands.
struct RootCount {
    unsigned distinct_negative_roots = 0;
    unsigned gcd_degree = 0;
};

// Distinct real roots of the integer polynomial in the open interval
// (-inf, 0), certified by a Sturm sequence over exact integer arithmetic
// (primitive-part pseudo-remainders, sign variations at -inf and at 0).
// Requires a nonconstant polynomial.
RootCount count_distinct_negative_roots(std::span<const Int> coeffs);
RootCount count_distinct_negative_roots(const BlockPolynomial& poly);

// Newton's inequalities T_{n,k}^2 >= T_{n,k-1} T_{n,k+1} (1+1/k)(1+1/(n-k))
// for 1 <= k <= n-1, checked by exact integer cross-multiplication.
// A consequence of real-rootedness; serves as a regression tripwire.
// Requires n >= 2.
bool newton_inequalities(const BlockPolynomial& poly);

}  // namespace colbn
