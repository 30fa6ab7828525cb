#include "core/polynomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace colbn {

namespace {

using Poly = std::vector<Int>;  // ascending coefficients

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Int(k) * p[k]);
    return d;
}

// Divide by the content (gcd of coefficients, taken positive).
void make_primitive(Poly& p) {
    Int g = 0;
    for (const Int& a : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g > 1)
        for (Int& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b: rem(lc(b)^(deg a - deg b + 1) * a, b).
// Returns the remainder and the sign of the multiplier through mult_sign.
Poly pseudo_rem(Poly a, const Poly& b, int& mult_sign) {
    const int db = degree(b);
    const Int& lc = b.back();
    int e = degree(a) - db + 1;
    mult_sign = (lc < 0 && (e & 1)) ? -1 : 1;
    while (degree(a) >= db) {
        const int shift = degree(a) - db;
        Int q = a.back();
        for (int i = 0; i < degree(a); ++i) {
            a[i] *= lc;
            if (i >= shift) a[i] -= q * b[i - shift];
        }
        a.pop_back();
        strip(a);
        --e;
    }
    // a was multiplied by lc^(used); bring it up to the full lc^(e0) power
    // so the sign accounting above stays exact.
    if (e > 0) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
        for (Int& v : a) v *= scale;
    }
    return a;
}

int sign_at_minus_inf(const Poly& p) {
    int s = sgn(p.back());
    return (degree(p) % 2 == 0) ? s : -s;
}

int sign_at_zero(const Poly& p) { return sgn(p.front()); }

unsigned variations(const std::vector<int>& signs) {
    unsigned v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

BlockPolynomial block_polynomial(const CountTable& table, unsigned n) {
    auto row = table.row(n);
    return {table.params(), n, {row.begin(), row.end()}};
}

BlockPolynomial block_polynomial(ColorParams params, unsigned n) {
    return {params, n, count_row(params, n)};
}

bool verify_poly_recurrence(const CountTable& table, unsigned n) {
    if (n < 1) throw std::invalid_argument("verify_poly_recurrence: n must be >= 1");
    auto prev = table.row(n - 1);
    Poly lhs(prev.begin(), prev.end());

    // (x + c) * T_{n-1}(x)
    Poly rhs(lhs.size() + 1);
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        rhs[k + 1] += lhs[k];
        rhs[k] += Int(table.params().c) * lhs[k];
    }
    // + m x T'_{n-1}(x)
    Poly d = derivative(lhs);
    for (std::size_t k = 0; k < d.size(); ++k) rhs[k + 1] += Int(table.params().m) * d[k];

    auto cur = table.row(n);
    return std::equal(rhs.begin(), rhs.end(), cur.begin(), cur.end());
}

bool verify_poly_recurrence(ColorParams params, unsigned n) {
    if (n < 1) throw std::invalid_argument("verify_poly_recurrence: n must be >= 1");
    return verify_poly_recurrence(CountTable(params, n), n);
}

RootCount count_distinct_negative_roots(std::span<const Int> coeffs) {
    Poly p0(coeffs.begin(), coeffs.end());
    strip(p0);
    if (degree(p0) < 1)
        throw std::invalid_argument("count_distinct_negative_roots: polynomial is constant");

    // Sturm chain with primitive parts: each step keeps
    //   p_{i+1} = -(positive scalar) * rem(p_{i-1}, p_i),
    // which preserves the sign-variation semantics exactly.
    std::vector<Poly> chain;
    make_primitive(p0);
    chain.push_back(p0);
    Poly p1 = derivative(p0);
    make_primitive(p1);
    chain.push_back(std::move(p1));
    unsigned gcd_degree = 0;
    while (true) {
        int mult_sign = 1;
        Poly r = pseudo_rem(chain[chain.size() - 2], chain.back(), mult_sign);
        if (r.empty()) {
            gcd_degree = static_cast<unsigned>(degree(chain.back()));
            break;
        }
        if (mult_sign > 0)
            for (Int& v : r) v = -v;
        make_primitive(r);
        chain.push_back(std::move(r));
    }

    std::vector<int> at_minus_inf, at_zero;
    for (const Poly& p : chain) {
        at_minus_inf.push_back(sign_at_minus_inf(p));
        at_zero.push_back(sign_at_zero(p));
    }
    unsigned count = variations(at_minus_inf) - variations(at_zero);
    return {count, gcd_degree};
}

RootCount count_distinct_negative_roots(const BlockPolynomial& poly) {
    return count_distinct_negative_roots(std::span<const Int>(poly.coeffs));
}

bool newton_inequalities(const BlockPolynomial& poly) {
    const unsigned n = poly.n;
    if (n < 2) throw std::invalid_argument("newton_inequalities: n must be >= 2");
    for (unsigned k = 1; k <= n - 1; ++k) {
        // T_k^2 k (n-k) >= T_{k-1} T_{k+1} (k+1)(n-k+1)
        Int lhs = poly.coeffs[k] * poly.coeffs[k] * k * (n - k);
        Int rhs = poly.coeffs[k - 1] * poly.coeffs[k + 1] * (k + 1) * (n - k + 1);
        if (lhs < rhs) return false;
    }
    return true;
}

}  // namespace colbn
