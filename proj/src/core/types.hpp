#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace colbn {

using Int = mpz_class;
using Rat = mpq_class;

// Palette sizes for colored B_n set partitions: elements of the zero-block
// pick one of c colors, non-minimal elements of the other blocks pick one
// of m colors (block minima are pinned to color 1).
struct ColorParams {
    ColorParams(unsigned c_, unsigned m_) : c(c_), m(m_) {
        if (c == 0 || m == 0)
            throw std::invalid_argument("ColorParams: c and m must be >= 1");
    }
    unsigned c;
    unsigned m;
};

// Saddle-point and residual estimates additionally make sense for c = 0
// (the zero-block then must stay empty), so the asymptotic routines take
// this relaxed parameter pair instead of ColorParams.
struct SaddleParams {
    SaddleParams(unsigned c_, unsigned m_) : c(c_), m(m_) {
        if (m == 0)
            throw std::invalid_argument("SaddleParams: m must be >= 1");
    }
    SaddleParams(ColorParams p) : c(p.c), m(p.m) {}
    unsigned c;
    unsigned m;
};

// Thrown when an iterative numeric routine exhausts its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace colbn
