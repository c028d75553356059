#pragma once

#include <vector>

#include "cgraphs/poly.hpp"

namespace cgraphs {

// Standard Sturm chain stored as positive-scale primitive integer multiples:
// first entry p, second proportional to p', strictly decreasing degrees.
struct SturmChain {
    std::vector<IntPoly> polys;
};

SturmChain sturm_chain(const IntPoly& p);  // p nonzero

// Sign variations at x, zero entries dropped.
int sign_variations(const SturmChain& chain, const Rational& x);

// Number of distinct real roots of squarefree p in the half-open interval
// (a, b]. Rejects zero, non-squarefree p and a >= b.
int sturm_count(const IntPoly& p, const Rational& a, const Rational& b);

}  // namespace cgraphs
