#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cgraphs/composition.hpp"
#include "cgraphs/poly.hpp"

namespace cgraphs {

// Product of disjoint adjacent transpositions (l, l+1) on {1..n}; the empty
// set is the identity. Stored as the ascending 1-based left endpoints l,
// which must be pairwise at distance >= 2.
struct EMatching {
    std::vector<int> lefts;

    bool moves(int i) const;  // 1-based point
    bool operator==(const EMatching&) const = default;
};

// All of E_n in a deterministic order; |E_n| = Fibonacci(n+1), F(1)=F(2)=1.
std::vector<EMatching> enumerate_e(int n);

// Rational function as a pair of integer polynomials; denominator nonzero.
struct RatFunc {
    IntPoly num;
    IntPoly den;
};

// Determinant of the tridiagonal matrix with diagonal beta_1..beta_n,
// superdiagonal -1, subdiagonal +1, returned denominator-cleared as
// (sum over E_n of prod_fixed num_i prod_moved den_i, prod_i den_i).
std::pair<IntPoly, IntPoly> tridiag_det_enum(std::span<const RatFunc> betas);

// Same value through the three-term recurrence P_i = num_i P_{i-1} +
// den_i den_{i-1} P_{i-2}; cross-witness for tridiag_det_enum.
std::pair<IntPoly, IntPoly> tridiag_det_rec(std::span<const RatFunc> betas);

// beta_1 = (1+x)/(alpha_1-1-x); beta_i = alpha_i/(alpha_i-1-x) for odd i >= 3,
// alpha_i/(alpha_i+x) for even i.
std::vector<RatFunc> theorem_betas(const Composition& c);

// Characteristic polynomial of Q_pi, monic of degree 2k:
// (-1)^k * sum over E_2k of prod_fixed c_i prod_moved q_i with c_1 = 1+x,
// c_i = alpha_i, q_i = alpha_i-1-x (i odd), alpha_i+x (i even).
IntPoly psi_pi(const Composition& c);

// Characteristic polynomial of the adjacency matrix, monic of degree n:
// x^{sum(alpha_2i - 1)} (x+1)^{sum(alpha_2i-1 - 1)} psi_pi(x).
IntPoly psi_full(const Composition& c);

}  // namespace cgraphs
