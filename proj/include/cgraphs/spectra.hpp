#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cgraphs/composition.hpp"
#include "cgraphs/graph.hpp"
#include "cgraphs/matrix.hpp"
#include "cgraphs/poly.hpp"

namespace cgraphs {

// Eigenvalue sign counts with multiplicity.
struct Inertia {
    long n_minus = 0;
    long n_zero = 0;
    long n_plus = 0;

    bool operator==(const Inertia&) const = default;
};

struct MultiplicityReport {
    long m0 = 0;
    long m_minus1 = 0;

    bool operator==(const MultiplicityReport&) const = default;
};

// (sum alpha_odd, sum alpha_even - k, k) for the adjacency matrix.
Inertia inertia_formula(const Composition& c);

// (k, 0, k) for the quotient matrix.
Inertia quotient_inertia(const Composition& c);

// m0 = sum alpha_2i - k; m_minus1 = sum alpha_2i-1 - k, plus 1 iff alpha_2 = 1.
MultiplicityReport multiplicity_formula(const Composition& c);

// When alpha_2 = 1: the eigenvector (-1, alpha_1, 0, ..., 0) of Q_pi for -1,
// verified exactly. Otherwise absent, with det(Q_pi + I) != 0 verified.
std::optional<std::vector<Integer>> quotient_minus_one(const Composition& c);

enum class TwinKind { Clique, Independent };

// The m-1 eigenvectors attached to a clique (eigenvalue -1) or independent
// set (eigenvalue 0) of mutual twins: vector j has ones on the first j
// members, -j on member j+1, zeros elsewhere. Preconditions checked.
std::vector<std::vector<Integer>> twin_eigenvectors(const Graph& g, std::span<const int> members,
                                                    TwinKind kind);

// det(xI - M), monic with exact integer coefficients: fraction-free Bareiss
// determinants at nodes 0, 1, -1, 2, -2, ... interpolated over the rationals.
// Non-integer interpolation output is an internal arithmetic bug (throws).
IntPoly charpoly_oracle(const IntMatrix& m);

// Inertia of a real-rooted polynomial via squarefree decomposition and
// multiplicity-weighted Sturm counts within the Cauchy bound. A count that
// does not sum to the degree means non-real roots (throws).
Inertia inertia_from_poly(const IntPoly& p);

struct IntervalReport {
    Rational lambda_minus_ub;  // tested upper bound for the largest eigenvalue < -1
    Rational lambda_plus_lb;   // tested lower bound for the least positive eigenvalue
    int count_in_gap = 0;
};

// Sturm count of the nontrivial factor of psi_pi on the inner rational
// interval (-12071/10000, (2071/10000)*alpha_min]; zero for every C-graph.
IntervalReport interval_check(const Composition& c);

// deg(squarefree_part(psi)) <= 2k + 2 for psi the charpoly of the adjacency.
bool distinct_count_bound(const Composition& c, const IntPoly& psi);

}  // namespace cgraphs
