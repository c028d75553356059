#pragma once

#include "cgraphs/composition.hpp"
#include "cgraphs/construct.hpp"
#include "cgraphs/matrix.hpp"

namespace cgraphs {

// Quotient matrix Q_pi of the equitable class partition of C(alpha_1..alpha_2k):
// entry(i,j) = alpha_j * H(i,j) + [i == j and i odd] * (alpha_i - 1), 1-based,
// where H(i,j) = 1 iff (i < j and j even) or (j < i and i even).
struct QuotientMatrix {
    IntMatrix mat;
    Composition comp;
};

QuotientMatrix quotient_matrix(const Composition& c);

// n x 2k class-indicator 0/1 matrix P_pi: exactly one 1 per row.
IntMatrix characteristic_matrix(const ClassPartition& p);

// True iff A * P_pi == P_pi * Q_pi exactly.
bool check_equitable(const Graph& g, const ClassPartition& p, const QuotientMatrix& q);

// D = diag(alpha_1..alpha_2k); D' = diag((alpha_1-1)/alpha_1, 0, ...).
struct ScalingDiagonals {
    std::vector<Rational> d;
    std::vector<Rational> d_prime;
};

ScalingDiagonals scaling_diagonals(const Composition& c);

// Q_pi == (A_2k + D') * D entrywise over the rationals, with A_2k the
// adjacency matrix of the recurrence-built antiregular graph on 2k vertices.
bool check_structural_identity(const Composition& c);

}  // namespace cgraphs
