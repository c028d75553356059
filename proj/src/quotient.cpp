#include "cgraphs/quotient.hpp"

#include <stdexcept>

namespace cgraphs {

QuotientMatrix quotient_matrix(const Composition& c) {
    require_even(c);
    int m = c.length();
    IntMatrix q(m, m);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (i == j) {
                if (i % 2 == 1) q.at(i - 1, j - 1) = c.alpha(i) - 1;
            } else if ((i < j && j % 2 == 0) || (j < i && i % 2 == 0)) {
                q.at(i - 1, j - 1) = c.alpha(j);
            }
        }
    }
    return {std::move(q), c};
}

IntMatrix characteristic_matrix(const ClassPartition& p) {
    int n = static_cast<int>(p.class_of.size());
    int m = static_cast<int>(p.sizes.size());
    IntMatrix pm(n, m);
    for (int v = 0; v < n; ++v) pm.at(v, p.class_of[static_cast<std::size_t>(v)]) = 1;
    return pm;
}

bool check_equitable(const Graph& g, const ClassPartition& p, const QuotientMatrix& q) {
    if (static_cast<int>(p.class_of.size()) != g.order())
        throw std::invalid_argument("partition does not cover the graph");
    if (q.mat.rows != static_cast<int>(p.sizes.size()) || q.mat.rows != q.mat.cols)
        throw std::invalid_argument("quotient matrix dimension mismatch");
    IntMatrix a = adjacency_matrix(g);
    IntMatrix pp = characteristic_matrix(p);
    return a * pp == pp * q.mat;
}

ScalingDiagonals scaling_diagonals(const Composition& c) {
    require_even(c);
    ScalingDiagonals s;
    for (int i = 1; i <= c.length(); ++i) {
        s.d.push_back(Rational(c.alpha(i)));
        if (i % 2 == 1)
            s.d_prime.push_back(make_rational(c.alpha(i) - 1, c.alpha(i)));
        else
            s.d_prime.push_back(Rational(0));
    }
    return s;
}

bool check_structural_identity(const Composition& c) {
    int m = c.k() * 2;
    Graph h = antiregular(m);
    ScalingDiagonals s = scaling_diagonals(c);
    IntMatrix q = quotient_matrix(c).mat;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Rational lhs(q.at(i, j));
            Rational a(h.adjacent(i, j) ? 1 : 0);
            if (i == j) a += s.d_prime[static_cast<std::size_t>(i)];
            Rational rhs = a * s.d[static_cast<std::size_t>(j)];
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace cgraphs
