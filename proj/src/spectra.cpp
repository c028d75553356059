#include "cgraphs/spectra.hpp"

#include <sstream>
#include <stdexcept>

#include "cgraphs/charpoly.hpp"
#include "cgraphs/quotient.hpp"
#include "cgraphs/sturm.hpp"
#include "ratpoly_detail.hpp"

namespace cgraphs {

Inertia inertia_formula(const Composition& c) {
    int k = c.k();
    Inertia in;
    for (int i = 1; i <= 2 * k; ++i) {
        if (i % 2 == 1)
            in.n_minus += c.alpha(i);
        else
            in.n_zero += c.alpha(i);
    }
    in.n_zero -= k;
    in.n_plus = k;
    return in;
}

Inertia quotient_inertia(const Composition& c) {
    int k = c.k();
    return {k, 0, k};
}

MultiplicityReport multiplicity_formula(const Composition& c) {
    int k = c.k();
    MultiplicityReport r;
    for (int i = 1; i <= 2 * k; ++i) {
        if (i % 2 == 0)
            r.m0 += c.alpha(i);
        else
            r.m_minus1 += c.alpha(i);
    }
    r.m0 -= k;
    r.m_minus1 -= k;
    if (c.alpha(2) == 1) r.m_minus1 += 1;
    return r;
}

std::optional<std::vector<Integer>> quotient_minus_one(const Composition& c) {
    IntMatrix q = quotient_matrix(c).mat;
    IntMatrix q_plus_i = q + IntMatrix::identity(q.rows);
    if (c.alpha(2) == 1) {
        std::vector<Integer> x(static_cast<std::size_t>(q.rows), Integer(0));
        x[0] = -1;
        x[1] = c.alpha(1);
        auto image = q_plus_i * x;
        for (const auto& v : image)
            if (v != 0) throw std::logic_error("(Q+I)X != 0 for alpha_2 = 1");
        return x;
    }
    if (det_bareiss(std::move(q_plus_i)) == 0)
        throw std::logic_error("det(Q+I) = 0 with alpha_2 != 1");
    return std::nullopt;
}

std::vector<std::vector<Integer>> twin_eigenvectors(const Graph& g, std::span<const int> members,
                                                    TwinKind kind) {
    int n = g.order();
    int m = static_cast<int>(members.size());
    if (m < 2) throw std::invalid_argument("twin set needs at least 2 vertices");
    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    for (int v : members) {
        if (v < 0 || v >= n) throw std::invalid_argument("twin set vertex out of range");
        if (in_set[static_cast<std::size_t>(v)]) throw std::invalid_argument("twin set vertex repeated");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    bool want_edge = kind == TwinKind::Clique;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]) != want_edge) {
                std::ostringstream os;
                os << "vertices " << members[static_cast<std::size_t>(i)] << " and "
                   << members[static_cast<std::size_t>(j)]
                   << (want_edge ? " are not adjacent (clique required)"
                                 : " are adjacent (independent set required)");
                throw std::invalid_argument(os.str());
            }
    for (int w = 0; w < n; ++w) {
        if (in_set[static_cast<std::size_t>(w)]) continue;
        bool first = g.adjacent(members[0], w);
        for (int i = 1; i < m; ++i)
            if (g.adjacent(members[static_cast<std::size_t>(i)], w) != first) {
                std::ostringstream os;
                os << "vertices " << members[0] << " and " << members[static_cast<std::size_t>(i)]
                   << " differ at outside vertex " << w << " (not twins)";
                throw std::invalid_argument(os.str());
            }
    }
    std::vector<std::vector<Integer>> vectors;
    for (int j = 1; j < m; ++j) {
        std::vector<Integer> x(static_cast<std::size_t>(n), Integer(0));
        for (int i = 0; i < j; ++i) x[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = 1;
        x[static_cast<std::size_t>(members[static_cast<std::size_t>(j)])] = -j;
        vectors.push_back(std::move(x));
    }
    return vectors;
}

namespace {

Integer node_at(int idx) {
    if (idx == 0) return 0;
    int half = (idx + 1) / 2;
    return idx % 2 == 1 ? Integer(half) : Integer(-half);
}

}  // namespace

IntPoly charpoly_oracle(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    int n = m.rows;
    if (n == 0) return IntPoly::constant(1);

    std::vector<Integer> nodes;
    std::vector<Rational> values;
    for (int idx = 0; idx <= n; ++idx) {
        Integer t = node_at(idx);
        IntMatrix shifted = m;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) shifted.at(i, j) = -shifted.at(i, j);
            shifted.at(i, i) += t;
        }
        values.emplace_back(det_bareiss(std::move(shifted)));
        nodes.push_back(std::move(t));
    }

    // Newton divided differences, expanded to the monomial basis.
    std::vector<Rational> dd = values;
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            dd[static_cast<std::size_t>(i)] =
                (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
                Rational(nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(i - level)]);

    detail::RatPoly acc;
    detail::RatPoly basis;
    basis.c = {Rational(1)};
    for (int i = 0; i <= n; ++i) {
        if (static_cast<int>(acc.c.size()) < i + 1) acc.c.resize(static_cast<std::size_t>(i) + 1, Rational(0));
        for (std::size_t j = 0; j < basis.c.size(); ++j)
            acc.c[j] += dd[static_cast<std::size_t>(i)] * basis.c[j];
        if (i < n) {
            // basis *= (x - nodes[i])
            detail::RatPoly next;
            next.c.assign(basis.c.size() + 1, Rational(0));
            for (std::size_t j = 0; j < basis.c.size(); ++j) {
                next.c[j + 1] += basis.c[j];
                next.c[j] -= basis.c[j] * Rational(nodes[static_cast<std::size_t>(i)]);
            }
            basis = std::move(next);
        }
    }
    acc.trim();

    std::vector<Integer> coeffs;
    coeffs.reserve(acc.c.size());
    for (const auto& v : acc.c) {
        if (!is_integral(v))
            throw std::logic_error("charpoly interpolation produced a non-integer coefficient");
        coeffs.push_back(v.get_num());
    }
    IntPoly p{std::move(coeffs)};
    if (p.degree() != n || p.lead() != 1)
        throw std::logic_error("charpoly interpolation is not monic of the matrix order");
    return p;
}

Inertia inertia_from_poly(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("inertia of zero polynomial");
    Inertia in;
    int n0 = 0;
    while (p.coeff(n0) == 0) ++n0;
    in.n_zero = n0;

    std::vector<Integer> rest(p.coeffs().begin() + n0, p.coeffs().end());
    IntPoly q{std::move(rest)};
    if (q.degree() > 0) {
        Integer max_abs = 0;
        for (const auto& v : q.coeffs()) {
            Integer a = abs(v);
            if (a > max_abs) max_abs = a;
        }
        Rational bound(max_abs + 1);
        for (const auto& [factor, mult] : squarefree_decomposition(q)) {
            in.n_minus += static_cast<long>(mult) * sturm_count(factor, -bound, Rational(0));
            in.n_plus += static_cast<long>(mult) * sturm_count(factor, Rational(0), bound);
        }
    }
    if (in.n_minus + in.n_zero + in.n_plus != p.degree())
        throw std::invalid_argument("polynomial has non-real roots (inertia undefined)");
    return in;
}

IntervalReport interval_check(const Composition& c) {
    IntPoly psi = psi_pi(c);
    if (psi.eval(Integer(0)) == 0) throw std::logic_error("psi_pi has root 0");
    IntPoly x_plus_1 = make_poly({1, 1});
    int mult = factor_multiplicity(psi, x_plus_1);
    IntPoly phi = psi;
    for (int i = 0; i < mult; ++i) phi = *divide_exact(phi, x_plus_1);

    IntervalReport report;
    report.lambda_minus_ub = make_rational(-12071, 10000);
    report.lambda_plus_lb = make_rational(Integer(2071) * c.min_part(), 10000);
    report.count_in_gap =
        sturm_count(squarefree_part(phi), report.lambda_minus_ub, report.lambda_plus_lb);
    return report;
}

bool distinct_count_bound(const Composition& c, const IntPoly& psi) {
    return squarefree_part(psi).degree() <= 2 * c.k() + 2;
}

}  // namespace cgraphs
