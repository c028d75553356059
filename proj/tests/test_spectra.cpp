#include <doctest.h>

#include "cgraphs/charpoly.hpp"
#include "cgraphs/construct.hpp"
#include "cgraphs/quotient.hpp"
#include "cgraphs/spectra.hpp"
#include "cgraphs/sturm.hpp"

using namespace cgraphs;

namespace {

const IntPoly kQuartic = make_poly({78, 8, -27, -4, 1});

bool is_eigen_pair(const IntMatrix& a, const std::vector<Integer>& x, long lambda) {
    auto image = a * x;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (image[i] != Integer(lambda) * x[i]) return false;
    return true;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<int> class_vertices(const ClassPartition& part, int cls) {
    std::vector<int> out;
    for (std::size_t v = 0; v < part.class_of.size(); ++v)
        if (part.class_of[v] == cls) out.push_back(static_cast<int>(v));
    return out;
}

}  // namespace

TEST_CASE("inertia formula") {
    CHECK(inertia_formula(Composition({1, 1})) == Inertia{1, 0, 1});
    CHECK(inertia_formula(Composition({4, 3, 2, 2})) == Inertia{6, 3, 2});
    CHECK(inertia_formula(Composition({3, 2, 2, 3})) == Inertia{5, 3, 2});
    CHECK(quotient_inertia(Composition({4, 3, 2, 2})) == Inertia{2, 0, 2});
    CHECK_THROWS_AS(inertia_formula(Composition({2, 1, 1})), OutsideCEvenError);
}

TEST_CASE("multiplicity formula") {
    CHECK(multiplicity_formula(Composition({4, 3, 2, 2})) == MultiplicityReport{3, 4});
    CHECK(multiplicity_formula(Composition({2, 1})) == MultiplicityReport{0, 2});
    CHECK(multiplicity_formula(Composition({3, 2, 2, 3})) == MultiplicityReport{3, 3});
}

TEST_CASE("quotient eigenvector for -1") {
    auto x21 = quotient_minus_one(Composition({2, 1}));
    REQUIRE(x21.has_value());
    CHECK(*x21 == std::vector<Integer>{-1, 2});

    CHECK_FALSE(quotient_minus_one(Composition({4, 3, 2, 2})).has_value());

    auto x11 = quotient_minus_one(Composition({1, 1}));
    REQUIRE(x11.has_value());
    CHECK(*x11 == std::vector<Integer>{-1, 1});

    SUBCASE("presence iff (x+1) divides the quotient charpoly") {
        for (int n = 2; n <= 9; ++n)
            for (const auto& c : even_compositions_of(n)) {
                bool present = quotient_minus_one(c).has_value();
                IntPoly psi_q = charpoly_oracle(quotient_matrix(c).mat);
                bool divides = factor_multiplicity(psi_q, make_poly({1, 1})) > 0;
                REQUIRE(present == divides);
                REQUIRE(present == (c.alpha(2) == 1));
            }
    }
}

TEST_CASE("twin eigenvectors") {
    Graph k2 = Graph::complete(2);
    auto vecs = twin_eigenvectors(k2, std::vector<int>{0, 1}, TwinKind::Clique);
    REQUIRE(vecs.size() == 1);
    CHECK(vecs[0] == std::vector<Integer>{1, -1});
    CHECK(is_eigen_pair(adjacency_matrix(k2), vecs[0], -1));

    SUBCASE("independent class of C(3,2,2,3)") {
        auto [g, part] = build_cgraph(Composition({3, 2, 2, 3}));
        auto members = class_vertices(part, 1);  // class 2, size 2, independent
        auto kernel = twin_eigenvectors(g, members, TwinKind::Independent);
        REQUIRE(kernel.size() == 1);
        CHECK(is_eigen_pair(adjacency_matrix(g), kernel[0], 0));
    }

    SUBCASE("clique class of C(4,3,2,2)") {
        auto [g, part] = build_cgraph(Composition({4, 3, 2, 2}));
        auto members = class_vertices(part, 0);  // class 1, size 4, clique
        auto vectors = twin_eigenvectors(g, members, TwinKind::Clique);
        REQUIRE(vectors.size() == 3);
        IntMatrix a = adjacency_matrix(g);
        for (const auto& x : vectors) CHECK(is_eigen_pair(a, x, -1));
        for (std::size_t i = 0; i < vectors.size(); ++i)
            for (std::size_t j = i + 1; j < vectors.size(); ++j)
                CHECK(dot(vectors[i], vectors[j]) == 0);
    }

    SUBCASE("precondition violations") {
        Graph p3(3);
        p3.add_edge(0, 1);
        p3.add_edge(0, 2);
        CHECK_THROWS_WITH_AS(twin_eigenvectors(p3, std::vector<int>{1, 2}, TwinKind::Clique),
                             doctest::Contains("not adjacent"), std::invalid_argument);
        CHECK_THROWS_AS(twin_eigenvectors(p3, std::vector<int>{0, 1}, TwinKind::Independent),
                        std::invalid_argument);
        CHECK_THROWS_AS(twin_eigenvectors(p3, std::vector<int>{1}, TwinKind::Independent),
                        std::invalid_argument);
        Graph p4(4);
        p4.add_edge(0, 1);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        // 0 and 3 are non-adjacent but not twins
        CHECK_THROWS_WITH_AS(twin_eigenvectors(p4, std::vector<int>{0, 3}, TwinKind::Independent),
                             doctest::Contains("not twins"), std::invalid_argument);
    }

    SUBCASE("all classes of all compositions up to n = 8") {
        for (int n = 2; n <= 8; ++n)
            for (const auto& c : even_compositions_of(n)) {
                auto [g, part] = build_cgraph(c);
                IntMatrix a = adjacency_matrix(g);
                for (int cls = 0; cls < c.length(); ++cls) {
                    auto members = class_vertices(part, cls);
                    if (members.size() < 2) continue;
                    bool odd_class = cls % 2 == 0;  // 1-based class index odd
                    auto vectors = twin_eigenvectors(
                        g, members, odd_class ? TwinKind::Clique : TwinKind::Independent);
                    REQUIRE(vectors.size() == members.size() - 1);
                    for (const auto& x : vectors)
                        REQUIRE(is_eigen_pair(a, x, odd_class ? -1 : 0));
                    for (std::size_t i = 0; i < vectors.size(); ++i)
                        for (std::size_t j = i + 1; j < vectors.size(); ++j)
                            REQUIRE(dot(vectors[i], vectors[j]) == 0);
                }
            }
    }
}

TEST_CASE("characteristic polynomial oracle") {
    IntMatrix swap2(2, 2);
    swap2.at(0, 1) = 1;
    swap2.at(1, 0) = 1;
    CHECK(charpoly_oracle(swap2) == make_poly({-1, 0, 1}));

    CHECK(charpoly_oracle(quotient_matrix(Composition({4, 3, 2, 2})).mat) == kQuartic);

    CHECK(charpoly_oracle(adjacency_matrix(Graph::complete(3))) == make_poly({-2, -3, 0, 1}));

    CHECK(charpoly_oracle(IntMatrix(0, 0)) == IntPoly::constant(1));
    CHECK_THROWS_AS(charpoly_oracle(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("Sturm root counting") {
    IntPoly x2m1 = make_poly({-1, 0, 1});
    CHECK(sturm_count(x2m1, Rational(-2), Rational(0)) == 1);
    CHECK(sturm_count(x2m1, Rational(-1), Rational(1)) == 1);  // excludes -1, includes 1
    CHECK(sturm_count(x2m1, Rational(-2), Rational(-1)) == 1);
    CHECK(sturm_count(x2m1, Rational(-1), Rational(0)) == 0);
    CHECK(sturm_count(x2m1, Rational(-3), Rational(3)) == 2);

    CHECK_THROWS_AS(sturm_count(IntPoly(), Rational(0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(sturm_count(x2m1, Rational(1), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(sturm_count(pow(make_poly({1, 1}), 2), Rational(-2), Rational(0)),
                    std::invalid_argument);

    SUBCASE("positive roots of the golden quartic") {
        IntPoly sf = squarefree_part(kQuartic);
        CHECK(sf == kQuartic);
        CHECK(sturm_count(sf, Rational(0), Rational(79)) == 2);  // Cauchy bound 1 + 78
    }

    SUBCASE("degenerate degrees") {
        CHECK(sturm_count(IntPoly::constant(5), Rational(-10), Rational(10)) == 0);
        CHECK(sturm_count(make_poly({-3, 2}), Rational(0), Rational(2)) == 1);  // root 3/2
        CHECK(sturm_count(make_poly({-3, 2}), Rational(2), Rational(9)) == 0);
    }

    SUBCASE("chain shape") {
        SturmChain chain = sturm_chain(x2m1);
        REQUIRE(chain.polys.size() == 3);
        CHECK(chain.polys[0] == x2m1);
        CHECK(chain.polys[1] == make_poly({0, 1}));
        CHECK(chain.polys[2].degree() == 0);
        for (std::size_t i = 1; i < chain.polys.size(); ++i)
            CHECK(chain.polys[i].degree() < chain.polys[i - 1].degree());
    }
}

TEST_CASE("inertia from polynomial") {
    CHECK(inertia_from_poly(make_poly({-1, 0, 1})) == Inertia{1, 0, 1});
    CHECK(inertia_from_poly(make_poly({-2, -3, 0, 1})) == Inertia{2, 0, 1});
    CHECK_THROWS_AS(inertia_from_poly(make_poly({1, 0, 1})), std::invalid_argument);  // x^2 + 1
    CHECK_THROWS_AS(inertia_from_poly(IntPoly()), std::invalid_argument);

    IntPoly psi = charpoly_oracle(adjacency_matrix(build_cgraph(Composition({3, 2, 2, 3})).first));
    CHECK(inertia_from_poly(psi) == Inertia{5, 3, 2});
    CHECK(inertia_from_poly(psi) == inertia_formula(Composition({3, 2, 2, 3})));

    SUBCASE("matches the formula exhaustively to n = 8") {
        for (int n = 2; n <= 8; ++n)
            for (const auto& c : even_compositions_of(n)) {
                IntPoly p = charpoly_oracle(adjacency_matrix(build_cgraph(c).first));
                REQUIRE(inertia_from_poly(p) == inertia_formula(c));
                REQUIRE(inertia_from_poly(charpoly_oracle(quotient_matrix(c).mat)) ==
                        quotient_inertia(c));
            }
    }
}

TEST_CASE("eigenvalue-free interval") {
    IntervalReport r11 = interval_check(Composition({1, 1}));
    CHECK(r11.count_in_gap == 0);
    CHECK(r11.lambda_minus_ub == make_rational(-12071, 10000));
    CHECK(r11.lambda_plus_lb == make_rational(2071, 10000));

    IntervalReport r4322 = interval_check(Composition({4, 3, 2, 2}));
    CHECK(r4322.count_in_gap == 0);
    CHECK(r4322.lambda_plus_lb == make_rational(2071 * 2, 10000));

    SUBCASE("every composition of n = 10") {
        for (const auto& c : even_compositions_of(10)) REQUIRE(interval_check(c).count_in_gap == 0);
    }

    SUBCASE("antiregular desk check") {
        for (int n = 2; n <= 13; ++n) {
            IntPoly psi = charpoly_oracle(adjacency_matrix(antiregular(n)));
            IntPoly phi = psi;
            while (auto q = divide_exact(phi, IntPoly::x())) phi = *q;
            while (auto q = divide_exact(phi, make_poly({1, 1}))) phi = *q;
            REQUIRE(sturm_count(squarefree_part(phi), make_rational(-12071, 10000),
                                make_rational(2071, 10000)) == 0);
        }
    }
}

TEST_CASE("distinct eigenvalue bound") {
    CHECK(distinct_count_bound(Composition({1, 1}), psi_full(Composition({1, 1}))));
    CHECK(distinct_count_bound(Composition({2, 1}), psi_full(Composition({2, 1}))));

    IntPoly psi = psi_full(Composition({4, 3, 2, 2}));
    CHECK(squarefree_part(psi).degree() == 6);  // exactly 2k + 2
    CHECK(distinct_count_bound(Composition({4, 3, 2, 2}), psi));
}
