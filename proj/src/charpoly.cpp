#include "cgraphs/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgraphs {

bool EMatching::moves(int i) const {
    return std::any_of(lefts.begin(), lefts.end(), [i](int l) { return l == i || l + 1 == i; });
}

std::vector<EMatching> enumerate_e(int n) {
    if (n < 1) throw std::invalid_argument("E_n needs n >= 1");
    // layers[i] = E_i; E_i = E_{i-1} plus every member of E_{i-2} extended by (i-1, i)
    std::vector<std::vector<EMatching>> layers(static_cast<std::size_t>(n) + 1);
    layers[0] = {EMatching{}};
    layers[1] = {EMatching{}};
    for (int i = 2; i <= n; ++i) {
        auto& out = layers[static_cast<std::size_t>(i)];
        out = layers[static_cast<std::size_t>(i - 1)];
        for (const auto& m : layers[static_cast<std::size_t>(i - 2)]) {
            EMatching ext = m;
            ext.lefts.push_back(i - 1);
            out.push_back(std::move(ext));
        }
    }
    return layers[static_cast<std::size_t>(n)];
}

namespace {

void validate_betas(std::span<const RatFunc> betas) {
    for (const auto& b : betas)
        if (b.den.is_zero()) throw std::invalid_argument("beta with zero denominator");
}

}  // namespace

std::pair<IntPoly, IntPoly> tridiag_det_enum(std::span<const RatFunc> betas) {
    validate_betas(betas);
    int n = static_cast<int>(betas.size());
    IntPoly den = IntPoly::constant(1);
    for (const auto& b : betas) den = den * b.den;
    if (n == 0) return {IntPoly::constant(1), den};
    IntPoly num;
    for (const auto& m : enumerate_e(n)) {
        IntPoly term = IntPoly::constant(1);
        for (int i = 1; i <= n; ++i)
            term = term * (m.moves(i) ? betas[static_cast<std::size_t>(i - 1)].den
                                      : betas[static_cast<std::size_t>(i - 1)].num);
        num = num + term;
    }
    return {std::move(num), std::move(den)};
}

std::pair<IntPoly, IntPoly> tridiag_det_rec(std::span<const RatFunc> betas) {
    validate_betas(betas);
    int n = static_cast<int>(betas.size());
    IntPoly den = IntPoly::constant(1);
    for (const auto& b : betas) den = den * b.den;
    IntPoly prev2;                        // P_{-1} = 0
    IntPoly prev = IntPoly::constant(1);  // P_0 = 1
    for (int i = 1; i <= n; ++i) {
        IntPoly cur = betas[static_cast<std::size_t>(i - 1)].num * prev;
        if (i >= 2)
            cur = cur + betas[static_cast<std::size_t>(i - 1)].den *
                            betas[static_cast<std::size_t>(i - 2)].den * prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return {std::move(prev), std::move(den)};
}

std::vector<RatFunc> theorem_betas(const Composition& c) {
    require_even(c);
    std::vector<RatFunc> betas;
    for (int i = 1; i <= c.length(); ++i) {
        Integer a = c.alpha(i);
        IntPoly den = i % 2 == 1 ? make_poly({a - 1, -1}) : make_poly({a, 1});
        IntPoly num = i == 1 ? make_poly({1, 1}) : IntPoly::constant(a);
        betas.push_back({std::move(num), std::move(den)});
    }
    return betas;
}

IntPoly psi_pi(const Composition& c) {
    require_even(c);
    int m = c.length();
    int k = c.k();
    // Denominator-cleared terms of Theorem 4.2's sum over E_2k.
    std::vector<IntPoly> fixed_term, moved_term;
    for (int i = 1; i <= m; ++i) {
        Integer a = c.alpha(i);
        fixed_term.push_back(i == 1 ? make_poly({1, 1}) : IntPoly::constant(a));
        moved_term.push_back(i % 2 == 1 ? make_poly({a - 1, -1}) : make_poly({a, 1}));
    }
    IntPoly sum;
    for (const auto& sigma : enumerate_e(m)) {
        IntPoly term = IntPoly::constant(1);
        for (int i = 1; i <= m; ++i)
            term = term * (sigma.moves(i) ? moved_term[static_cast<std::size_t>(i - 1)]
                                          : fixed_term[static_cast<std::size_t>(i - 1)]);
        sum = sum + term;
    }
    if (k % 2 == 1) sum = -sum;
    if (sum.degree() != m || sum.lead() != 1)
        throw std::logic_error("psi_pi is not monic of degree 2k");
    return sum;
}

IntPoly psi_full(const Composition& c) {
    require_even(c);
    int k = c.k();
    long zero_exp = 0, minus_one_exp = 0;
    for (int i = 1; i <= 2 * k; ++i) {
        if (i % 2 == 0)
            zero_exp += c.alpha(i) - 1;
        else
            minus_one_exp += c.alpha(i) - 1;
    }
    IntPoly psi = shift_up(psi_pi(c) * pow(make_poly({1, 1}), static_cast<int>(minus_one_exp)),
                           static_cast<int>(zero_exp));
    if (psi.degree() != c.vertex_count() || psi.lead() != 1)
        throw std::logic_error("psi is not monic of degree n");
    return psi;
}

}  // namespace cgraphs
