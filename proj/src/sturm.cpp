#include "cgraphs/sturm.hpp"

#include <stdexcept>

#include "ratpoly_detail.hpp"

namespace cgraphs {

SturmChain sturm_chain(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    SturmChain chain;
    detail::RatPoly cur = detail::from_int_poly(p);
    detail::RatPoly next = detail::rat_derivative(cur);
    chain.polys.push_back(detail::to_primitive_int(cur));
    while (!next.is_zero()) {
        chain.polys.push_back(detail::to_primitive_int(next));
        detail::RatPoly rem = detail::rat_remainder(cur, next);
        for (auto& v : rem.c) v = -v;
        cur = std::move(next);
        next = std::move(rem);
    }
    return chain;
}

int sign_variations(const SturmChain& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain.polys) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("Sturm count of zero polynomial");
    if (!(a < b)) throw std::invalid_argument("Sturm count needs a < b");
    if (!is_squarefree(p)) throw std::invalid_argument("Sturm count needs a squarefree polynomial");
    SturmChain chain = sturm_chain(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace cgraphs
