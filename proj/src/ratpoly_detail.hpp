#pragma once

// Internal rational-coefficient polynomial helpers shared by the Sturm chain
// and the interpolation oracle. Not part of the public headers.

#include <stdexcept>
#include <vector>

#include "cgraphs/poly.hpp"

namespace cgraphs::detail {

struct RatPoly {
    std::vector<Rational> c;  // ascending, trimmed

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

inline RatPoly from_int_poly(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) r.c.emplace_back(v);
    return r;
}

inline RatPoly rat_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.c.size(); ++i) d.c.push_back(p.c[i] * Rational(static_cast<long>(i)));
    d.trim();
    return d;
}

// Remainder of a by b over the rationals; b nonzero.
inline RatPoly rat_remainder(RatPoly a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("remainder by zero polynomial");
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        Rational f = a.c.back() / b.c.back();
        int pos = a.degree() - db;
        for (int i = 0; i <= db; ++i)
            a.c[static_cast<std::size_t>(pos + i)] -= f * b.c[static_cast<std::size_t>(i)];
        a.trim();
    }
    return a;
}

// Positive-scale primitive integer representative (sign pattern preserved).
inline IntPoly to_primitive_int(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Integer l = 1;
    for (const auto& v : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> c;
    c.reserve(p.c.size());
    for (const auto& v : p.c) {
        Rational scaled = v * Rational(l);
        c.push_back(scaled.get_num());
    }
    IntPoly ip{std::move(c)};
    return primitive_part(ip);
}

}  // namespace cgraphs::detail
