#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace cgraphs {

// Exact arithmetic carriers used throughout the library.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational: lowest terms, denominator > 0.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sgn(const Rational& v) { return mpq_sgn(v.get_mpq_t()); }

inline bool is_integral(const Rational& v) {
    return v.get_den() == 1;
}

// Thrown when an odd-length composition reaches an operation defined only on
// the even-length family.
class OutsideCEvenError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cgraphs
