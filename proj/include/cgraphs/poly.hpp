#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgraphs/arith.hpp"

namespace cgraphs {

// Dense integer-coefficient polynomial, coefficients in ascending degree.
// Normalized: the zero polynomial has no coefficients, otherwise the leading
// coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(Integer v);
    static IntPoly x();
    // coeff * x^deg
    static IntPoly monomial(Integer coeff, int deg);

    const std::vector<Integer>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of x^i; zero outside the stored range.
    const Integer& coeff(int i) const;
    const Integer& lead() const;  // requires nonzero

    Integer eval(const Integer& t) const;
    Rational eval(const Rational& t) const;

    bool operator==(const IntPoly&) const = default;

  private:
    void trim();
    std::vector<Integer> c_;
};

// Ascending-degree coefficient list literal: make_poly({c0, c1, ...}).
inline IntPoly make_poly(std::initializer_list<Integer> ascending) {
    return IntPoly(std::vector<Integer>(ascending));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const Integer& s);

// a * x^e
IntPoly shift_up(const IntPoly& a, int e);
IntPoly pow(const IntPoly& a, int e);
IntPoly derivative(const IntPoly& a);

// Quotient r with r*q == p over Z[x], or nullopt when q does not divide p
// (also nullopt for q == 0 with p != 0).
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q);

Integer content(const IntPoly& a);          // gcd of coefficients, >= 0
IntPoly primitive_part(const IntPoly& a);   // content 1, sign of lead preserved
IntPoly normalize_sign(const IntPoly& a);   // lead made positive

// Polynomial gcd over the rationals, normalized to the primitive integer
// representative with positive leading coefficient. gcd(0, q) = |pp(q)|.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'); primitive with positive lead. Its degree equals the number
// of distinct complex roots of p. Rejects the zero polynomial.
IntPoly squarefree_part(const IntPoly& p);

// Musser decomposition of the primitive part: list of (f_i, i) with the f_i
// squarefree, pairwise coprime, positive lead, and pp(p) = +/- prod f_i^i.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Largest e with f^e | p (f nonconstant, p nonzero).
int factor_multiplicity(const IntPoly& p, const IntPoly& f);

bool is_squarefree(const IntPoly& p);

std::string to_string(const IntPoly& p);

}  // namespace cgraphs
