#include "cgraphs/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cgraphs {

namespace {
const Integer kZero = 0;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Integer v) {
    std::vector<Integer> c;
    if (v != 0) c.push_back(std::move(v));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

IntPoly IntPoly::monomial(Integer coeff, int deg) {
    if (coeff == 0) return IntPoly();
    std::vector<Integer> c(static_cast<std::size_t>(deg) + 1, Integer(0));
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
}

const Integer& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const Integer& IntPoly::lead() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Integer IntPoly::eval(const Integer& t) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::max(a.coeffs().size(), b.coeffs().size()), Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::max(a.coeffs().size(), b.coeffs().size()), Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Integer> c(a.coeffs());
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Integer> c(a.coeffs().size() + b.coeffs().size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const Integer& s) {
    if (s == 0) return IntPoly();
    std::vector<Integer> c(a.coeffs());
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
}

IntPoly shift_up(const IntPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("negative shift");
    if (a.is_zero() || e == 0) return a;
    std::vector<Integer> c(a.coeffs().size() + static_cast<std::size_t>(e), Integer(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i + static_cast<std::size_t>(e)] = a.coeffs()[i];
    return IntPoly(std::move(c));
}

IntPoly pow(const IntPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    IntPoly acc = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) acc = acc * a;
    return acc;
}

IntPoly derivative(const IntPoly& a) {
    if (a.coeffs().size() <= 1) return IntPoly();
    std::vector<Integer> c(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) c[i - 1] = a.coeffs()[i] * Integer(static_cast<long>(i));
    return IntPoly(std::move(c));
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) {
        if (p.is_zero()) return IntPoly();
        return std::nullopt;
    }
    if (p.is_zero()) return IntPoly();
    if (p.degree() < q.degree()) return std::nullopt;

    std::vector<Integer> rem(p.coeffs());
    std::vector<Integer> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1, Integer(0));
    const auto& qc = q.coeffs();
    int dq = q.degree();
    int dr = p.degree();
    while (dr >= dq) {
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
        if (dr < dq) break;
        Integer f, r;
        mpz_tdiv_qr(f.get_mpz_t(), r.get_mpz_t(), rem[static_cast<std::size_t>(dr)].get_mpz_t(),
                    q.lead().get_mpz_t());
        if (r != 0) return std::nullopt;
        int pos = dr - dq;
        quot[static_cast<std::size_t>(pos)] = f;
        for (int i = 0; i <= dq; ++i) rem[static_cast<std::size_t>(pos + i)] -= f * qc[static_cast<std::size_t>(i)];
        --dr;
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

Integer content(const IntPoly& a) {
    Integer g = 0;
    for (const auto& v : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Integer g = content(a);
    std::vector<Integer> c(a.coeffs());
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

IntPoly normalize_sign(const IntPoly& a) {
    if (!a.is_zero() && sgn(a.lead()) < 0) return -a;
    return a;
}

namespace {

// Pseudo-remainder up to a nonzero constant factor; only used inside the
// primitive PRS where every step is re-primitivized.
IntPoly prem_scaled(IntPoly a, const IntPoly& b) {
    const Integer& lc = b.lead();
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int da = a.degree();
        IntPoly s = shift_up(b, da - db) * a.lead();
        a = a * lc - s;
    }
    return a;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return normalize_sign(primitive_part(b));
    if (b.is_zero()) return normalize_sign(primitive_part(a));
    IntPoly u = primitive_part(a);
    IntPoly v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = primitive_part(prem_scaled(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return normalize_sign(u);
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    IntPoly pp = normalize_sign(primitive_part(p));
    if (pp.degree() == 0) return IntPoly::constant(1);
    IntPoly g = gcd(pp, derivative(pp));
    if (g.degree() == 0) return pp;
    auto q = divide_exact(pp, g);
    if (!q) throw std::logic_error("gcd(p, p') does not divide p");
    return normalize_sign(primitive_part(*q));
}

namespace {

IntPoly must_divide(const IntPoly& p, const IntPoly& q) {
    auto r = divide_exact(p, q);
    if (!r) throw std::logic_error("exact division failed in squarefree decomposition");
    return normalize_sign(primitive_part(*r));
}

}  // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
    std::vector<std::pair<IntPoly, int>> result;
    IntPoly t = normalize_sign(primitive_part(p));
    if (t.degree() == 0) return result;
    IntPoly u = gcd(t, derivative(t));
    IntPoly v = must_divide(t, u);  // product of the distinct factors
    int i = 1;
    while (v.degree() > 0) {
        IntPoly w = gcd(u, v);  // distinct factors of multiplicity > i
        IntPoly fi = must_divide(v, w);
        if (fi.degree() > 0) result.emplace_back(fi, i);
        v = std::move(w);
        u = must_divide(u, v);
        ++i;
    }
    return result;
}

int factor_multiplicity(const IntPoly& p, const IntPoly& f) {
    if (p.is_zero()) throw std::invalid_argument("factor multiplicity in zero polynomial");
    if (f.is_constant()) throw std::invalid_argument("factor must be nonconstant");
    int count = 0;
    IntPoly cur = p;
    while (auto q = divide_exact(cur, f)) {
        cur = std::move(*q);
        ++count;
    }
    return count;
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return gcd(p, derivative(p)).degree() == 0;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Integer& c = p.coeff(i);
        if (c == 0) continue;
        Integer a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace cgraphs
