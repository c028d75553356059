#include "cgraphs/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cgraphs {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Integer& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix sum dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] = a.entries[i] + b.entries[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix difference dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] = a.entries[i] - b.entries[i];
    return c;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
    if (a.cols != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Integer> r(static_cast<std::size_t>(a.rows), Integer(0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r[static_cast<std::size_t>(i)] += a.at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

Integer det_bareiss(IntMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                Integer q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw std::logic_error("Bareiss division not exact");
                m.at(i, j) = std::move(q);
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Integer det = m.at(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

Rational det_rational(const RatMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return Rational(1);
    IntMatrix cleared(n, n);
    Rational scale(1);
    for (int i = 0; i < n; ++i) {
        Integer l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rational v = m.at(i, j) * Rational(l);
            cleared.at(i, j) = v.get_num();  // denominator is 1 by construction
        }
        scale *= Rational(l);
    }
    Rational det(det_bareiss(std::move(cleared)));
    det /= scale;
    return det;
}

}  // namespace cgraphs
