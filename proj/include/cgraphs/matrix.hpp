#pragma once

#include <vector>

#include "cgraphs/arith.hpp"

namespace cgraphs {

// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Integer> entries;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, Integer(0)) {}

    static IntMatrix identity(int n);

    Integer& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Integer& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);

// Exact determinant by fraction-free Bareiss elimination.
Integer det_bareiss(IntMatrix m);

struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, Rational(0)) {}

    Rational& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const RatMatrix&) const = default;
};

// Exact rational determinant: rows cleared to integers, then Bareiss.
Rational det_rational(const RatMatrix& m);

}  // namespace cgraphs
