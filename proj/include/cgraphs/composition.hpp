#pragma once

#include <vector>

#include "cgraphs/arith.hpp"

namespace cgraphs {

// The defining sequence (alpha_1, ..., alpha_m) of a C-graph. Every part is
// at least 1 and the length is at least 2; even length is required by the
// family's theorems and is checked at each entry point, not here.
class Composition {
  public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool even_length() const { return length() % 2 == 0; }
    int k() const;  // length/2; throws OutsideCEvenError when odd

    long vertex_count() const;  // n = sum of parts
    int alpha(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    int min_part() const;
    int max_part() const;

    bool operator==(const Composition&) const = default;

  private:
    std::vector<int> parts_;
};

// Throws OutsideCEvenError for odd-length compositions.
void require_even(const Composition& c);

// All even-length compositions of n, lexicographic by parts.
std::vector<Composition> even_compositions_of(int n);

// Concatenation over n = 2..max_n, lexicographic within each n.
std::vector<Composition> even_compositions_up_to(int max_n);

}  // namespace cgraphs
