#pragma once

#include <span>
#include <utility>

#include "cgraphs/composition.hpp"
#include "cgraphs/graph.hpp"

namespace cgraphs {

// Vertex classes C_1..C_m of a C-graph in construction order; class i (0-based
// here) occupies the sizes[i] vertices added at step i+1, a contiguous range.
struct ClassPartition {
    std::vector<int> class_of;  // vertex -> 0-based class index
    std::vector<int> sizes;

    bool operator==(const ClassPartition&) const = default;
};

ClassPartition contiguous_partition(std::span<const int> sizes);

// C(a_1) = complement(K_{a_1}); C(a_1..a_i) = complement(C(a_1..a_{i-1}) + K_{a_i}).
// Accepts any length >= 1 (recognition works with odd-length residues too).
Graph build_by_recurrence(std::span<const int> parts);

// Paper recurrence; even length enforced.
std::pair<Graph, ClassPartition> build_cgraph(const Composition& c);

// Direct rule: inside class p a clique iff p odd (1-based); across classes
// p < q adjacent iff q even. Independent witness for build_cgraph.
std::pair<Graph, ClassPartition> build_cgraph_direct(const Composition& c);

// H_n: C(1,...,1) for even n, C(1,2,1,...,1) for odd n. Requires n >= 2.
Composition antiregular_composition(int n);
Graph antiregular(int n);

}  // namespace cgraphs
