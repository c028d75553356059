#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cgraphs/matrix.hpp"

namespace cgraphs {

// Simple undirected graph as a symmetric boolean adjacency matrix with a
// zero diagonal. Vertices are labelled 0..n-1.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

    static Graph empty_graph(int n) { return Graph(n); }
    static Graph complete(int n);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    void add_edge(int u, int v);
    void set_edge(int u, int v, bool present);

    int degree(int v) const;
    long edge_count() const;

    // Flat row of vertex v; rows are equal exactly for false twins.
    std::span<const std::uint8_t> row(int v) const {
        return {adj_.data() + static_cast<std::size_t>(v) * n_, static_cast<std::size_t>(n_)};
    }

    bool operator==(const Graph&) const = default;

  private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

Graph complement(const Graph& g);
// Vertices of h relabelled after g's.
Graph disjoint_union(const Graph& g, const Graph& h);
// keep lists the surviving vertices in the order they take in the result.
Graph induced_subgraph(const Graph& g, std::span<const int> keep);
// perm[old] = new label.
Graph apply_permutation(const Graph& g, std::span<const int> perm);

bool is_connected(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);  // sorted ascending
IntMatrix adjacency_matrix(const Graph& g);

}  // namespace cgraphs
