#include "cgraphs/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgraphs {

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) { set_edge(u, v, true); }

void Graph::set_edge(int u, int v, bool present) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops not allowed");
    adj_[static_cast<std::size_t>(u) * n_ + v] = present ? 1 : 0;
    adj_[static_cast<std::size_t>(v) * n_ + u] = present ? 1 : 0;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) ++d;
    return d;
}

long Graph::edge_count() const {
    long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) c.set_edge(u, v, !g.adjacent(u, v));
    return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    Graph u(ng + nh);
    for (int a = 0; a < ng; ++a)
        for (int b = a + 1; b < ng; ++b)
            if (g.adjacent(a, b)) u.add_edge(a, b);
    for (int a = 0; a < nh; ++a)
        for (int b = a + 1; b < nh; ++b)
            if (h.adjacent(a, b)) u.add_edge(ng + a, ng + b);
    return u;
}

Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
    Graph s(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
    int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    Graph p(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) p.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return p;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u) && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

IntMatrix adjacency_matrix(const Graph& g) {
    int n = g.order();
    IntMatrix m(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) m.at(u, v) = 1;
    return m;
}

}  // namespace cgraphs
