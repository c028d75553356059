#include "cgraphs/construct.hpp"

#include <stdexcept>

namespace cgraphs {

ClassPartition contiguous_partition(std::span<const int> sizes) {
    ClassPartition p;
    p.sizes.assign(sizes.begin(), sizes.end());
    for (std::size_t cls = 0; cls < sizes.size(); ++cls)
        for (int i = 0; i < sizes[cls]; ++i) p.class_of.push_back(static_cast<int>(cls));
    return p;
}

Graph build_by_recurrence(std::span<const int> parts) {
    if (parts.empty()) throw std::invalid_argument("empty part list");
    Graph g = Graph::empty_graph(parts[0]);  // complement of K_{a_1}
    for (std::size_t i = 1; i < parts.size(); ++i)
        g = complement(disjoint_union(g, Graph::complete(parts[i])));
    return g;
}

std::pair<Graph, ClassPartition> build_cgraph(const Composition& c) {
    require_even(c);
    return {build_by_recurrence(c.parts()), contiguous_partition(c.parts())};
}

std::pair<Graph, ClassPartition> build_cgraph_direct(const Composition& c) {
    require_even(c);
    ClassPartition part = contiguous_partition(c.parts());
    int n = static_cast<int>(part.class_of.size());
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        int pu = part.class_of[static_cast<std::size_t>(u)] + 1;  // 1-based class
        for (int v = u + 1; v < n; ++v) {
            int pv = part.class_of[static_cast<std::size_t>(v)] + 1;
            bool edge;
            if (pu == pv)
                edge = pu % 2 == 1;  // odd classes are cliques, even independent
            else
                edge = std::max(pu, pv) % 2 == 0;
            if (edge) g.add_edge(u, v);
        }
    }
    return {std::move(g), std::move(part)};
}

Composition antiregular_composition(int n) {
    if (n < 2) throw std::invalid_argument("antiregular graph needs n >= 2");
    std::vector<int> parts;
    if (n % 2 == 0) {
        parts.assign(static_cast<std::size_t>(n), 1);
    } else {
        parts.push_back(1);
        parts.push_back(2);
        parts.insert(parts.end(), static_cast<std::size_t>(n - 3), 1);
    }
    return Composition(std::move(parts));
}

Graph antiregular(int n) { return build_cgraph(antiregular_composition(n)).first; }

}  // namespace cgraphs
