#include "cgraphs/recognize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cgraphs/construct.hpp"

namespace cgraphs {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::MemberOfCEven: return "member-of-C-even";
        case Verdict::MemberOfCOddOnly: return "member-of-C-odd-only";
        case Verdict::NotACGraph: return "not-a-C-graph";
    }
    return "unknown";
}

std::vector<std::vector<int>> false_twin_classes(const Graph& g) {
    // Adjacency rows are equal exactly for false twins (diagonal is zero).
    std::vector<std::vector<int>> classes;
    std::map<std::vector<std::uint8_t>, std::size_t> index;
    for (int v = 0; v < g.order(); ++v) {
        auto row = g.row(v);
        std::vector<std::uint8_t> key(row.begin(), row.end());
        auto [it, inserted] = index.try_emplace(std::move(key), classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].push_back(v);
    }
    return classes;
}

std::optional<PeelStep> peel_step(const Graph& g) {
    int n = g.order();
    if (n == 0) throw std::invalid_argument("peel step on empty graph");
    // A false-twin class is independent; it qualifies iff its members are
    // adjacent to every vertex outside it. Several classes can qualify (stars,
    // complete multipartite graphs); ties break toward the class holding the
    // largest label, which on construction-ordered labels is the class added
    // last and keeps the peel aligned with the recurrence.
    std::vector<std::vector<int>> classes = false_twin_classes(g);
    const std::vector<int>* chosen = nullptr;
    for (const auto& cls : classes) {
        if (g.degree(cls.front()) != n - static_cast<int>(cls.size())) continue;
        if (!chosen || cls.back() > chosen->back()) chosen = &cls;
    }
    if (!chosen) return std::nullopt;
    PeelStep step;
    step.peeled = *chosen;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v : step.peeled) removed[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) step.residue_to_parent.push_back(v);
    step.residue = complement(induced_subgraph(g, step.residue_to_parent));
    return step;
}

namespace {

// Rebuild C(sequence) and compare with g under the class-respecting relabeling.
bool rebuild_matches(const Graph& g, const std::vector<int>& sequence,
                     const std::vector<int>& class_of) {
    auto [built, part] = build_cgraph(Composition(sequence));
    int n = g.order();
    std::vector<int> offset(sequence.size() + 1, 0);
    for (std::size_t i = 0; i < sequence.size(); ++i)
        offset[i + 1] = offset[i] + sequence[i];
    std::vector<int> to_canonical(static_cast<std::size_t>(n), -1);
    std::vector<int> next = offset;
    for (int v = 0; v < n; ++v)
        to_canonical[static_cast<std::size_t>(v)] = next[static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])]++;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != built.adjacent(to_canonical[static_cast<std::size_t>(u)],
                                                   to_canonical[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

}  // namespace

namespace {

struct PeelSearch {
    // Peel sets in original labels, in peel order.
    std::vector<std::vector<int>> trail;
    std::optional<std::vector<std::vector<int>>> odd_completion;
    std::optional<std::vector<std::vector<int>>> first_dead_end;

    // DFS over qualifying twin classes, largest-label class first. Returns
    // true once a completion with an even number of peels is on the trail;
    // odd completions and the first dead end are kept as fallbacks. A graph
    // can carry both parities (stars), so parity needs the search, not just
    // a greedy pass.
    bool run(const Graph& g, const std::vector<int>& to_orig) {
        if (g.order() == 0) {
            if (trail.size() % 2 == 0) return true;
            if (!odd_completion) odd_completion = trail;
            return false;
        }
        std::vector<std::vector<int>> classes = false_twin_classes(g);
        std::vector<const std::vector<int>*> qualifying;
        for (const auto& cls : classes)
            if (g.degree(cls.front()) == g.order() - static_cast<int>(cls.size()))
                qualifying.push_back(&cls);
        std::sort(qualifying.begin(), qualifying.end(),
                  [](const auto* a, const auto* b) { return a->back() > b->back(); });
        if (qualifying.empty()) {
            if (!first_dead_end) first_dead_end = trail;
            return false;
        }
        for (const auto* cls : qualifying) {
            std::vector<int> orig_labels;
            std::vector<int> keep;
            for (int v : *cls) orig_labels.push_back(to_orig[static_cast<std::size_t>(v)]);
            std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
            for (int v : *cls) removed[static_cast<std::size_t>(v)] = 1;
            for (int v = 0; v < g.order(); ++v)
                if (!removed[static_cast<std::size_t>(v)]) keep.push_back(v);
            std::vector<int> next_to_orig;
            for (int v : keep) next_to_orig.push_back(to_orig[static_cast<std::size_t>(v)]);
            trail.push_back(std::move(orig_labels));
            if (run(complement(induced_subgraph(g, keep)), next_to_orig)) return true;
            trail.pop_back();
        }
        return false;
    }
};

}  // namespace

PeelReport recognize(const Graph& g) {
    PeelReport report;
    int n = g.order();
    report.class_of.assign(static_cast<std::size_t>(n), -1);
    if (n == 0) {
        report.even_length = true;
        report.verdict = Verdict::NotACGraph;
        return report;
    }

    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    PeelSearch search;
    bool found_even = search.run(g, identity);

    const std::vector<std::vector<int>>* peel_sets = nullptr;
    bool failed = false;
    if (found_even) {
        peel_sets = &search.trail;
    } else if (search.odd_completion) {
        peel_sets = &*search.odd_completion;
    } else {
        failed = true;
        static const std::vector<std::vector<int>> kEmpty;
        peel_sets = search.first_dead_end ? &*search.first_dead_end : &kEmpty;
    }

    int m = static_cast<int>(peel_sets->size());
    report.sequence.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        int cls = m - 1 - j;  // first peel is the last class
        const auto& members = (*peel_sets)[static_cast<std::size_t>(j)];
        report.sequence[static_cast<std::size_t>(cls)] = static_cast<int>(members.size());
        for (int v : members) report.class_of[static_cast<std::size_t>(v)] = cls;
    }
    report.even_length = m % 2 == 0;

    if (failed) {
        report.verdict = Verdict::NotACGraph;
    } else if (m % 2 == 1) {
        report.verdict = Verdict::MemberOfCOddOnly;
    } else {
        report.verdict = m >= 2 && rebuild_matches(g, report.sequence, report.class_of)
                             ? Verdict::MemberOfCEven
                             : Verdict::NotACGraph;
    }
    return report;
}

}  // namespace cgraphs
