#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cgraphs/graph.hpp"

namespace cgraphs {

enum class Verdict { MemberOfCEven, MemberOfCOddOnly, NotACGraph };

std::string_view verdict_name(Verdict v);

struct PeelReport {
    std::vector<int> sequence;  // candidate (alpha_1..alpha_m), reversed peel order
    std::vector<int> class_of;  // vertex -> recovered 0-based class, -1 if unpeeled
    bool even_length = false;
    Verdict verdict = Verdict::NotACGraph;
};

// Vertices grouped by identical open neighborhoods, classes ordered by their
// smallest member.
std::vector<std::vector<int>> false_twin_classes(const Graph& g);

struct PeelStep {
    std::vector<int> peeled;              // the removed class, ascending labels
    Graph residue;                        // complement of the rest
    std::vector<int> residue_to_parent;   // residue vertex -> label in the input graph
};

// Removes a false-twin class that is joined to everything outside it (ties
// broken toward the class with the smallest label); the edgeless graph peels
// whole. nullopt when no class qualifies. Requires a nonempty graph.
std::optional<PeelStep> peel_step(const Graph& g);

// Repeated peeling plus the rebuild-equality check for even-length peels.
PeelReport recognize(const Graph& g);

}  // namespace cgraphs
