#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgraphs/composition.hpp"

namespace cgraphs {

enum class Check {
    ConstructAgreement,
    Equitable,
    StructuralIdentity,
    Charpoly,
    Inertia,
    Multiplicity,
    Interval,
    DistinctBound,
    Recognition,
    QuotientInertia,
};

std::span<const Check> all_checks();
std::string_view check_name(Check c);
std::optional<Check> parse_check_name(std::string_view name);

struct SweepFailure {
    std::vector<int> alpha;
    Check check;
    std::string detail;
};

struct SweepReport {
    int max_n = 0;
    int jobs = 1;
    std::vector<Check> checks;
    long composition_count = 0;
    std::vector<SweepFailure> failures;

    bool pass() const { return failures.empty(); }
};

// All selected checks for one composition; failures in a fixed check order.
std::vector<SweepFailure> run_composition_checks(const Composition& c, std::span<const Check> checks);

// Every even-length composition of every n <= max_n, lexicographic per n.
// Workers share nothing; the report is identical for any jobs value.
SweepReport run_sweep(int max_n, std::vector<Check> checks, int jobs);

}  // namespace cgraphs
