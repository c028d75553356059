#include "cgraphs/sweep.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cgraphs/charpoly.hpp"
#include "cgraphs/construct.hpp"
#include "cgraphs/quotient.hpp"
#include "cgraphs/recognize.hpp"
#include "cgraphs/spectra.hpp"

namespace cgraphs {

namespace {

constexpr Check kAllChecks[] = {
    Check::ConstructAgreement, Check::Equitable,    Check::StructuralIdentity,
    Check::Charpoly,           Check::Inertia,      Check::Multiplicity,
    Check::Interval,           Check::DistinctBound, Check::Recognition,
    Check::QuotientInertia,
};

}  // namespace

std::span<const Check> all_checks() { return kAllChecks; }

std::string_view check_name(Check c) {
    switch (c) {
        case Check::ConstructAgreement: return "construct-agreement";
        case Check::Equitable: return "equitable";
        case Check::StructuralIdentity: return "structural-identity";
        case Check::Charpoly: return "charpoly";
        case Check::Inertia: return "inertia";
        case Check::Multiplicity: return "multiplicity";
        case Check::Interval: return "interval";
        case Check::DistinctBound: return "distinct-bound";
        case Check::Recognition: return "recognition";
        case Check::QuotientInertia: return "quotient-inertia";
    }
    return "unknown";
}

std::optional<Check> parse_check_name(std::string_view name) {
    for (Check c : kAllChecks)
        if (check_name(c) == name) return c;
    return std::nullopt;
}

namespace {

bool wants(std::span<const Check> checks, Check c) {
    for (Check x : checks)
        if (x == c) return true;
    return false;
}

struct CompositionData {
    const Composition& c;
    std::optional<std::pair<Graph, ClassPartition>> built;
    std::optional<QuotientMatrix> q;
    std::optional<IntPoly> oracle_a;
    std::optional<IntPoly> oracle_q;
    std::optional<IntPoly> formula_pi;
    std::optional<IntPoly> formula_full;

    explicit CompositionData(const Composition& comp) : c(comp) {}

    const std::pair<Graph, ClassPartition>& graph() {
        if (!built) built = build_cgraph(c);
        return *built;
    }
    const QuotientMatrix& quotient() {
        if (!q) q = quotient_matrix(c);
        return *q;
    }
    const IntPoly& psi_oracle() {
        if (!oracle_a) oracle_a = charpoly_oracle(adjacency_matrix(graph().first));
        return *oracle_a;
    }
    const IntPoly& psi_q_oracle() {
        if (!oracle_q) oracle_q = charpoly_oracle(quotient().mat);
        return *oracle_q;
    }
    const IntPoly& psi_pi_formula() {
        if (!formula_pi) formula_pi = psi_pi(c);
        return *formula_pi;
    }
    const IntPoly& psi_formula() {
        if (!formula_full) formula_full = psi_full(c);
        return *formula_full;
    }
};

}  // namespace

std::vector<SweepFailure> run_composition_checks(const Composition& c, std::span<const Check> checks) {
    std::vector<SweepFailure> failures;
    auto fail = [&](Check check, std::string detail) {
        failures.push_back({c.parts(), check, std::move(detail)});
    };
    CompositionData data(c);
    // A throwing check is recorded as its own failure; the sweep never aborts.
    auto guard = [&](Check check, auto&& body) {
        if (!wants(checks, check)) return;
        try {
            body();
        } catch (const std::exception& e) {
            fail(check, std::string("exception: ") + e.what());
        }
    };

    guard(Check::ConstructAgreement, [&] {
        auto direct = build_cgraph_direct(c);
        if (!(direct.first == data.graph().first && direct.second == data.graph().second))
            fail(Check::ConstructAgreement, "recurrence and direct constructions differ");
    });
    guard(Check::Equitable, [&] {
        if (!check_equitable(data.graph().first, data.graph().second, data.quotient()))
            fail(Check::Equitable, "A*P != P*Q");
    });
    guard(Check::StructuralIdentity, [&] {
        if (!check_structural_identity(c)) fail(Check::StructuralIdentity, "Q != (A_2k + D')*D");
    });
    guard(Check::Charpoly, [&] {
        if (data.psi_pi_formula() != data.psi_q_oracle())
            fail(Check::Charpoly, "psi_pi formula disagrees with the quotient oracle");
        if (data.psi_formula() != data.psi_oracle())
            fail(Check::Charpoly, "psi formula disagrees with the adjacency oracle");
    });
    guard(Check::Inertia, [&] {
        if (inertia_formula(c) != inertia_from_poly(data.psi_oracle()))
            fail(Check::Inertia, "inertia formula disagrees with the oracle");
    });
    guard(Check::Multiplicity, [&] {
        MultiplicityReport m = multiplicity_formula(c);
        long m0 = factor_multiplicity(data.psi_oracle(), IntPoly::x());
        long m1 = factor_multiplicity(data.psi_oracle(), make_poly({1, 1}));
        if (m.m0 != m0 || m.m_minus1 != m1) {
            std::ostringstream os;
            os << "multiplicity formula (" << m.m0 << "," << m.m_minus1 << ") vs oracle (" << m0
               << "," << m1 << ")";
            fail(Check::Multiplicity, os.str());
        }
        bool present = quotient_minus_one(c).has_value();
        bool divides = factor_multiplicity(data.psi_q_oracle(), make_poly({1, 1})) > 0;
        if (present != divides)
            fail(Check::Multiplicity, "quotient -1 eigenvector presence mismatches (x+1) | psi_pi");
    });
    guard(Check::Interval, [&] {
        IntervalReport r = interval_check(c);
        if (r.count_in_gap != 0) {
            std::ostringstream os;
            os << r.count_in_gap << " roots inside the eigenvalue-free interval";
            fail(Check::Interval, os.str());
        }
    });
    guard(Check::DistinctBound, [&] {
        if (!distinct_count_bound(c, data.psi_formula()))
            fail(Check::DistinctBound, "more than 2k+2 distinct eigenvalues");
    });
    guard(Check::Recognition, [&] {
        PeelReport r = recognize(data.graph().first);
        if (r.verdict != Verdict::MemberOfCEven || r.sequence != c.parts())
            fail(Check::Recognition, "round trip did not recover the composition");
    });
    guard(Check::QuotientInertia, [&] {
        if (inertia_from_poly(data.psi_q_oracle()) != quotient_inertia(c))
            fail(Check::QuotientInertia, "quotient inertia is not (k, 0, k)");
    });
    return failures;
}

SweepReport run_sweep(int max_n, std::vector<Check> checks, int jobs) {
    if (max_n < 2) throw std::invalid_argument("sweep needs max_n >= 2");
    if (checks.empty()) checks.assign(kAllChecks, kAllChecks + std::size(kAllChecks));
    if (jobs < 1) jobs = 1;

    SweepReport report;
    report.max_n = max_n;
    report.jobs = jobs;
    report.checks = checks;

    std::vector<Composition> comps = even_compositions_up_to(max_n);
    report.composition_count = static_cast<long>(comps.size());

    std::vector<std::vector<SweepFailure>> results(comps.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= comps.size()) break;
            results[idx] = run_composition_checks(comps[idx], checks);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    for (auto& r : results)
        for (auto& f : r) report.failures.push_back(std::move(f));
    return report;
}

}  // namespace cgraphs
