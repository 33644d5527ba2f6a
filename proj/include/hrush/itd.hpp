#pragma once

#include "hrush/canonical.hpp"
#include "hrush/good_function.hpp"
#include "hrush/graph.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hrush {

// Independence theorem diagram: a graph D with parts D0, D1, D2, D3 and
// D12, D13, D23. Pair parts are stored in the order 12, 13, 23.
struct ItdDiagram {
    Graph ambient;
    VertexMask base = 0;
    std::array<VertexMask, 3> singles{};
    std::array<VertexMask, 3> pairs{};

    // Position of D_ij in `pairs` for 1 <= i < j <= 3 (either order).
    static std::size_t pair_slot(int i, int j);
    VertexMask pair(int i, int j) const { return pairs[pair_slot(i, j)]; }
    VertexMask single(int i) const { return i == 0 ? base : singles[static_cast<std::size_t>(i - 1)]; }
};

struct ItdPredims {
    Rational base;
    std::array<Rational, 3> singles;
    std::array<Rational, 3> pairs;
    Rational total;
    // Largest pair predimension.
    Rational top_pair() const;
};

ItdPredims itd_predims(const ItdDiagram& diag, const GoodFunction& cfg);

struct ItdAxioms {
    bool parts_in_class = false;
    bool singles_meet_in_base = false;
    bool singles_closed_in_pairs = false;
    bool pairs_meet_in_singles = false;
    bool singles_independent = false;
    bool edges_covered = false;
    bool ok() const
    {
        return parts_in_class && singles_meet_in_base && singles_closed_in_pairs && pairs_meet_in_singles && singles_independent && edges_covered;
    }
};

struct ProperItdChecks {
    bool base_strictly_inside = false;
    bool pairs_strictly_larger = false;
    bool pairs_are_closures = false;
    bool ok() const { return base_strictly_inside && pairs_strictly_larger && pairs_are_closures; }
};

// Each axiom of an ITD checked on its own. Parts outside the ambient graph
// raise PreconditionError.
ItdAxioms validate_itd(const ItdDiagram& diag, const GoodFunction& cfg);

// The two properness conditions. Meaningful when validate_itd passes.
ProperItdChecks proper_itd_checks(const ItdDiagram& diag, const GoodFunction& cfg);

bool validate_proper_itd(const ItdDiagram& diag, const GoodFunction& cfg);

// Certificate up to isomorphisms that map parts onto parts, allowing any
// permutation of the indices 1, 2, 3.
CanonicalForm itd_canonical_form(const ItdDiagram& diag);

// Upper bound on |D| from the inclusion-exclusion count:
// sum_ij floor(f^-1(d_i + d_j - d_0)) - sum_i min{|B| : delta(B) = d_i} + |D0|.
// nullopt when some d_i is not the predimension of any member of K_f.
std::optional<std::int64_t> itd_size_bound(const ItdDiagram& diag, const GoodFunction& cfg);

inline constexpr int max_itd_pair_predim = 5;

// Every proper ITD with all pair predimensions at most d12_max, up to
// part-preserving isomorphism, with D the union of the pair parts. Pair
// parts are built as proper eventual closures of D_i u_{D0} D_j, then glued
// and validated. UnsupportedError for d12_max > 5.
std::vector<ItdDiagram> enumerate_proper_itds(const GoodFunction& cfg, const Rational& d12_max);

struct GrowthReport {
    bool pass = true;
    bool analytic = false;
    std::int64_t k = 1;
    std::int64_t t_from = 0;
    std::int64_t t_to = 0;
    std::optional<std::int64_t> failing_t;
};

// f(3t) <= f(t) + k for every integer t in [t_from, t_to]. On the
// logarithmic tail f(3t) = f(t) + 1 exactly, which is used instead of
// evaluating. t_from < 1 raises InputError.
GrowthReport sitd_growth_check(const GoodFunction& cfg, std::int64_t k, std::int64_t t_from, std::int64_t t_to);

// Range used when a growth check is part of a larger verification: from the
// junction size up to 1000 for the logarithmic tail, or to a third of the
// table's reach.
std::pair<std::int64_t, std::int64_t> default_growth_range(const GoodFunction& cfg);

struct ItdFinding {
    ItdDiagram diagram;
    ItdPredims predims;
    std::optional<std::int64_t> size_bound;
    bool above_f = false;
};

struct ItdClosureReport {
    bool pass = true;
    Rational d12_max;
    std::vector<ItdFinding> diagrams;
    GrowthReport growth;
};

// Runs the enumeration and checks f(|D|) <= delta(D) on every diagram, then
// the growth condition f(3t) <= f(t) + 1 over default_growth_range.
ItdClosureReport check_itd_closure(const GoodFunction& cfg, const Rational& d12_max);

// {"ambient": <graph>, "D0": [...], "D1": ..., "D12": ..., "D13": ..., "D23": ...}
ItdDiagram itd_from_json(const nlohmann::json& j);
nlohmann::json itd_to_json(const ItdDiagram& diag);
nlohmann::json itd_axioms_to_json(const ItdAxioms& axioms);
nlohmann::json itd_report_to_json(const ItdClosureReport& report);
nlohmann::json growth_report_to_json(const GrowthReport& report);

} // namespace hrush
