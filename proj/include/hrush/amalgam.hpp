#pragma once

#include "hrush/canonical.hpp"
#include "hrush/good_function.hpp"
#include "hrush/graph.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hrush {

// A free amalgam B u_A C inside `ambient`: A = B n C, B u C covers every
// vertex, and no edge joins B \ A to C \ A.
struct AmalgamDiagram {
    Graph ambient;
    VertexMask part_a = 0;
    VertexMask part_b = 0;
    VertexMask part_c = 0;
};

// Checks every diagram invariant (parts, freeness, A <= B, A <= C, B and C
// in K_f); throws PreconditionError naming the first failure.
void check_diagram(const AmalgamDiagram& diag, const GoodFunction& cfg);

AmalgamDiagram make_diagram(Graph ambient, const std::vector<std::string>& a, const std::vector<std::string>& b,
                            const std::vector<std::string>& c, const GoodFunction& cfg);

// Glues c onto b along `identification` (label in b -> label in c). The
// domain must be d-closed in b and the image d-closed in c. Vertices of c
// outside the image keep their label unless it is taken in b, in which case
// a primed variant is used.
AmalgamDiagram free_amalgam(const Graph& b, const Graph& c, const std::map<std::string, std::string>& identification,
                            const GoodFunction& cfg);

// {"ambient": <graph>, "A": [...], "B": [...], "C": [...]}
AmalgamDiagram diagram_from_json(const nlohmann::json& j, const GoodFunction& cfg);
nlohmann::json diagram_to_json(const AmalgamDiagram& diag);

struct LatticePoint {
    std::int64_t size = 0;
    Rational predim;
    bool operator==(const LatticePoint&) const = default;
};

struct AmalgamationReport {
    bool pass = true;
    std::size_t size_bound = 0;
    std::size_t triples_checked = 0;
    std::vector<LatticePoint> points;
    // p, q, r and the fourth vertex of their parallelogram.
    std::optional<std::array<LatticePoint, 4>> counterexample;
};

// Lattice check for the free amalgamation property on parts of at most
// size_bound vertices: for realisable points p, q, r (q = r allowed) with
// p strictly below q and r in both coordinates, the point q + r - p must
// lie on or above f.
AmalgamationReport verify_free_amalgamation_property(const GoodFunction& cfg, std::size_t size_bound);

inline constexpr std::size_t max_lattice_size_bound = 8;

struct TowerStep {
    std::string vertex;
    std::string first;
    std::string second;
};

// A graph reached from a start graph by adding vertices one at a time, each
// joined by two edges to what is already there.
struct TowerExtension {
    Graph graph;
    std::vector<TowerStep> tower;
};

struct TowerSearchOptions {
    // Skip attachment pairs at distance <= 3, which close a cycle of length
    // at most 5. Only applied when f already excludes such cycles.
    bool prune_short_cycles = true;
};

// One-point extensions of g: a new vertex joined to two vertices of g such
// that the result stays in K_f and g <=* result. One entry per admissible
// unordered attachment pair. Requires alpha = 2.
std::vector<TowerExtension> one_point_extensions(const Graph& g, const GoodFunction& cfg);

// Independent re-check of the eventual-closure conditions for D over diag.
struct ClosureCheck {
    bool contains_amalgam = false;
    bool in_class = false;
    bool free = false;
    bool self_sufficient = false;
    bool same_predimension = false;
    bool parts_closed = false;
    bool ok() const
    {
        return contains_amalgam && in_class && free && self_sufficient && same_predimension && parts_closed;
    }
};

ClosureCheck check_eventual_closure(const AmalgamDiagram& diag, const Graph& d, const GoodFunction& cfg);

// Added vertices that may appear in an eventual closure: f^{-1}(delta) - |ambient|.
std::int64_t closure_gap(const AmalgamDiagram& diag, const GoodFunction& cfg);

// Tower decompositions are only complete below this many added vertices.
inline constexpr std::size_t max_tower_depth = 5;

// All eventual closures of the diagram up to isomorphism fixing B u C
// pointwise, the amalgam itself included when it qualifies. Sorted by
// canonical form. PreconditionError when closure_gap(diag) >= 6.
std::vector<TowerExtension> eventual_closures(const AmalgamDiagram& diag, const GoodFunction& cfg,
                                              const TowerSearchOptions& options = {});

// The distance criterion: gap below 6 and every vertex of B \ A within
// distance 3 of every vertex of C \ A.
bool distance_criterion_applies(const AmalgamDiagram& diag, const GoodFunction& cfg);

// True when the amalgam has no eventual closure strictly larger than itself.
bool has_no_proper_eventual_closure(const AmalgamDiagram& diag, const GoodFunction& cfg);

// Extensions B of g with g <=* B, delta(B) = delta(g), B in K_f and every
// constraint set still d-closed in B, up to isomorphism fixing g pointwise.
// g itself is included. depth_bound above 5 is rejected.
std::vector<TowerExtension> enumerate_zero_extensions(const Graph& g, const std::vector<VertexMask>& closed_constraints,
                                                      const GoodFunction& cfg, std::size_t depth_bound = max_tower_depth,
                                                      const TowerSearchOptions& options = {});

nlohmann::json extension_to_json(const TowerExtension& ext);

} // namespace hrush
