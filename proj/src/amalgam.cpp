#include "hrush/amalgam.hpp"

#include "hrush/error.hpp"
#include "hrush/graph_io.hpp"
#include "hrush/predim.hpp"

#include <algorithm>
#include <set>

namespace hrush {

namespace {

void require_alpha_two(const GoodFunction& cfg)
{
    if (cfg.alpha != 2)
        throw UnsupportedError("one-point extensions assume alpha = 2 (two attaching edges), got alpha = " + to_string(cfg.alpha));
}

bool free_between(const Graph& g, VertexMask left, VertexMask right)
{
    for (VertexMask rest = left; rest; rest &= rest - 1)
        if (g.neighbours(static_cast<std::size_t>(std::countr_zero(rest))) & right)
            return false;
    return true;
}

bool excludes_short_cycles(const GoodFunction& cfg)
{
    for (std::size_t k = 3; k <= 5; ++k)
        if (in_class(shapes::cycle(k), cfg))
            return false;
    return true;
}

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (const auto& s : items)
        out += (out.empty() ? "" : ",") + s;
    return "{" + out + "}";
}

// Breadth-first search over towers of one-point additions from `start`,
// keeping only graphs in K_f. Graphs are deduplicated level by level up to
// isomorphism fixing the start vertices pointwise, which is sound because
// isomorphic graphs over the start have isomorphic further extensions.
std::vector<TowerExtension> tower_search(const Graph& start, const GoodFunction& cfg, std::size_t depth, const TowerSearchOptions& options)
{
    const VertexMask fixed = start.all();
    const bool prune = options.prune_short_cycles && excludes_short_cycles(cfg);
    std::vector<TowerExtension> reached{{start, {}}};
    std::vector<TowerExtension> frontier{{start, {}}};
    for (std::size_t level = 1; level <= depth && !frontier.empty(); ++level) {
        std::map<CanonicalForm, TowerExtension> next;
        for (const auto& ext : frontier) {
            const Graph& g = ext.graph;
            for (std::size_t u = 0; u < g.order(); ++u)
                for (std::size_t v = u + 1; v < g.order(); ++v) {
                    if (prune && distance(g, u, v) <= 3)
                        continue;
                    Graph h = g;
                    auto w = h.add_vertex(g.fresh_label("w"));
                    h.add_edge(u, w);
                    h.add_edge(v, w);
                    if (!in_class(h, cfg))
                        continue;
                    auto form = canonical_form_over(h, fixed);
                    if (next.contains(form))
                        continue;
                    auto tower = ext.tower;
                    tower.push_back({h.label(w), g.label(u), g.label(v)});
                    next.emplace(std::move(form), TowerExtension{std::move(h), std::move(tower)});
                }
        }
        frontier.clear();
        for (auto& [form, ext] : next) {
            reached.push_back(ext);
            frontier.push_back(std::move(ext));
        }
    }
    return reached;
}

void sort_over(std::vector<TowerExtension>& exts, VertexMask fixed)
{
    std::vector<std::pair<CanonicalForm, TowerExtension>> keyed;
    for (auto& e : exts)
        keyed.emplace_back(canonical_form_over(e.graph, fixed), std::move(e));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    exts.clear();
    for (auto& [form, e] : keyed)
        exts.push_back(std::move(e));
}

} // namespace

void check_diagram(const AmalgamDiagram& diag, const GoodFunction& cfg)
{
    const auto& g = diag.ambient;
    if (!is_subset(diag.part_a | diag.part_b | diag.part_c, g.all()))
        throw PreconditionError("diagram parts must lie in the ambient graph");
    if ((diag.part_b & diag.part_c) != diag.part_a)
        throw PreconditionError("A must equal B n C");
    if ((diag.part_b | diag.part_c) != g.all())
        throw PreconditionError("B u C must cover the ambient graph");
    if (!free_between(g, diag.part_b & ~diag.part_a, diag.part_c & ~diag.part_a))
        throw PreconditionError("an edge joins B \\ A to C \\ A; the amalgam is not free");
    Graph b = g.induced(diag.part_b);
    Graph c = g.induced(diag.part_c);
    if (!in_class(b, cfg))
        throw PreconditionError("B is not in K_f");
    if (!in_class(c, cfg))
        throw PreconditionError("C is not in K_f");
    auto a_labels = g.labels_of(diag.part_a);
    if (!is_d_closed(b, b.mask_of(a_labels), cfg))
        throw PreconditionError("A is not d-closed in B");
    if (!is_d_closed(c, c.mask_of(a_labels), cfg))
        throw PreconditionError("A is not d-closed in C");
}

AmalgamDiagram make_diagram(Graph ambient, const std::vector<std::string>& a, const std::vector<std::string>& b,
                            const std::vector<std::string>& c, const GoodFunction& cfg)
{
    AmalgamDiagram diag;
    diag.part_a = ambient.mask_of(a);
    diag.part_b = ambient.mask_of(b);
    diag.part_c = ambient.mask_of(c);
    diag.ambient = std::move(ambient);
    check_diagram(diag, cfg);
    return diag;
}

AmalgamDiagram free_amalgam(const Graph& b, const Graph& c, const std::map<std::string, std::string>& identification,
                            const GoodFunction& cfg)
{
    std::vector<std::string> domain;
    std::vector<std::string> image;
    std::set<std::string> image_set;
    for (const auto& [from, to] : identification) {
        b.require_index(from);
        c.require_index(to);
        if (!image_set.insert(to).second)
            throw PreconditionError("identification is not injective at '" + to + "'");
        domain.push_back(from);
        image.push_back(to);
    }
    for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = i + 1; j < domain.size(); ++j)
            if (b.adjacent(b.require_index(domain[i]), b.require_index(domain[j])) != c.adjacent(c.require_index(image[i]), c.require_index(image[j])))
                throw PreconditionError("identification does not preserve edges between '" + domain[i] + "' and '" + domain[j] + "'");
    if (!in_class(b, cfg) || !in_class(c, cfg))
        throw PreconditionError("both sides of a free amalgam must lie in K_f");
    if (!is_d_closed(b, b.mask_of(domain), cfg))
        throw PreconditionError("base " + join(domain) + " is not d-closed in the first graph");
    if (!is_d_closed(c, c.mask_of(image), cfg))
        throw PreconditionError("base " + join(image) + " is not d-closed in the second graph");

    Graph ambient = b;
    std::map<std::string, std::string> placed;
    for (const auto& [from, to] : identification)
        placed[to] = from;
    for (const auto& label : c.labels()) {
        if (placed.contains(label))
            continue;
        std::string name = ambient.has_vertex(label) ? ambient.fresh_label(label + "'") : label;
        ambient.add_vertex(name);
        placed[label] = name;
    }
    for (const auto& [x, y] : c.labelled_edges())
        ambient.add_edge(placed.at(x), placed.at(y));

    std::vector<std::string> c_labels;
    for (const auto& label : c.labels())
        c_labels.push_back(placed.at(label));
    AmalgamDiagram diag;
    diag.part_a = ambient.mask_of(domain);
    diag.part_b = low_bits(b.order());
    diag.part_c = ambient.mask_of(c_labels);
    diag.ambient = std::move(ambient);
    check_diagram(diag, cfg);
    return diag;
}

AmalgamDiagram diagram_from_json(const nlohmann::json& j, const GoodFunction& cfg)
{
    try {
        Graph ambient = graph_from_json(j.at("ambient"));
        return make_diagram(std::move(ambient), j.at("A").get<std::vector<std::string>>(), j.at("B").get<std::vector<std::string>>(),
                            j.at("C").get<std::vector<std::string>>(), cfg);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed diagram: ") + e.what());
    } catch (const InputError& e) {
        throw ParseError(0, e.what());
    }
}

nlohmann::json diagram_to_json(const AmalgamDiagram& diag)
{
    return {{"ambient", graph_to_json(diag.ambient)},
            {"A", diag.ambient.labels_of(diag.part_a)},
            {"B", diag.ambient.labels_of(diag.part_b)},
            {"C", diag.ambient.labels_of(diag.part_c)}};
}

AmalgamationReport verify_free_amalgamation_property(const GoodFunction& cfg, std::size_t size_bound)
{
    if (size_bound > max_lattice_size_bound)
        throw UnsupportedError("lattice check enumerates K_f up to " + std::to_string(max_lattice_size_bound) + " vertices");
    AmalgamationReport report;
    report.size_bound = size_bound;
    std::set<std::pair<std::int64_t, Rational>> seen;
    for (const auto& g : class_members(cfg, size_bound))
        if (seen.emplace(static_cast<std::int64_t>(g.order()), predimension(g, cfg)).second)
            report.points.push_back({static_cast<std::int64_t>(g.order()), predimension(g, cfg)});

    const auto& pts = report.points;
    for (const auto& p : pts)
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i; j < pts.size(); ++j) {
                const auto& q = pts[i];
                const auto& r = pts[j];
                if (!(p.size < q.size && p.size < r.size && p.predim < q.predim && p.predim < r.predim))
                    continue;
                ++report.triples_checked;
                LatticePoint s{q.size + r.size - p.size, q.predim + r.predim - p.predim};
                if (compare_f(cfg, s.predim, s.size) < 0) {
                    report.pass = false;
                    report.counterexample = std::array<LatticePoint, 4>{p, q, r, s};
                    return report;
                }
            }
    return report;
}

std::vector<TowerExtension> one_point_extensions(const Graph& g, const GoodFunction& cfg)
{
    require_alpha_two(cfg);
    if (!in_class(g, cfg))
        throw PreconditionError("one-point extensions are taken of members of K_f");
    std::vector<TowerExtension> out;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v) {
            Graph h = g;
            auto w = h.add_vertex(g.fresh_label("w"));
            h.add_edge(u, w);
            h.add_edge(v, w);
            if (!in_class(h, cfg) || !is_self_sufficient(h, g.all(), cfg))
                continue;
            out.push_back({std::move(h), {{g.fresh_label("w"), g.label(u), g.label(v)}}});
        }
    return out;
}

ClosureCheck check_eventual_closure(const AmalgamDiagram& diag, const Graph& d, const GoodFunction& cfg)
{
    ClosureCheck check;
    const auto& amb = diag.ambient;
    for (const auto& label : amb.labels())
        if (!d.has_vertex(label))
            return check;
    VertexMask bc = d.mask_of(amb.labels());
    if (!(d.induced(bc) == amb))
        return check;
    check.contains_amalgam = true;
    VertexMask a = d.mask_of(amb.labels_of(diag.part_a));
    VertexMask b = d.mask_of(amb.labels_of(diag.part_b));
    VertexMask c = d.mask_of(amb.labels_of(diag.part_c));
    check.in_class = in_class(d, cfg);
    check.free = (b & c) == a && free_between(d, b & ~a, c & ~a);
    check.self_sufficient = is_self_sufficient(d, bc, cfg);
    check.same_predimension = predimension(d, bc, cfg) == predimension(d, cfg);
    check.parts_closed = is_d_closed(d, a, cfg) && is_d_closed(d, b, cfg) && is_d_closed(d, c, cfg);
    return check;
}

std::int64_t closure_gap(const AmalgamDiagram& diag, const GoodFunction& cfg)
{
    if (diag.ambient.empty())
        return 0;
    return max_size_at_predim(cfg, predimension(diag.ambient, cfg)) - static_cast<std::int64_t>(diag.ambient.order());
}

std::vector<TowerExtension> eventual_closures(const AmalgamDiagram& diag, const GoodFunction& cfg, const TowerSearchOptions& options)
{
    require_alpha_two(cfg);
    if (!in_class(diag.ambient, cfg))
        return {};
    auto gap = closure_gap(diag, cfg);
    if (gap > static_cast<std::int64_t>(max_tower_depth))
        throw PreconditionError("eventual closures may add " + std::to_string(gap) +
                                " vertices; tower enumeration is only complete when fewer than 6 vertices are added");
    auto depth = static_cast<std::size_t>(std::max<std::int64_t>(gap, 0));
    std::vector<TowerExtension> out;
    for (auto& ext : tower_search(diag.ambient, cfg, depth, options))
        if (check_eventual_closure(diag, ext.graph, cfg).ok())
            out.push_back(std::move(ext));
    sort_over(out, diag.ambient.all());
    return out;
}

bool distance_criterion_applies(const AmalgamDiagram& diag, const GoodFunction& cfg)
{
    if (closure_gap(diag, cfg) >= 6)
        return false;
    auto far = max_distance(diag.ambient, diag.part_b & ~diag.part_a, diag.part_c & ~diag.part_a);
    return far != unreachable && far <= 3;
}

bool has_no_proper_eventual_closure(const AmalgamDiagram& diag, const GoodFunction& cfg)
{
    if (distance_criterion_applies(diag, cfg) && excludes_short_cycles(cfg))
        return true;
    auto closures = eventual_closures(diag, cfg);
    return std::all_of(closures.begin(), closures.end(), [&](const TowerExtension& e) { return e.graph.order() == diag.ambient.order(); });
}

std::vector<TowerExtension> enumerate_zero_extensions(const Graph& g, const std::vector<VertexMask>& closed_constraints,
                                                      const GoodFunction& cfg, std::size_t depth_bound, const TowerSearchOptions& options)
{
    require_alpha_two(cfg);
    if (depth_bound > max_tower_depth)
        throw PreconditionError("depth bound " + std::to_string(depth_bound) + " exceeds 5; tower decompositions are only complete below 6 added vertices");
    if (!in_class(g, cfg))
        throw PreconditionError("zero extensions are taken of members of K_f");
    for (auto constraint : closed_constraints)
        if (!is_d_closed(g, constraint, cfg))
            throw PreconditionError("constraint " + join(g.labels_of(constraint)) + " is not d-closed in the base graph");
    std::int64_t room = g.empty() ? 0 : max_size_at_predim(cfg, predimension(g, cfg)) - static_cast<std::int64_t>(g.order());
    auto depth = std::min<std::size_t>(depth_bound, static_cast<std::size_t>(std::max<std::int64_t>(room, 0)));
    const Rational base_predim = predimension(g, cfg);
    std::vector<TowerExtension> out;
    for (auto& ext : tower_search(g, cfg, depth, options)) {
        const Graph& b = ext.graph;
        // Start vertices keep their indices in every extension.
        bool ok = predimension(b, cfg) == base_predim && is_self_sufficient(b, g.all(), cfg) &&
                  std::all_of(closed_constraints.begin(), closed_constraints.end(), [&](VertexMask m) { return is_d_closed(b, m, cfg); });
        if (ok)
            out.push_back(std::move(ext));
    }
    sort_over(out, g.all());
    return out;
}

nlohmann::json extension_to_json(const TowerExtension& ext)
{
    nlohmann::json tower = nlohmann::json::array();
    for (const auto& step : ext.tower)
        tower.push_back({{"vertex", step.vertex}, {"attached_to", {step.first, step.second}}});
    return {{"graph", graph_to_json(ext.graph)}, {"tower", tower}};
}

} // namespace hrush
