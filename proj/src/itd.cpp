#include "hrush/itd.hpp"

#include "hrush/amalgam.hpp"
#include "hrush/error.hpp"
#include "hrush/graph_io.hpp"
#include "hrush/predim.hpp"

#include <algorithm>
#include <map>

namespace hrush {

namespace {

constexpr std::array<std::pair<int, int>, 3> pair_indices{{{1, 2}, {1, 3}, {2, 3}}};

bool free_between(const Graph& g, VertexMask left, VertexMask right)
{
    for (VertexMask rest = left; rest; rest &= rest - 1)
        if (g.neighbours(static_cast<std::size_t>(std::countr_zero(rest))) & right)
            return false;
    return true;
}

// Region of every vertex: 0 for D0, i for D_i \ D0, 3 + slot for
// D_ij \ (D_i u D_j), 7 for anything else. `perm` renames the indices.
std::vector<int> region_colours(const ItdDiagram& diag, const std::array<int, 3>& perm)
{
    std::vector<int> colours(diag.ambient.order(), 7);
    for (std::size_t v = 0; v < colours.size(); ++v) {
        VertexMask bit = VertexMask{1} << v;
        if (diag.base & bit) {
            colours[v] = 0;
            continue;
        }
        bool placed = false;
        for (int i = 1; i <= 3 && !placed; ++i)
            if (diag.single(i) & bit) {
                colours[v] = perm[static_cast<std::size_t>(i - 1)];
                placed = true;
            }
        for (std::size_t s = 0; s < 3 && !placed; ++s)
            if (diag.pairs[s] & bit) {
                auto [i, j] = pair_indices[s];
                colours[v] = 3 + static_cast<int>(ItdDiagram::pair_slot(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)])) + 1;
                placed = true;
            }
    }
    return colours;
}

// Graphs D_i extending `base` (its vertices first, in order) with
// base <= D_i, base != D_i, D_i in K_f and delta(D_i) < limit, up to
// isomorphism over base.
std::vector<Graph> closed_extensions(const Graph& base, const GoodFunction& cfg, const Rational& limit, std::size_t max_order)
{
    std::vector<Graph> out;
    std::vector<Graph> level{base};
    for (std::size_t n = base.order() + 1; n <= max_order; ++n) {
        std::map<CanonicalForm, Graph> next;
        for (const auto& g : level)
            for (VertexMask around = 0; around < (VertexMask{1} << g.order()); ++around) {
                Graph h = g;
                auto v = h.add_vertex("x" + std::to_string(n - base.order()));
                for (std::size_t u = 0; u < g.order(); ++u)
                    if ((around >> u) & 1U)
                        h.add_edge(u, v);
                if (!in_class(h, cfg))
                    continue;
                next.emplace(canonical_form_over(h, base.all()), std::move(h));
            }
        level.clear();
        for (auto& [form, g] : next) {
            if (predimension(g, cfg) < limit && is_d_closed(g, base.all(), cfg))
                out.push_back(g);
            level.push_back(std::move(g));
        }
    }
    return out;
}

std::string stem(const std::string& prefix, std::size_t k) { return prefix + std::to_string(k + 1); }

} // namespace

std::size_t ItdDiagram::pair_slot(int i, int j)
{
    if (i > j)
        std::swap(i, j);
    if (i == 1 && j == 2)
        return 0;
    if (i == 1 && j == 3)
        return 1;
    if (i == 2 && j == 3)
        return 2;
    throw InputError("pair indices must be two distinct values in 1..3");
}

Rational ItdPredims::top_pair() const { return std::max({pairs[0], pairs[1], pairs[2]}); }

ItdPredims itd_predims(const ItdDiagram& diag, const GoodFunction& cfg)
{
    ItdPredims p;
    p.base = predimension(diag.ambient, diag.base, cfg);
    for (std::size_t i = 0; i < 3; ++i) {
        p.singles[i] = predimension(diag.ambient, diag.singles[i], cfg);
        p.pairs[i] = predimension(diag.ambient, diag.pairs[i], cfg);
    }
    p.total = predimension(diag.ambient, cfg);
    return p;
}

ItdAxioms validate_itd(const ItdDiagram& diag, const GoodFunction& cfg)
{
    const Graph& d = diag.ambient;
    VertexMask everything = diag.base;
    for (std::size_t i = 0; i < 3; ++i)
        everything |= diag.singles[i] | diag.pairs[i];
    if (!is_subset(everything, d.all()))
        throw PreconditionError("ITD parts must lie in the ambient graph");

    ItdAxioms ax;
    ax.parts_in_class = in_class(d.induced(diag.base), cfg);
    for (std::size_t i = 0; i < 3; ++i)
        ax.parts_in_class = ax.parts_in_class && in_class(d.induced(diag.singles[i]), cfg) && in_class(d.induced(diag.pairs[i]), cfg);

    ax.singles_meet_in_base = true;
    ax.singles_closed_in_pairs = true;
    ax.singles_independent = true;
    for (auto [i, j] : pair_indices) {
        VertexMask di = diag.single(i), dj = diag.single(j), dij = diag.pair(i, j);
        ax.singles_meet_in_base = ax.singles_meet_in_base && (di & dj) == diag.base;
        if (!is_subset(di | dj, dij)) {
            ax.singles_closed_in_pairs = false;
            ax.singles_independent = false;
            continue;
        }
        Graph part = d.induced(dij);
        VertexMask li = part.mask_of(d.labels_of(di));
        VertexMask lj = part.mask_of(d.labels_of(dj));
        ax.singles_closed_in_pairs = ax.singles_closed_in_pairs && is_d_closed(part, li, cfg) && is_d_closed(part, lj, cfg);
        VertexMask l0 = li & lj;
        bool independent = free_between(part, li & ~l0, lj & ~l0) &&
                           predimension(part, li | lj, cfg) == predimension(part, closure(part, li | lj, cfg), cfg);
        ax.singles_independent = ax.singles_independent && independent;
    }

    ax.pairs_meet_in_singles = true;
    for (int j = 1; j <= 3; ++j)
        for (int i = 1; i <= 3; ++i)
            for (int k = 1; k <= 3; ++k)
                if (i != j && j != k && i != k)
                    ax.pairs_meet_in_singles = ax.pairs_meet_in_singles && (diag.pair(i, j) & diag.pair(j, k)) == diag.single(j);

    ax.edges_covered = true;
    for (auto [a, b] : d.edges()) {
        VertexMask e = (VertexMask{1} << a) | (VertexMask{1} << b);
        ax.edges_covered = ax.edges_covered && std::any_of(diag.pairs.begin(), diag.pairs.end(), [&](VertexMask p) { return is_subset(e, p); });
    }
    return ax;
}

ProperItdChecks proper_itd_checks(const ItdDiagram& diag, const GoodFunction& cfg)
{
    ProperItdChecks c;
    c.base_strictly_inside = true;
    for (int i = 1; i <= 3; ++i)
        c.base_strictly_inside = c.base_strictly_inside && is_subset(diag.base, diag.single(i)) && diag.base != diag.single(i);
    c.pairs_strictly_larger = true;
    c.pairs_are_closures = true;
    for (auto [i, j] : pair_indices) {
        VertexMask u = diag.single(i) | diag.single(j);
        VertexMask dij = diag.pair(i, j);
        c.pairs_strictly_larger = c.pairs_strictly_larger && is_subset(u, dij) && u != dij;
        c.pairs_are_closures = c.pairs_are_closures && closure(diag.ambient, u, cfg) == dij;
    }
    return c;
}

bool validate_proper_itd(const ItdDiagram& diag, const GoodFunction& cfg)
{
    return validate_itd(diag, cfg).ok() && proper_itd_checks(diag, cfg).ok();
}

CanonicalForm itd_canonical_form(const ItdDiagram& diag)
{
    std::array<int, 3> perm{1, 2, 3};
    std::optional<CanonicalForm> best;
    do {
        auto form = canonical_form(diag.ambient, region_colours(diag, perm));
        if (!best || form < *best)
            best = std::move(form);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

std::optional<std::int64_t> itd_size_bound(const ItdDiagram& diag, const GoodFunction& cfg)
{
    auto p = itd_predims(diag, cfg);
    std::int64_t beta = popcount(diag.base);
    for (std::size_t s = 0; s < 3; ++s) {
        auto [i, j] = pair_indices[s];
        beta += max_size_at_predim(cfg, p.singles[static_cast<std::size_t>(i - 1)] + p.singles[static_cast<std::size_t>(j - 1)] - p.base);
    }
    for (std::size_t i = 0; i < 3; ++i) {
        auto least = min_size_at_predim(cfg, p.singles[i]);
        if (!least)
            return std::nullopt;
        beta -= static_cast<std::int64_t>(*least);
    }
    return beta;
}

std::vector<ItdDiagram> enumerate_proper_itds(const GoodFunction& cfg, const Rational& d12_max)
{
    if (d12_max > max_itd_pair_predim)
        throw UnsupportedError("proper ITDs are enumerated only for pair predimension at most 5; larger values are covered by the growth condition");
    if (d12_max < cfg.breakpoints.front().value)
        return {};
    const auto pair_order = static_cast<std::size_t>(max_size_at_predim(cfg, d12_max));

    std::map<CanonicalForm, ItdDiagram> found;
    for (const auto& base_shape : class_members(cfg, pair_order)) {
        if (predimension(base_shape, cfg) >= d12_max)
            continue;
        Graph base;
        for (std::size_t v = 0; v < base_shape.order(); ++v)
            base.add_vertex(stem("o", v));
        for (auto [a, b] : base_shape.edges())
            base.add_edge(a, b);
        const std::size_t n0 = base.order();
        auto singles = closed_extensions(base, cfg, d12_max, pair_order);

        // Proper eventual closures of D_a u_{D0} D_b for every pair of shapes.
        std::map<std::pair<std::size_t, std::size_t>, std::vector<Graph>> closures;
        auto closures_of = [&](std::size_t a, std::size_t b) -> const std::vector<Graph>& {
            auto key = std::make_pair(a, b);
            if (auto it = closures.find(key); it != closures.end())
                return it->second;
            std::vector<Graph> out;
            std::map<std::string, std::string> ident;
            for (const auto& l : base.labels())
                ident[l] = l;
            auto diag = free_amalgam(singles[a], singles[b], ident, cfg);
            if (predimension(diag.ambient, cfg) <= d12_max)
                for (auto& ext : eventual_closures(diag, cfg))
                    if (ext.graph.order() > diag.ambient.order())
                        out.push_back(std::move(ext.graph));
            return closures.emplace(key, std::move(out)).first->second;
        };

        for (std::size_t s1 = 0; s1 < singles.size(); ++s1)
            for (std::size_t s2 = s1; s2 < singles.size(); ++s2)
                for (std::size_t s3 = s2; s3 < singles.size(); ++s3) {
                    const std::array<std::size_t, 3> pick{s1, s2, s3};
                    const auto& c12 = closures_of(s1, s2);
                    const auto& c13 = closures_of(s1, s3);
                    const auto& c23 = closures_of(s2, s3);
                    for (const auto& g12 : c12)
                        for (const auto& g13 : c13)
                            for (const auto& g23 : c23) {
                                const std::array<const Graph*, 3> glued{&g12, &g13, &g23};
                                ItdDiagram diag;
                                Graph& d = diag.ambient;
                                for (const auto& l : base.labels())
                                    d.add_vertex(l);
                                diag.base = d.all();
                                // Extra vertices of each D_i, in the order of its shape.
                                std::array<std::vector<std::size_t>, 3> single_at;
                                for (std::size_t i = 0; i < 3; ++i) {
                                    const Graph& shape = singles[pick[i]];
                                    single_at[i].resize(shape.order());
                                    for (std::size_t v = 0; v < shape.order(); ++v)
                                        single_at[i][v] = v < n0 ? v : d.add_vertex("d" + std::to_string(i + 1) + "_" + std::to_string(v - n0 + 1));
                                }
                                for (std::size_t i = 0; i < 3; ++i) {
                                    diag.singles[i] = diag.base;
                                    for (auto v : single_at[i])
                                        diag.singles[i] |= VertexMask{1} << v;
                                }
                                for (std::size_t s = 0; s < 3; ++s) {
                                    auto [i, j] = pair_indices[s];
                                    const auto& left = single_at[static_cast<std::size_t>(i - 1)];
                                    const auto& right = single_at[static_cast<std::size_t>(j - 1)];
                                    const Graph& e = *glued[s];
                                    // Closure layout: D_i, then D_j \ D0, then added vertices.
                                    std::vector<std::size_t> at(e.order());
                                    for (std::size_t v = 0; v < e.order(); ++v) {
                                        if (v < left.size())
                                            at[v] = left[v];
                                        else if (v < left.size() + right.size() - n0)
                                            at[v] = right[v - left.size() + n0];
                                        else
                                            at[v] = d.add_vertex("e" + std::to_string(i) + std::to_string(j) + "_" +
                                                                 std::to_string(v - left.size() - right.size() + n0 + 1));
                                    }
                                    for (auto [a, b] : e.edges())
                                        d.add_edge(at[a], at[b]);
                                    for (auto v : at)
                                        diag.pairs[s] |= VertexMask{1} << v;
                                }
                                if (itd_predims(diag, cfg).top_pair() > d12_max || !validate_proper_itd(diag, cfg))
                                    continue;
                                found.emplace(itd_canonical_form(diag), std::move(diag));
                            }
                }
    }
    std::vector<ItdDiagram> out;
    for (auto& [form, diag] : found)
        out.push_back(std::move(diag));
    return out;
}

GrowthReport sitd_growth_check(const GoodFunction& cfg, std::int64_t k, std::int64_t t_from, std::int64_t t_to)
{
    if (t_from < 1)
        throw InputError("growth check starts at t >= 1");
    GrowthReport report;
    report.k = k;
    report.t_from = t_from;
    report.t_to = t_to;
    const std::int64_t anchor = cfg.junction().size;
    for (std::int64_t t = t_from; t <= t_to; ++t) {
        if (cfg.tail == TailKind::LogBase3 && t >= anchor) {
            // f(3t) - f(t) = log_3(3) = 1 from here on.
            report.analytic = true;
            if (k < 1)
                report.pass = false, report.failing_t = t;
            return report;
        }
        auto ft = exact_value(cfg, t);
        if (!ft)
            throw DomainError("f(" + std::to_string(t) + ") is not rational below the logarithmic tail");
        if (compare_f(cfg, *ft + k, 3 * t) < 0) {
            report.pass = false;
            report.failing_t = t;
            return report;
        }
    }
    return report;
}

std::pair<std::int64_t, std::int64_t> default_growth_range(const GoodFunction& cfg)
{
    const std::int64_t from = cfg.junction().size;
    if (auto limit = cfg.domain_limit())
        return {from, std::max(from, *limit / 3)};
    return {from, 1000};
}

ItdClosureReport check_itd_closure(const GoodFunction& cfg, const Rational& d12_max)
{
    ItdClosureReport report;
    report.d12_max = d12_max;
    for (auto& diag : enumerate_proper_itds(cfg, d12_max)) {
        ItdFinding finding;
        finding.predims = itd_predims(diag, cfg);
        finding.size_bound = itd_size_bound(diag, cfg);
        finding.above_f = compare_f(cfg, finding.predims.total, static_cast<std::int64_t>(diag.ambient.order())) >= 0;
        report.pass = report.pass && finding.above_f;
        finding.diagram = std::move(diag);
        report.diagrams.push_back(std::move(finding));
    }
    auto [from, to] = default_growth_range(cfg);
    report.growth = sitd_growth_check(cfg, 1, from, to);
    report.pass = report.pass && report.growth.pass;
    return report;
}

ItdDiagram itd_from_json(const nlohmann::json& j)
{
    try {
        ItdDiagram diag;
        diag.ambient = graph_from_json(j.at("ambient"));
        auto part = [&](const char* key) { return diag.ambient.mask_of(j.at(key).get<std::vector<std::string>>()); };
        diag.base = part("D0");
        diag.singles = {part("D1"), part("D2"), part("D3")};
        diag.pairs = {part("D12"), part("D13"), part("D23")};
        return diag;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed ITD: ") + e.what());
    } catch (const InputError& e) {
        throw ParseError(0, e.what());
    }
}

nlohmann::json itd_to_json(const ItdDiagram& diag)
{
    const auto& g = diag.ambient;
    return {{"ambient", graph_to_json(g)},
            {"D0", g.labels_of(diag.base)},
            {"D1", g.labels_of(diag.singles[0])},
            {"D2", g.labels_of(diag.singles[1])},
            {"D3", g.labels_of(diag.singles[2])},
            {"D12", g.labels_of(diag.pairs[0])},
            {"D13", g.labels_of(diag.pairs[1])},
            {"D23", g.labels_of(diag.pairs[2])}};
}

nlohmann::json itd_axioms_to_json(const ItdAxioms& a)
{
    return {{"parts_in_class", a.parts_in_class},
            {"singles_meet_in_base", a.singles_meet_in_base},
            {"singles_closed_in_pairs", a.singles_closed_in_pairs},
            {"pairs_meet_in_singles", a.pairs_meet_in_singles},
            {"singles_independent", a.singles_independent},
            {"edges_covered", a.edges_covered},
            {"ok", a.ok()}};
}

nlohmann::json growth_report_to_json(const GrowthReport& r)
{
    nlohmann::json j{{"pass", r.pass}, {"analytic", r.analytic}, {"k", r.k}, {"t_from", r.t_from}, {"t_to", r.t_to}};
    if (r.failing_t)
        j["failing_t"] = *r.failing_t;
    return j;
}

nlohmann::json itd_report_to_json(const ItdClosureReport& report)
{
    nlohmann::json diagrams = nlohmann::json::array();
    for (const auto& f : report.diagrams) {
        auto j = itd_to_json(f.diagram);
        j["predimensions"] = {{"d0", to_string(f.predims.base)},
                              {"d1", to_string(f.predims.singles[0])},
                              {"d2", to_string(f.predims.singles[1])},
                              {"d3", to_string(f.predims.singles[2])},
                              {"d12", to_string(f.predims.pairs[0])},
                              {"d13", to_string(f.predims.pairs[1])},
                              {"d23", to_string(f.predims.pairs[2])},
                              {"d", to_string(f.predims.total)}};
        j["size"] = f.diagram.ambient.order();
        if (f.size_bound)
            j["size_bound"] = *f.size_bound;
        j["above_f"] = f.above_f;
        diagrams.push_back(std::move(j));
    }
    return {{"pass", report.pass}, {"d12_max", to_string(report.d12_max)}, {"diagrams", diagrams}, {"growth", growth_report_to_json(report.growth)}};
}

} // namespace hrush
