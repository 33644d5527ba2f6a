#include "hrush/predim.hpp"

#include "hrush/canonical.hpp"
#include "hrush/error.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace hrush {

namespace {

void require_scannable(const Graph& g)
{
    if (g.order() > max_scan_order)
        throw UnsupportedError("exhaustive subset scans are limited to " + std::to_string(max_scan_order) + " vertices, got " + std::to_string(g.order()));
}

// Edge count of every subset of g, indexed by mask.
std::vector<std::uint8_t> subset_edge_counts(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::uint8_t> edges(std::size_t{1} << n, 0);
    for (VertexMask mask = 1; mask < (VertexMask{1} << n); ++mask) {
        auto low = static_cast<std::size_t>(std::countr_zero(mask));
        VertexMask rest = mask & (mask - 1);
        edges[mask] = static_cast<std::uint8_t>(edges[rest] + popcount(g.neighbours(low) & rest));
    }
    return edges;
}

// max_edges[k]: most edges a k-vertex member of K_f may carry, -1 if none.
std::vector<std::int64_t> edge_allowance(const GoodFunction& cfg, std::size_t n)
{
    std::vector<std::int64_t> allowance(n + 1, -1);
    for (std::size_t k = 1; k <= n; ++k) {
        std::int64_t most = static_cast<std::int64_t>(k * (k - 1) / 2);
        std::int64_t e = most;
        while (e >= 0 && compare_f(cfg, cfg.alpha * static_cast<std::int64_t>(k) - e, static_cast<std::int64_t>(k)) < 0)
            --e;
        allowance[k] = e;
    }
    return allowance;
}

// Scaled predimension of A u X for every X inside the complement of A,
// indexed by the position of X within `outside`.
std::vector<std::int64_t> superset_values(const Graph& d, VertexMask a, const std::vector<std::size_t>& outside, const ScaledPredim& scaled)
{
    const std::size_t k = outside.size();
    std::vector<std::int64_t> values(std::size_t{1} << k);
    std::vector<VertexMask> sets(std::size_t{1} << k);
    values[0] = scaled.of(d, a);
    sets[0] = a;
    for (std::size_t sub = 1; sub < values.size(); ++sub) {
        auto low = static_cast<std::size_t>(std::countr_zero(sub));
        std::size_t rest = sub & (sub - 1);
        std::size_t v = outside[low];
        sets[sub] = sets[rest] | (VertexMask{1} << v);
        values[sub] = values[rest] + scaled(1, static_cast<std::size_t>(popcount(d.neighbours(v) & sets[rest])));
    }
    return values;
}

std::vector<std::size_t> outside_of(const Graph& d, VertexMask a)
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < d.order(); ++v)
        if (!((a >> v) & 1U))
            out.push_back(v);
    return out;
}

void require_subset(const Graph& d, VertexMask a)
{
    if (!is_subset(a, d.all()))
        throw InputError("subset is not contained in the vertex set");
}

} // namespace

ScaledPredim::ScaledPredim(const Rational& alpha)
    : p_(to_int64(numerator(alpha)))
    , q_(to_int64(denominator(alpha)))
{
}

Rational predimension(const Graph& g, const GoodFunction& cfg)
{
    return predimension(g, g.all(), cfg);
}

Rational predimension(const Graph& g, VertexMask subset, const GoodFunction& cfg)
{
    require_subset(g, subset);
    return cfg.alpha * popcount(subset) - static_cast<std::int64_t>(g.edges_within(subset));
}

bool in_class(const Graph& g, const GoodFunction& cfg)
{
    return !smallest_violation(g, cfg).has_value();
}

std::optional<VertexMask> smallest_violation(const Graph& g, const GoodFunction& cfg)
{
    require_scannable(g);
    if (g.empty())
        return std::nullopt;
    auto allowance = edge_allowance(cfg, g.order());
    auto edges = subset_edge_counts(g);
    std::optional<VertexMask> best;
    for (VertexMask mask = 1; mask < edges.size(); ++mask) {
        if (static_cast<std::int64_t>(edges[mask]) <= allowance[static_cast<std::size_t>(popcount(mask))])
            continue;
        if (!best || popcount(mask) < popcount(*best))
            best = mask;
    }
    return best;
}

bool is_d_closed(const Graph& d, VertexMask a, const GoodFunction& cfg)
{
    require_subset(d, a);
    require_scannable(d);
    ScaledPredim scaled(cfg.alpha);
    auto values = superset_values(d, a, outside_of(d, a), scaled);
    return std::all_of(values.begin() + 1, values.end(), [&](std::int64_t v) { return v > values[0]; });
}

bool is_self_sufficient(const Graph& d, VertexMask a, const GoodFunction& cfg)
{
    require_subset(d, a);
    require_scannable(d);
    ScaledPredim scaled(cfg.alpha);
    auto values = superset_values(d, a, outside_of(d, a), scaled);
    return std::all_of(values.begin(), values.end(), [&](std::int64_t v) { return v >= values[0]; });
}

VertexMask closure(const Graph& d, VertexMask a, const GoodFunction& cfg)
{
    require_subset(d, a);
    require_scannable(d);
    ScaledPredim scaled(cfg.alpha);
    auto outside = outside_of(d, a);
    auto values = superset_values(d, a, outside, scaled);
    const std::size_t k = outside.size();

    // below[sub]: least value over strict supersets of sub within the cube.
    std::vector<std::int64_t> at_or_above = values;
    for (std::size_t bit = 0; bit < k; ++bit)
        for (std::size_t sub = 0; sub < values.size(); ++sub)
            if (!((sub >> bit) & 1U))
                at_or_above[sub] = std::min(at_or_above[sub], at_or_above[sub | (std::size_t{1} << bit)]);

    std::optional<std::size_t> found;
    for (std::size_t sub = 0; sub < values.size(); ++sub) {
        std::int64_t strict_min = std::numeric_limits<std::int64_t>::max();
        for (std::size_t bit = 0; bit < k; ++bit)
            if (!((sub >> bit) & 1U))
                strict_min = std::min(strict_min, at_or_above[sub | (std::size_t{1} << bit)]);
        if (values[sub] >= strict_min)
            continue;
        if (!found || std::popcount(sub) < std::popcount(*found))
            found = sub;
    }
    VertexMask result = a;
    for (std::size_t bit = 0; bit < k; ++bit)
        if ((*found >> bit) & 1U)
            result |= VertexMask{1} << outside[bit];
    return result;
}

Rational dimension(const Graph& d, VertexMask a, const GoodFunction& cfg)
{
    return predimension(d, closure(d, a, cfg), cfg);
}

std::vector<Graph> class_members(const GoodFunction& cfg, std::size_t max_order)
{
    std::map<CanonicalForm, Graph> current{{canonical_form(Graph{}), Graph{}}};
    std::vector<Graph> all{Graph{}};
    for (std::size_t n = 1; n <= max_order; ++n) {
        std::map<CanonicalForm, Graph> next;
        for (const auto& [form, g] : current) {
            for (VertexMask around = 0; around < (VertexMask{1} << g.order()); ++around) {
                Graph h = g;
                auto v = h.add_vertex("v" + std::to_string(n));
                for (std::size_t u = 0; u < g.order(); ++u)
                    if ((around >> u) & 1U)
                        h.add_edge(u, v);
                if (!in_class(h, cfg))
                    continue;
                next.emplace(canonical_form(h), std::move(h));
            }
        }
        for (const auto& [form, g] : next)
            all.push_back(g);
        current = std::move(next);
    }
    return all;
}

std::optional<std::size_t> min_size_at_predim(const GoodFunction& cfg, const Rational& d)
{
    if (d == 0)
        return 0;
    if (d < 0 || compare_f(cfg, d, 1) < 0)
        return std::nullopt;
    auto bound = static_cast<std::size_t>(max_size_at_predim(cfg, d));
    for (const auto& g : class_members(cfg, bound))
        if (predimension(g, cfg) == d)
            return g.order();
    return std::nullopt;
}

} // namespace hrush
