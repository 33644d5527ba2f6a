#include "hrush/graph.hpp"

#include "hrush/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hrush {

Graph::Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
{
    for (auto& v : vertices)
        add_vertex(v);
    for (const auto& [a, b] : edges)
        add_edge(a, b);
}

std::size_t Graph::add_vertex(const std::string& label)
{
    if (label.empty())
        throw InputError("empty vertex label");
    if (index_.contains(label))
        throw InputError("duplicate vertex '" + label + "'");
    if (labels_.size() >= max_vertices)
        throw InputError("graph exceeds " + std::to_string(max_vertices) + " vertices");
    index_.emplace(label, labels_.size());
    labels_.push_back(label);
    adjacency_.push_back(0);
    return labels_.size() - 1;
}

void Graph::add_edge(const std::string& a, const std::string& b)
{
    add_edge(require_index(a), require_index(b));
}

void Graph::add_edge(std::size_t a, std::size_t b)
{
    if (a >= order() || b >= order())
        throw InputError("edge endpoint out of range");
    if (a == b)
        throw InputError("loop at vertex '" + labels_[a] + "'");
    if (adjacent(a, b))
        return;
    adjacency_[a] |= VertexMask{1} << b;
    adjacency_[b] |= VertexMask{1} << a;
    ++edge_count_;
}

std::optional<std::size_t> Graph::index_of(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Graph::require_index(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        throw InputError("unknown vertex '" + label + "'");
    return it->second;
}

std::size_t Graph::edges_within(VertexMask mask) const
{
    std::size_t twice = 0;
    for (VertexMask rest = mask; rest; rest &= rest - 1)
        twice += static_cast<std::size_t>(popcount(adjacency_[std::countr_zero(rest)] & mask));
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (adjacent(a, b))
                out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<std::string, std::string>> Graph::labelled_edges() const
{
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [a, b] : edges())
        out.emplace_back(labels_[a], labels_[b]);
    return out;
}

VertexMask Graph::mask_of(std::span<const std::string> labels) const
{
    VertexMask mask = 0;
    for (const auto& l : labels)
        mask |= VertexMask{1} << require_index(l);
    return mask;
}

VertexMask Graph::mask_of(std::initializer_list<std::string> labels) const
{
    return mask_of(std::span<const std::string>(labels.begin(), labels.size()));
}

std::vector<std::string> Graph::labels_of(VertexMask mask) const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < order(); ++i)
        if ((mask >> i) & 1U)
            out.push_back(labels_[i]);
    return out;
}

Graph Graph::induced(VertexMask mask) const
{
    if (!is_subset(mask, all()))
        throw InputError("subset is not contained in the vertex set");
    Graph out;
    std::vector<std::size_t> remap(order(), 0);
    for (std::size_t i = 0; i < order(); ++i)
        if ((mask >> i) & 1U)
            remap[i] = out.add_vertex(labels_[i]);
    for (auto [a, b] : edges())
        if (((mask >> a) & 1U) && ((mask >> b) & 1U))
            out.add_edge(remap[a], remap[b]);
    return out;
}

Graph Graph::induced(std::span<const std::string> labels) const
{
    return induced(mask_of(labels));
}

std::string Graph::fresh_label(const std::string& stem) const
{
    if (!has_vertex(stem))
        return stem;
    for (std::size_t k = 1;; ++k) {
        auto candidate = stem + std::to_string(k);
        if (!has_vertex(candidate))
            return candidate;
    }
}

bool operator==(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    for (std::size_t i = 0; i < a.order(); ++i)
        if (!b.has_vertex(a.labels_[i]))
            return false;
    for (auto [x, y] : a.edges())
        if (!b.adjacent(b.require_index(a.labels_[x]), b.require_index(a.labels_[y])))
            return false;
    return true;
}

std::size_t distance(const Graph& g, std::size_t u, std::size_t v)
{
    if (u >= g.order() || v >= g.order())
        throw InputError("vertex index out of range");
    VertexMask seen = VertexMask{1} << u;
    VertexMask frontier = seen;
    for (std::size_t d = 0; frontier; ++d) {
        if ((frontier >> v) & 1U)
            return d;
        VertexMask next = 0;
        for (VertexMask rest = frontier; rest; rest &= rest - 1)
            next |= g.neighbours(static_cast<std::size_t>(std::countr_zero(rest)));
        frontier = next & ~seen;
        seen |= next;
    }
    return unreachable;
}

std::size_t distance(const Graph& g, const std::string& u, const std::string& v)
{
    return distance(g, g.require_index(u), g.require_index(v));
}

std::size_t max_distance(const Graph& g, VertexMask from, VertexMask to)
{
    std::size_t worst = 0;
    for (VertexMask a = from; a; a &= a - 1)
        for (VertexMask b = to; b; b &= b - 1) {
            auto d = distance(g, static_cast<std::size_t>(std::countr_zero(a)), static_cast<std::size_t>(std::countr_zero(b)));
            if (d == unreachable)
                return unreachable;
            worst = std::max(worst, d);
        }
    return worst;
}

namespace shapes {

Graph path(std::size_t edges, const std::string& stem)
{
    Graph g;
    for (std::size_t i = 1; i <= edges + 1; ++i)
        g.add_vertex(stem + std::to_string(i));
    for (std::size_t i = 1; i <= edges; ++i)
        g.add_edge(i - 1, i);
    return g;
}

Graph cycle(std::size_t length, const std::string& stem)
{
    if (length < 3)
        throw InputError("a cycle needs at least three vertices");
    Graph g = path(length - 1, stem);
    g.add_edge(length - 1, 0);
    return g;
}

Graph independent(std::size_t count, const std::string& stem)
{
    Graph g;
    for (std::size_t i = 1; i <= count; ++i)
        g.add_vertex(stem + std::to_string(i));
    return g;
}

} // namespace shapes

} // namespace hrush
