#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hrush {

// Bit i refers to the i-th vertex of the ambient graph, in insertion order.
using VertexMask = std::uint64_t;

inline int popcount(VertexMask mask) { return std::popcount(mask); }

inline bool is_subset(VertexMask small, VertexMask big) { return (small & ~big) == 0; }

inline VertexMask low_bits(std::size_t n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

// Finite simple undirected graph over opaque string labels.
//
// Vertices keep their insertion order, which fixes the meaning of a
// VertexMask. Graphs are limited to 64 vertices; the exhaustive algorithms
// built on top of this impose tighter bounds of their own.
class Graph {
public:
    static constexpr std::size_t max_vertices = 64;

    Graph() = default;

    Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges);

    // Adds a vertex; throws InputError on duplicate labels or overflow.
    std::size_t add_vertex(const std::string& label);

    // Adds an edge between existing vertices. Loops are rejected; repeated
    // edges are ignored.
    void add_edge(const std::string& a, const std::string& b);
    void add_edge(std::size_t a, std::size_t b);

    std::size_t order() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return labels_.empty(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t index) const { return labels_.at(index); }

    std::optional<std::size_t> index_of(const std::string& label) const;
    std::size_t require_index(const std::string& label) const;
    bool has_vertex(const std::string& label) const { return index_.contains(label); }

    bool adjacent(std::size_t a, std::size_t b) const { return (adjacency_[a] >> b) & 1U; }
    VertexMask neighbours(std::size_t v) const { return adjacency_[v]; }

    VertexMask all() const { return low_bits(order()); }

    // Number of edges with both endpoints inside the mask.
    std::size_t edges_within(VertexMask mask) const;

    // Edges as index pairs (a < b), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    // Edges as label pairs, in the order of edges().
    std::vector<std::pair<std::string, std::string>> labelled_edges() const;

    VertexMask mask_of(std::span<const std::string> labels) const;
    VertexMask mask_of(std::initializer_list<std::string> labels) const;
    std::vector<std::string> labels_of(VertexMask mask) const;

    // Induced subgraph; vertices keep their relative order.
    Graph induced(VertexMask mask) const;
    Graph induced(std::span<const std::string> labels) const;

    // Label not yet used in the graph, of the form stem, stem1, stem2, ...
    std::string fresh_label(const std::string& stem) const;

    // Same vertex set and the same edges, independent of insertion order.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<VertexMask> adjacency_;
    std::size_t edge_count_ = 0;
};

inline constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

// Shortest-path length; `unreachable` when u and v are in different components.
std::size_t distance(const Graph& g, std::size_t u, std::size_t v);
std::size_t distance(const Graph& g, const std::string& u, const std::string& v);

// Largest distance between a vertex of `from` and a vertex of `to`; 0 when
// either side is empty.
std::size_t max_distance(const Graph& g, VertexMask from, VertexMask to);

// Small named graphs used throughout the tests and the measure derivations.
namespace shapes {
Graph path(std::size_t edges, const std::string& stem = "v");
Graph cycle(std::size_t length, const std::string& stem = "v");
Graph independent(std::size_t count, const std::string& stem = "v");
} // namespace shapes

} // namespace hrush
