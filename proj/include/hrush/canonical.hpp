#pragma once

#include "hrush/graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hrush {

// Certificate of a (vertex-coloured) graph up to isomorphism.
//
// Two coloured graphs receive equal certificates exactly when a
// colour-preserving isomorphism exists. The order is total and is used to
// sort enumeration output deterministically.
struct CanonicalForm {
    std::vector<int> colours;
    std::vector<VertexMask> rows;

    std::size_t order() const { return colours.size(); }

    // Compact printable key, e.g. "3:0,0,0:2,5,2".
    std::string key() const;

    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;
};

// Graphs above this size are rejected by the canonical labelling search,
// whose worst case is factorial in the order.
inline constexpr std::size_t max_canonical_order = 12;

struct CanonicalLabelling {
    CanonicalForm form;
    // order[k] is the vertex placed at canonical position k.
    std::vector<std::size_t> order;
};

CanonicalLabelling canonical_labelling(const Graph& g, std::span<const int> colours);

CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Graph& g, std::span<const int> colours);

// Canonical form up to isomorphisms fixing every vertex of `base`. Base
// vertices are told apart by label, so graphs sharing the same base labels
// are compared over that base.
CanonicalForm canonical_form_over(const Graph& g, VertexMask base);

bool are_isomorphic(const Graph& g, const Graph& h);

// Number of automorphisms of g fixing every vertex of `base`.
std::uint64_t count_automorphisms_fixing(const Graph& g, VertexMask base);

} // namespace hrush
