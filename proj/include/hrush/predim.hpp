#pragma once

#include "hrush/good_function.hpp"
#include "hrush/graph.hpp"

#include <optional>
#include <vector>

namespace hrush {

// Exhaustive subset scans are refused above this order.
inline constexpr std::size_t max_scan_order = 20;

// delta(A) = alpha |A| - |E(A)|.
Rational predimension(const Graph& g, const GoodFunction& cfg);
Rational predimension(const Graph& g, VertexMask subset, const GoodFunction& cfg);

// Integer form of delta used in the inner loops: with alpha = p/q this is
// q * delta = p |A| - q |E(A)|. Comparisons between subsets of one graph
// are exact on the scaled values.
class ScaledPredim {
public:
    explicit ScaledPredim(const Rational& alpha);

    std::int64_t operator()(std::size_t vertices, std::size_t edges) const
    {
        return p_ * static_cast<std::int64_t>(vertices) - q_ * static_cast<std::int64_t>(edges);
    }
    std::int64_t of(const Graph& g, VertexMask subset) const
    {
        return (*this)(static_cast<std::size_t>(popcount(subset)), g.edges_within(subset));
    }
    Rational unscale(std::int64_t scaled) const { return Rational(scaled, q_); }

private:
    std::int64_t p_;
    std::int64_t q_;
};

// Membership in K_f: every nonempty induced subgraph A' has delta(A') >= f(|A'|).
bool in_class(const Graph& g, const GoodFunction& cfg);

// Smallest nonempty vertex set violating the class condition, if any.
std::optional<VertexMask> smallest_violation(const Graph& g, const GoodFunction& cfg);

// A <= D: every strict superset of A inside D has strictly larger delta.
bool is_d_closed(const Graph& d, VertexMask a, const GoodFunction& cfg);

// A <=* D: no superset of A inside D has smaller delta.
bool is_self_sufficient(const Graph& d, VertexMask a, const GoodFunction& cfg);

// Smallest d-closed subset of D containing A.
VertexMask closure(const Graph& d, VertexMask a, const GoodFunction& cfg);

// delta(closure(A)).
Rational dimension(const Graph& d, VertexMask a, const GoodFunction& cfg);

// Isomorphism classes of K_f members with at most max_order vertices,
// ordered by (order, canonical form). Vertices are labelled v1..vn.
std::vector<Graph> class_members(const GoodFunction& cfg, std::size_t max_order);

// Least order of a K_f member with predimension exactly d, by exhaustive
// search up to max_size_at_predim(d); nullopt when no member attains d.
std::optional<std::size_t> min_size_at_predim(const GoodFunction& cfg, const Rational& d);

} // namespace hrush
