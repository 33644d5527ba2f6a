#pragma once

// Test helpers and brute-force oracles. The oracles deliberately avoid the
// library's scans: they walk every vertex subset or every permutation with
// plain loops and exact rationals.

#include "hrush/canonical.hpp"
#include "hrush/good_function.hpp"
#include "hrush/graph.hpp"
#include "hrush/predim.hpp"

#include <algorithm>
#include <map>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hrush::testing {

// "a-b b-c d" builds vertices a, b, c, d with edges ab and bc. Vertices are
// added in order of first mention.
inline Graph make_graph(const std::string& spec)
{
    Graph g;
    std::istringstream in(spec);
    for (std::string token; in >> token;) {
        auto dash = token.find('-');
        if (dash == std::string::npos) {
            if (!g.has_vertex(token))
                g.add_vertex(token);
            continue;
        }
        auto a = token.substr(0, dash);
        auto b = token.substr(dash + 1);
        if (!g.has_vertex(a))
            g.add_vertex(a);
        if (!g.has_vertex(b))
            g.add_vertex(b);
        g.add_edge(a, b);
    }
    return g;
}

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p)
{
    Graph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex("r" + std::to_string(i));
    std::bernoulli_distribution coin(p);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng))
                g.add_edge(a, b);
    return g;
}

// Same graph with labels shuffled and inserted in a shuffled order.
inline Graph relabel(const Graph& g, std::mt19937& rng)
{
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h;
    std::vector<std::size_t> where(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        where[perm[i]] = h.add_vertex("x" + std::to_string(perm[i] * 7 + 3));
    for (auto [a, b] : g.edges())
        h.add_edge(where[b], where[a]);
    return h;
}

// Every labelled graph on n vertices, by edge subset.
inline std::vector<Graph> all_labelled_graphs(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            pairs.emplace_back(a, b);
    std::vector<Graph> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
        Graph g;
        for (std::size_t i = 0; i < n; ++i)
            g.add_vertex("v" + std::to_string(i + 1));
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((bits >> k) & 1U)
                g.add_edge(pairs[k].first, pairs[k].second);
        out.push_back(std::move(g));
    }
    return out;
}

// --- oracles ---------------------------------------------------------------

inline Rational naive_delta(const Graph& g, VertexMask s, const Rational& alpha)
{
    std::int64_t edges = 0;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = a + 1; b < g.order(); ++b)
            if (((s >> a) & 1U) && ((s >> b) & 1U) && g.adjacent(a, b))
                ++edges;
    return alpha * popcount(s) - edges;
}

// f for the standard configuration, in long double: interpolation through
// (0,0) (1,2) (4,5) (6,6), then 6 + log_3(n / 6).
inline long double standard_f_approx(std::size_t n)
{
    if (n <= 1)
        return 2.0L * static_cast<long double>(n);
    if (n <= 4)
        return 2.0L + static_cast<long double>(n - 1);
    if (n <= 6)
        return 5.0L + static_cast<long double>(n - 4) / 2.0L;
    return 6.0L + std::log(static_cast<long double>(n) / 6.0L) / std::log(3.0L);
}

inline bool naive_in_standard_class(const Graph& g)
{
    for (VertexMask s = 1; s < (VertexMask{1} << g.order()); ++s) {
        auto d = naive_delta(g, s, 2);
        long double dv = static_cast<long double>(numerator(d)) / static_cast<long double>(denominator(d));
        if (dv < standard_f_approx(static_cast<std::size_t>(popcount(s))) - 1e-12L)
            return false;
    }
    return true;
}

inline bool naive_d_closed(const Graph& g, VertexMask a, const Rational& alpha)
{
    for (VertexMask b = 0; b < (VertexMask{1} << g.order()); ++b)
        if (is_subset(a, b) && a != b && naive_delta(g, b, alpha) <= naive_delta(g, a, alpha))
            return false;
    return true;
}

inline bool naive_self_sufficient(const Graph& g, VertexMask a, const Rational& alpha)
{
    for (VertexMask b = 0; b < (VertexMask{1} << g.order()); ++b)
        if (is_subset(a, b) && naive_delta(g, b, alpha) < naive_delta(g, a, alpha))
            return false;
    return true;
}

// Scans supersets by increasing size and returns every d-closed one of the
// least size found (the closure is unique iff this has one element).
inline std::vector<VertexMask> naive_minimal_closed_supersets(const Graph& g, VertexMask a, const Rational& alpha)
{
    for (int size = popcount(a); size <= static_cast<int>(g.order()); ++size) {
        std::vector<VertexMask> found;
        for (VertexMask b = 0; b < (VertexMask{1} << g.order()); ++b)
            if (popcount(b) == size && is_subset(a, b) && naive_d_closed(g, b, alpha))
                found.push_back(b);
        if (!found.empty())
            return found;
    }
    return {};
}

// Automorphisms fixing `base`, by trying all |V|! permutations.
inline std::uint64_t naive_automorphisms(const Graph& g, VertexMask base)
{
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t v = 0; v < g.order() && ok; ++v)
            if (((base >> v) & 1U) && perm[v] != v)
                ok = false;
        for (std::size_t a = 0; a < g.order() && ok; ++a)
            for (std::size_t b = a + 1; b < g.order() && ok; ++b)
                if (g.adjacent(a, b) != g.adjacent(perm[a], perm[b]))
                    ok = false;
        count += ok ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Isomorphism by trying every bijection.
inline bool naive_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t a = 0; a < g.order() && ok; ++a)
            for (std::size_t b = a + 1; b < g.order() && ok; ++b)
                if (g.adjacent(a, b) != h.adjacent(perm[a], perm[b]))
                    ok = false;
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace hrush::testing

namespace hrush::testing {

// One representative per isomorphism class on exactly n vertices, built by
// vertex extension and deduplicated with the library's canonical form.
inline std::vector<Graph> graphs_up_to_iso(std::size_t n)
{
    std::vector<Graph> level{Graph{}};
    for (std::size_t k = 1; k <= n; ++k) {
        std::map<CanonicalForm, Graph> next;
        for (const auto& g : level)
            for (VertexMask around = 0; around < (VertexMask{1} << g.order()); ++around) {
                Graph h = g;
                auto v = h.add_vertex("v" + std::to_string(k));
                for (std::size_t u = 0; u < g.order(); ++u)
                    if ((around >> u) & 1U)
                        h.add_edge(u, v);
                next.emplace(canonical_form(h), std::move(h));
            }
        level.clear();
        for (auto& [form, g] : next)
            level.push_back(std::move(g));
    }
    return level;
}

} // namespace hrush::testing
