#include "hrush/canonical.hpp"

#include "hrush/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace hrush {

namespace {

using Colouring = std::vector<int>;

int distinct_count(const Colouring& c)
{
    auto copy = c;
    std::sort(copy.begin(), copy.end());
    return static_cast<int>(std::unique(copy.begin(), copy.end()) - copy.begin());
}

// Replaces colour values by their rank, keeping the order of values.
Colouring rank(const Colouring& c)
{
    auto values = c;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Colouring out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(values.begin(), values.end(), c[i]) - values.begin());
    return out;
}

// Colour refinement to an equitable partition. Each round splits cells by
// the multiset of neighbouring colours; the ranking is deterministic in the
// invariant data, so isomorphic inputs are refined alike.
Colouring refine(const Graph& g, Colouring c)
{
    c = rank(c);
    int cells = distinct_count(c);
    const std::size_t n = g.order();
    while (true) {
        std::vector<std::pair<std::vector<int>, std::size_t>> keys(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> key{c[v]};
            std::vector<int> around;
            for (VertexMask rest = g.neighbours(v); rest; rest &= rest - 1)
                around.push_back(c[static_cast<std::size_t>(std::countr_zero(rest))]);
            std::sort(around.begin(), around.end());
            key.insert(key.end(), around.begin(), around.end());
            keys[v] = {std::move(key), v};
        }
        std::vector<std::vector<int>> distinct;
        for (auto& k : keys)
            distinct.push_back(k.first);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        Colouring next(n);
        for (std::size_t v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v].first) - distinct.begin());
        int next_cells = static_cast<int>(distinct.size());
        c = std::move(next);
        if (next_cells == cells)
            return c;
        cells = next_cells;
    }
}

bool twins(const Graph& g, std::size_t u, std::size_t v)
{
    VertexMask bu = VertexMask{1} << u;
    VertexMask bv = VertexMask{1} << v;
    return (g.neighbours(u) & ~bv) == (g.neighbours(v) & ~bu);
}

struct Search {
    const Graph& g;
    const std::vector<int>& initial;
    std::optional<CanonicalLabelling> best;

    void leaf(const Colouring& c)
    {
        const std::size_t n = g.order();
        std::vector<std::size_t> order(n);
        for (std::size_t v = 0; v < n; ++v)
            order[static_cast<std::size_t>(c[v])] = v;
        CanonicalForm form;
        form.colours.resize(n);
        form.rows.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            form.colours[k] = initial[order[k]];
            VertexMask row = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (g.adjacent(order[k], order[j]))
                    row |= VertexMask{1} << j;
            form.rows[k] = row;
        }
        if (!best || form < best->form)
            best = CanonicalLabelling{std::move(form), std::move(order)};
    }

    void run(const Colouring& c)
    {
        const std::size_t n = g.order();
        std::vector<int> cell_size(n, 0);
        for (int col : c)
            ++cell_size[static_cast<std::size_t>(col)];
        int target = -1;
        for (std::size_t col = 0; col < n; ++col)
            if (cell_size[col] > 1) {
                target = static_cast<int>(col);
                break;
            }
        if (target < 0) {
            leaf(c);
            return;
        }
        std::vector<std::size_t> tried;
        for (std::size_t v = 0; v < n; ++v) {
            if (c[v] != target)
                continue;
            // Swapping twins of equal colour is an automorphism, so their
            // branches produce identical leaves.
            if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return twins(g, u, v); }))
                continue;
            tried.push_back(v);
            Colouring split(n);
            for (std::size_t u = 0; u < n; ++u)
                split[u] = 2 * c[u] + ((c[u] == target && u != v) ? 1 : 0);
            run(refine(g, split));
        }
    }
};

} // namespace

std::string CanonicalForm::key() const
{
    std::ostringstream out;
    out << colours.size() << ':';
    for (std::size_t i = 0; i < colours.size(); ++i)
        out << (i ? "," : "") << colours[i];
    out << ':';
    for (std::size_t i = 0; i < rows.size(); ++i)
        out << (i ? "," : "") << rows[i];
    return out.str();
}

CanonicalLabelling canonical_labelling(const Graph& g, std::span<const int> colours)
{
    if (colours.size() != g.order())
        throw InputError("colouring size does not match graph order");
    if (g.order() > max_canonical_order)
        throw UnsupportedError("canonical labelling is limited to " + std::to_string(max_canonical_order) + " vertices");
    std::vector<int> initial(colours.begin(), colours.end());
    if (g.empty())
        return {};
    Search search{g, initial, std::nullopt};
    search.run(refine(g, initial));
    return *search.best;
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colours)
{
    return canonical_labelling(g, colours).form;
}

CanonicalForm canonical_form(const Graph& g)
{
    std::vector<int> colours(g.order(), 0);
    return canonical_form(g, colours);
}

CanonicalForm canonical_form_over(const Graph& g, VertexMask base)
{
    std::vector<std::string> base_labels = g.labels_of(base);
    std::sort(base_labels.begin(), base_labels.end());
    std::vector<int> colours(g.order(), 0);
    for (std::size_t i = 0; i < base_labels.size(); ++i)
        colours[g.require_index(base_labels[i])] = static_cast<int>(i) + 1;
    return canonical_form(g, colours);
}

bool are_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    return canonical_form(g) == canonical_form(h);
}

std::uint64_t count_automorphisms_fixing(const Graph& g, VertexMask base)
{
    if (!is_subset(base, g.all()))
        throw InputError("base is not contained in the vertex set");
    const std::size_t n = g.order();
    std::vector<std::size_t> free_vertices;
    for (std::size_t v = 0; v < n; ++v)
        if (!((base >> v) & 1U))
            free_vertices.push_back(v);

    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::vector<bool> used(n, false);
    for (std::size_t v = 0; v < n; ++v)
        if ((base >> v) & 1U)
            used[v] = true;

    std::uint64_t count = 0;
    // Extends the partial map over free_vertices[0..k); a candidate image must
    // agree on adjacency with every vertex already placed, base included.
    auto extend = [&](auto&& self, std::size_t k) -> void {
        if (k == free_vertices.size()) {
            ++count;
            return;
        }
        const std::size_t v = free_vertices[k];
        for (std::size_t w : free_vertices) {
            if (used[w] || popcount(g.neighbours(v)) != popcount(g.neighbours(w)))
                continue;
            bool consistent = true;
            for (std::size_t u = 0; u < n && consistent; ++u) {
                bool placed = ((base >> u) & 1U) || std::find(free_vertices.begin(), free_vertices.begin() + static_cast<std::ptrdiff_t>(k), u) != free_vertices.begin() + static_cast<std::ptrdiff_t>(k);
                if (placed && g.adjacent(v, u) != g.adjacent(w, image[u]))
                    consistent = false;
            }
            if (!consistent)
                continue;
            used[w] = true;
            image[v] = w;
            self(self, k + 1);
            used[w] = false;
            image[v] = v;
        }
    };
    extend(extend, 0);
    return count;
}

} // namespace hrush
