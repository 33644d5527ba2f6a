#include "support.hpp"

#include "hrush/error.hpp"
#include "hrush/graph_io.hpp"
#include "hrush/itd.hpp"

#include <doctest.h>

#include <chrono>

using namespace hrush;
using namespace hrush::testing;

namespace {

const GoodFunction cfg = GoodFunction::standard();

// The hexagon a1 b12 a2 b23 a3 b13 with D_i = {a_i}, D_ij = a_i b_ij a_j.
ItdDiagram hexagon_itd()
{
    ItdDiagram d;
    d.ambient = make_graph("a1-b12 b12-a2 a2-b23 b23-a3 a3-b13 b13-a1");
    const auto& g = d.ambient;
    d.base = 0;
    d.singles = {g.mask_of({"a1"}), g.mask_of({"a2"}), g.mask_of({"a3"})};
    d.pairs = {g.mask_of({"a1", "b12", "a2"}), g.mask_of({"a1", "b13", "a3"}), g.mask_of({"a2", "b23", "a3"})};
    return d;
}

// Brute-force proper-ITD test for the standard f using only the oracles.
bool naive_proper_itd(const ItdDiagram& diag, const Rational& d12_max)
{
    const Graph& d = diag.ambient;
    auto part_ok = [&](VertexMask m) { return naive_in_standard_class(d.induced(m)); };
    if (!part_ok(diag.base))
        return false;
    for (int i = 1; i <= 3; ++i)
        if (!part_ok(diag.single(i)) || diag.single(i) == diag.base)
            return false;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            VertexMask dij = diag.pair(i, j);
            if (!part_ok(dij) || naive_delta(d, dij, 2) > d12_max)
                return false;
            Graph part = d.induced(dij);
            VertexMask li = part.mask_of(d.labels_of(diag.single(i)));
            VertexMask lj = part.mask_of(d.labels_of(diag.single(j)));
            if (!naive_d_closed(part, li, 2) || !naive_d_closed(part, lj, 2))
                return false;
            VertexMask l0 = li & lj;
            for (auto [a, b] : part.edges()) {
                VertexMask e = (VertexMask{1} << a) | (VertexMask{1} << b);
                if ((e & (li & ~l0)) && (e & (lj & ~l0)))
                    return false;
            }
            auto inner = naive_minimal_closed_supersets(part, li | lj, 2);
            if (inner.size() != 1 || naive_delta(part, inner[0], 2) != naive_delta(part, li | lj, 2))
                return false;
            VertexMask u = diag.single(i) | diag.single(j);
            auto outer = naive_minimal_closed_supersets(d, u, 2);
            if (outer.size() != 1 || outer[0] != dij || u == dij)
                return false;
        }
    for (auto [a, b] : d.edges()) {
        VertexMask e = (VertexMask{1} << a) | (VertexMask{1} << b);
        if (!is_subset(e, diag.pairs[0]) && !is_subset(e, diag.pairs[1]) && !is_subset(e, diag.pairs[2]))
            return false;
    }
    return true;
}

// Every proper ITD (standard f) whose pair parts have at most `pair_order`
// vertices: all region sizes, all edge sets inside the pair parts.
std::map<CanonicalForm, ItdDiagram> direct_itds(std::size_t pair_order, const Rational& d12_max)
{
    std::map<CanonicalForm, ItdDiagram> found;
    const int n = static_cast<int>(pair_order);
    for (int n0 = 0; n0 <= n; ++n0)
        for (int n1 = 1; n1 <= n; ++n1)
            for (int n2 = 1; n2 <= n; ++n2)
                for (int n3 = 1; n3 <= n; ++n3) {
                    std::array<int, 3> ns{n1, n2, n3};
                    auto room = [&](int i, int j) { return n - n0 - ns[i - 1] - ns[j - 1]; };
                    if (room(1, 2) < 1 || room(1, 3) < 1 || room(2, 3) < 1)
                        continue;
                    for (int m12 = 1; m12 <= room(1, 2); ++m12)
                        for (int m13 = 1; m13 <= room(1, 3); ++m13)
                            for (int m23 = 1; m23 <= room(2, 3); ++m23) {
                                ItdDiagram diag;
                                Graph& g = diag.ambient;
                                auto add = [&](const std::string& p, int count) {
                                    VertexMask m = 0;
                                    for (int k = 0; k < count; ++k)
                                        m |= VertexMask{1} << g.add_vertex(p + std::to_string(k));
                                    return m;
                                };
                                diag.base = add("o", n0);
                                for (std::size_t i = 0; i < 3; ++i)
                                    diag.singles[i] = diag.base | add("s" + std::to_string(i + 1) + "_", ns[i]);
                                std::array<int, 3> ms{m12, m13, m23};
                                const std::array<std::pair<int, int>, 3> idx{{{1, 2}, {1, 3}, {2, 3}}};
                                for (std::size_t s = 0; s < 3; ++s)
                                    diag.pairs[s] = diag.single(idx[s].first) | diag.single(idx[s].second) | add("p" + std::to_string(s) + "_", ms[s]);
                                std::vector<std::pair<std::size_t, std::size_t>> slots;
                                for (std::size_t a = 0; a < g.order(); ++a)
                                    for (std::size_t b = a + 1; b < g.order(); ++b) {
                                        VertexMask e = (VertexMask{1} << a) | (VertexMask{1} << b);
                                        if (is_subset(e, diag.pairs[0]) || is_subset(e, diag.pairs[1]) || is_subset(e, diag.pairs[2]))
                                            slots.emplace_back(a, b);
                                    }
                                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
                                    ItdDiagram cand = diag;
                                    for (std::size_t k = 0; k < slots.size(); ++k)
                                        if ((bits >> k) & 1U)
                                            cand.ambient.add_edge(slots[k].first, slots[k].second);
                                    bool pairs_ok = true;
                                    for (auto p : cand.pairs)
                                        pairs_ok = pairs_ok && naive_delta(cand.ambient, p, 2) <= d12_max && in_class(cand.ambient.induced(p), cfg);
                                    if (pairs_ok && naive_proper_itd(cand, d12_max))
                                        found.emplace(itd_canonical_form(cand), std::move(cand));
                                }
                            }
                }
    return found;
}

} // namespace

TEST_CASE("the hexagon is a proper ITD")
{
    auto d = hexagon_itd();
    auto ax = validate_itd(d, cfg);
    CHECK(ax.ok());
    CHECK(proper_itd_checks(d, cfg).ok());
    CHECK(validate_proper_itd(d, cfg));
    auto p = itd_predims(d, cfg);
    CHECK(p.base == 0);
    CHECK(p.singles[0] == 2);
    CHECK(p.pairs[2] == 4);
    CHECK(p.total == 6);
    CHECK(p.top_pair() == 4);
    CHECK(itd_size_bound(d, cfg) == 6);
}

TEST_CASE("ITD axioms fail one at a time")
{
    SUBCASE("pair part missing its middle vertex loses edge coverage")
    {
        auto d = hexagon_itd();
        d.pairs[0] = d.ambient.mask_of({"a1", "a2"});
        auto ax = validate_itd(d, cfg);
        CHECK_FALSE(ax.edges_covered);
        CHECK(ax.parts_in_class);
        CHECK(ax.singles_meet_in_base);
        CHECK(ax.pairs_meet_in_singles);
        CHECK_FALSE(validate_proper_itd(d, cfg));
    }
    SUBCASE("overlapping singles")
    {
        auto d = hexagon_itd();
        d.singles[1] = d.ambient.mask_of({"a1", "a2"});
        CHECK_FALSE(validate_itd(d, cfg).singles_meet_in_base);
    }
    SUBCASE("pair parts meeting outside a single")
    {
        auto d = hexagon_itd();
        d.pairs[0] |= d.ambient.mask_of({"b13"});
        CHECK_FALSE(validate_itd(d, cfg).pairs_meet_in_singles);
    }
    SUBCASE("parts outside the ambient graph")
    {
        auto d = hexagon_itd();
        d.base = VertexMask{1} << 20;
        CHECK_THROWS_AS(validate_itd(d, cfg), PreconditionError);
    }
    SUBCASE("pair part enlarged beyond the closure")
    {
        auto d = hexagon_itd();
        // Enlarge D12 by b13 and b23; D12 is then no longer cl(D1 u D2).
        auto big = make_graph("a1-b12 b12-a2 a2-b23 b23-a3 a3-b13 b13-a1 c");
        d.ambient = big;
        const auto& g = d.ambient;
        d.singles = {g.mask_of({"a1"}), g.mask_of({"a2"}), g.mask_of({"a3"})};
        d.pairs = {g.mask_of({"a1", "b12", "a2", "c"}), g.mask_of({"a1", "b13", "a3"}), g.mask_of({"a2", "b23", "a3"})};
        CHECK(validate_itd(d, cfg).ok());
        auto pc = proper_itd_checks(d, cfg);
        CHECK(pc.base_strictly_inside);
        CHECK(pc.pairs_strictly_larger);
        CHECK_FALSE(pc.pairs_are_closures);
    }
    SUBCASE("a dependent pair")
    {
        // D1 = a, D2 = b joined by an edge: not free over the empty base.
        ItdDiagram d;
        d.ambient = make_graph("a-b c");
        const auto& g = d.ambient;
        d.singles = {g.mask_of({"a"}), g.mask_of({"b"}), g.mask_of({"c"})};
        d.pairs = {g.mask_of({"a", "b"}), g.mask_of({"a", "c"}), g.mask_of({"b", "c"})};
        auto ax = validate_itd(d, cfg);
        CHECK_FALSE(ax.singles_independent);
        CHECK(ax.edges_covered);
    }
}

TEST_CASE("free amalgams recast as degenerate ITDs")
{
    // B u_A C with D1 = B, D2 = C, D3 = D0 = A.
    const std::vector<std::tuple<std::string, std::vector<std::string>, std::vector<std::string>>> cases{
        {"v1-v2 v2-v3", {"v1", "v2"}, {"v2", "v3"}},
        {"v1-v2 v2-v3 v3-v4", {"v1", "v2", "v3"}, {"v2", "v3", "v4"}},
        {"v1-v2 v2-v3 v4", {"v1", "v2", "v4"}, {"v2", "v3", "v4"}},
        {"v1 v2", {"v1"}, {"v2"}},
    };
    for (const auto& [shape, b, c] : cases) {
        CAPTURE(shape);
        ItdDiagram d;
        d.ambient = make_graph(shape);
        const auto& g = d.ambient;
        VertexMask mb = g.mask_of(b), mc = g.mask_of(c);
        d.base = mb & mc;
        d.singles = {mb, mc, d.base};
        d.pairs = {mb | mc, mb, mc};
        CHECK(validate_itd(d, cfg).ok());
        CHECK_FALSE(proper_itd_checks(d, cfg).base_strictly_inside);
        CHECK_FALSE(validate_proper_itd(d, cfg));
    }
}

TEST_CASE("ITD consequences and closed sub-diagrams")
{
    auto check_diagram = [](const ItdDiagram& d) {
        const Graph& g = d.ambient;
        for (std::size_t s = 0; s < 3; ++s) {
            CHECK(naive_d_closed(g.induced(d.pairs[s]), g.induced(d.pairs[s]).mask_of(g.labels_of(d.base)), 2));
            CHECK(naive_d_closed(g, d.pairs[s], 2));
        }
        CHECK(naive_self_sufficient(g, d.pair(1, 2) | d.pair(2, 3), 2));
        CHECK(naive_self_sufficient(g, d.pair(1, 3) | d.pair(2, 3), 2));
        CHECK(naive_self_sufficient(g, d.pair(1, 2) | d.pair(1, 3), 2));
        // Every d-closed C <= D, cut down part by part, is again an ITD.
        for (VertexMask c = 0; c < (VertexMask{1} << g.order()); ++c) {
            if (!is_d_closed(g, c, cfg))
                continue;
            Graph sub = g.induced(c);
            ItdDiagram cut;
            cut.ambient = sub;
            auto restrict_to = [&](VertexMask m) { return sub.mask_of(g.labels_of(m & c)); };
            cut.base = restrict_to(d.base);
            for (std::size_t i = 0; i < 3; ++i) {
                cut.singles[i] = restrict_to(d.singles[i]);
                cut.pairs[i] = restrict_to(d.pairs[i]);
            }
            CHECK(validate_itd(cut, cfg).ok());
        }
    };
    check_diagram(hexagon_itd());
    for (const auto& d : enumerate_proper_itds(cfg, 5))
        check_diagram(d);
}

TEST_CASE("proper ITD enumeration")
{
    CHECK(enumerate_proper_itds(cfg, 3).empty());
    CHECK(enumerate_proper_itds(cfg, 2).empty());

    auto four = enumerate_proper_itds(cfg, 4);
    REQUIRE(four.size() == 1);
    CHECK(are_isomorphic(four[0].ambient, shapes::cycle(6)));
    CHECK(itd_canonical_form(four[0]) == itd_canonical_form(hexagon_itd()));

    auto five = enumerate_proper_itds(cfg, 5);
    CHECK(five.size() >= 1);
    for (const auto& d : five) {
        CHECK(validate_proper_itd(d, cfg));
        auto p = itd_predims(d, cfg);
        CHECK(p.top_pair() <= 5);
        CHECK(compare_f(cfg, p.total, static_cast<std::int64_t>(d.ambient.order())) >= 0);
        auto beta = itd_size_bound(d, cfg);
        REQUIRE(beta);
        CHECK(static_cast<std::int64_t>(d.ambient.order()) <= *beta);
        CHECK(p.total > p.top_pair());
    }
    CHECK_THROWS_AS(enumerate_proper_itds(cfg, Rational(11, 2)), UnsupportedError);
}

TEST_CASE("enumeration agrees with direct search over all edge sets")
{
    for (int top : {3, 4, 5}) {
        CAPTURE(top);
        auto order = static_cast<std::size_t>(max_size_at_predim(cfg, top));
        auto direct = direct_itds(order, top);
        auto built = enumerate_proper_itds(cfg, top);
        REQUIRE(built.size() == direct.size());
        for (const auto& d : built)
            CHECK(direct.contains(itd_canonical_form(d)));
    }
}

TEST_CASE("part-marked canonical form ignores index order")
{
    auto d = hexagon_itd();
    auto swapped = d;
    std::swap(swapped.singles[0], swapped.singles[1]);
    swapped.pairs = {d.pairs[0], d.pairs[2], d.pairs[1]};
    CHECK(validate_proper_itd(swapped, cfg));
    CHECK(itd_canonical_form(swapped) == itd_canonical_form(d));

    // Marking a different D0 changes the class.
    auto other = d;
    other.base = d.ambient.mask_of({"a1"});
    CHECK_FALSE(itd_canonical_form(other) == itd_canonical_form(d));
}

TEST_CASE("growth condition")
{
    auto log = sitd_growth_check(cfg, 1, 6, 1000);
    CHECK(log.pass);
    CHECK(log.analytic);
    // Below the junction the bound fails at once: f(3) = 4 > f(1) + 1.
    auto small = sitd_growth_check(cfg, 1, 1, 5);
    CHECK_FALSE(small.pass);
    CHECK(small.failing_t == 1);
    CHECK(sitd_growth_check(cfg, 3, 1, 5).pass);
    CHECK_FALSE(sitd_growth_check(cfg, 3, 1, 5).analytic);
    CHECK_FALSE(sitd_growth_check(cfg, 0, 6, 10).pass);
    CHECK_THROWS_AS(sitd_growth_check(cfg, 1, 0, 3), InputError);

    GoodFunction table = cfg;
    table.tail = TailKind::RationalTable;
    table.table = {{18, 7}, {54, Rational(17, 2)}, {162, 9}};
    table.validate();
    auto bad = sitd_growth_check(table, 1, 6, 54);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.analytic);
    REQUIRE(bad.failing_t);
    // f(3t) exceeds f(t) + 1 first where the steep segment starts to count.
    auto t = *bad.failing_t;
    CHECK(compare_f(table, *exact_value(table, t) + 1, 3 * t) < 0);
    for (std::int64_t s = 6; s < t; ++s)
        CHECK(compare_f(table, *exact_value(table, s) + 1, 3 * s) >= 0);
}

TEST_CASE("ITD closure report")
{
    auto four = check_itd_closure(cfg, 4);
    CHECK(four.pass);
    REQUIRE(four.diagrams.size() == 1);
    CHECK(four.diagrams[0].above_f);
    CHECK(four.growth.pass);

    auto five = check_itd_closure(cfg, 5);
    CHECK(five.pass);

    GoodFunction raised = cfg;
    raised.breakpoints.back().value = Rational(13, 2);
    raised.tail = TailKind::RationalTable;
    raised.table = {{18, Rational(15, 2)}, {54, Rational(17, 2)}};
    raised.validate();
    auto fail = check_itd_closure(raised, 4);
    CHECK_FALSE(fail.pass);
    REQUIRE(fail.diagrams.size() == 1);
    CHECK_FALSE(fail.diagrams[0].above_f);
    CHECK(are_isomorphic(fail.diagrams[0].diagram.ambient, shapes::cycle(6)));
}

TEST_CASE("ITD JSON")
{
    auto d = hexagon_itd();
    auto back = itd_from_json(itd_to_json(d));
    CHECK(back.ambient == d.ambient);
    CHECK(back.pairs == d.pairs);
    CHECK(itd_report_to_json(check_itd_closure(cfg, 4))["diagrams"].size() == 1);
    CHECK_THROWS_AS(itd_from_json(nlohmann::json::object()), ParseError);
}
