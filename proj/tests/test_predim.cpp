#include "support.hpp"

#include "hrush/error.hpp"

#include <doctest.h>

#include <compare>

using namespace hrush;
using namespace hrush::testing;

namespace {

const GoodFunction cfg = GoodFunction::standard();

GoodFunction slow_table()
{
    GoodFunction c = GoodFunction::standard();
    c.tail = TailKind::SlowTable;
    c.table = {{18, 7}, {54, 8}, {162, 9}, {486, 10}};
    return c;
}

} // namespace

TEST_CASE("predimension")
{
    CHECK(predimension(shapes::independent(1), cfg) == 2);
    CHECK(predimension(shapes::path(1), cfg) == 3);
    CHECK(predimension(shapes::cycle(6), cfg) == 6);
    GoodFunction third = cfg;
    third.alpha = Rational(5, 3);
    CHECK(predimension(shapes::path(2), third) == Rational(3));
    CHECK(predimension(shapes::path(1), third) == Rational(7, 3));
}

TEST_CASE("compare_f is exact on segments and on the logarithmic tail")
{
    CHECK(compare_f(cfg, Rational(11, 2), 5) == std::strong_ordering::equal);
    CHECK(compare_f(cfg, 7, 18) == std::strong_ordering::equal);
    CHECK(compare_f(cfg, 7, 19) == std::strong_ordering::less);
    CHECK(compare_f(cfg, 7, 17) == std::strong_ordering::greater);
    CHECK(compare_f(cfg, 2, 1) == std::strong_ordering::equal);
    CHECK(compare_f(cfg, 4, 3) == std::strong_ordering::equal);
    CHECK(compare_f(cfg, 3, 2) == std::strong_ordering::equal);
    CHECK(compare_f(cfg, 6, 7) == std::strong_ordering::less);
    // 6 + 1/2 >= f(n) iff 3^(1/2) * 6 >= n, i.e. n <= 10.39
    CHECK(compare_f(cfg, Rational(13, 2), 10) == std::strong_ordering::greater);
    CHECK(compare_f(cfg, Rational(13, 2), 11) == std::strong_ordering::less);
    CHECK_THROWS_AS(compare_f(cfg, 1, 0), InputError);
}

TEST_CASE("exact values of f")
{
    CHECK(exact_value(cfg, 3) == Rational(4));
    CHECK(exact_value(cfg, 5) == Rational(11, 2));
    CHECK(exact_value(cfg, 18) == Rational(7));
    CHECK(exact_value(cfg, 162) == Rational(9));
    CHECK_FALSE(exact_value(cfg, 7).has_value());
}

TEST_CASE("max_size_at_predim")
{
    CHECK(max_size_at_predim(cfg, 4) == 3);
    CHECK(max_size_at_predim(cfg, 5) == 4);
    CHECK(max_size_at_predim(cfg, 6) == 6);
    CHECK(max_size_at_predim(cfg, 7) == 18);
    CHECK(max_size_at_predim(cfg, 10) == 6 * 81);
    CHECK(max_size_at_predim(cfg, 2) == 1);
    CHECK_THROWS_AS(max_size_at_predim(cfg, Rational(3, 2)), DomainError);
}

TEST_CASE("table tails")
{
    auto slow = slow_table();
    CHECK_NOTHROW(slow.validate());
    CHECK(exact_value(slow, 12) == Rational(13, 2));
    CHECK(max_size_at_predim(slow, 7) == 18);
    CHECK_THROWS_AS(compare_f(slow, 7, 487), DomainError);
    CHECK_THROWS_AS(max_size_at_predim(slow, 11), DomainError);

    auto broken = slow;
    broken.table = {{18, 7}, {54, Rational(17, 2)}};
    CHECK_THROWS_AS(broken.validate(), InputError);
    broken.tail = TailKind::RationalTable;
    CHECK_NOTHROW(broken.validate());

    auto decreasing = slow;
    decreasing.table = {{18, 7}, {20, Rational(13, 2)}};
    CHECK_THROWS_AS(decreasing.validate(), InputError);

    auto jump = slow;
    jump.table = {{6, 7}, {18, 8}};
    CHECK_THROWS_AS(jump.validate(), InputError);
}

TEST_CASE("good function JSON")
{
    auto parsed = good_function_from_json(nlohmann::json::parse(R"({"alpha": "2", "breakpoints": [[1,"2"],[4,"5"],[6,"6"]], "tail": {"kind":"log3"}})"));
    CHECK(parsed.breakpoints == cfg.breakpoints);
    CHECK(parsed.tail == TailKind::LogBase3);
    auto again = good_function_from_json(good_function_to_json(slow_table()));
    CHECK(again.table == slow_table().table);
    CHECK_THROWS_AS(good_function_from_json(nlohmann::json::parse(R"({"tail": {"kind":"cubic"}})")), InputError);
}

TEST_CASE("class membership")
{
    CHECK_FALSE(in_class(shapes::cycle(3), cfg));
    CHECK_FALSE(in_class(shapes::cycle(4), cfg));
    CHECK_FALSE(in_class(shapes::cycle(5), cfg));
    CHECK(in_class(shapes::cycle(6), cfg));
    CHECK(in_class(shapes::cycle(7), cfg));
    CHECK(in_class(Graph{}, cfg));
    CHECK(in_class(shapes::path(3), cfg));
    auto witness = smallest_violation(make_graph("a-b b-c c-a c-d d-e"), cfg);
    REQUIRE(witness.has_value());
    CHECK(popcount(*witness) == 3);
}

TEST_CASE("class membership agrees with the subset oracle")
{
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& g : graphs_up_to_iso(n))
            CHECK(in_class(g, cfg) == naive_in_standard_class(g));
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(rng, 8, 0.2);
        CHECK(in_class(g, cfg) == naive_in_standard_class(g));
    }
}

TEST_CASE("d-closed and self-sufficient subsets of the six-cycle")
{
    auto c6 = shapes::cycle(6);
    CHECK(is_d_closed(c6, c6.mask_of({"v1", "v4"}), cfg));
    CHECK_FALSE(is_d_closed(c6, c6.mask_of({"v1", "v3"}), cfg));
    CHECK(is_d_closed(c6, c6.all(), cfg));
    CHECK(is_self_sufficient(c6, c6.mask_of({"v1", "v3"}), cfg));

    // A single vertex is self-sufficient both in a triangle and in a 4-cycle.
    auto tri = shapes::cycle(3);
    auto c4 = shapes::cycle(4);
    CHECK(naive_self_sufficient(tri, tri.mask_of({"v1"}), 2));
    CHECK(is_self_sufficient(tri, tri.mask_of({"v1"}), cfg));
    CHECK(naive_self_sufficient(c4, c4.mask_of({"v1"}), 2));
    CHECK(is_self_sufficient(c4, c4.mask_of({"v1"}), cfg));
    // Two opposite vertices of a 4-cycle are not: the whole cycle has delta 4 = delta.
    CHECK_FALSE(is_d_closed(c4, c4.mask_of({"v1", "v3"}), cfg));
    CHECK(is_self_sufficient(c4, c4.mask_of({"v1", "v3"}), cfg));
    // In a triangle an edge plus the third vertex drops delta from 3 to 3: equal.
    CHECK_FALSE(is_d_closed(tri, tri.mask_of({"v1", "v2"}), cfg));
}

TEST_CASE("closure and dimension")
{
    auto c6 = shapes::cycle(6);
    CHECK(closure(c6, c6.mask_of({"v1", "v3"}), cfg) == c6.mask_of({"v1", "v2", "v3"}));
    CHECK(closure(c6, c6.mask_of({"v1", "v4"}), cfg) == c6.mask_of({"v1", "v4"}));
    CHECK(closure(c6, c6.all(), cfg) == c6.all());
    CHECK(dimension(c6, c6.mask_of({"v1", "v3"}), cfg) == 4);
    CHECK(dimension(c6, c6.mask_of({"v1"}), cfg) == 2);
    CHECK(dimension(c6, 0, cfg) == 0);
    CHECK(closure(c6, 0, cfg) == 0);
}

TEST_CASE("closure matches the size-ordered superset scan")
{
    std::mt19937 rng(13);
    auto check_graph = [&](const Graph& g) {
        for (VertexMask a = 0; a <= g.all(); ++a) {
            auto minimal = naive_minimal_closed_supersets(g, a, 2);
            REQUIRE(minimal.size() == 1);
            auto c = closure(g, a, cfg);
            CHECK(c == minimal.front());
            CHECK(closure(g, c, cfg) == c);
            CHECK((c == a) == is_d_closed(g, a, cfg));
            CHECK(is_d_closed(g, a, cfg) == naive_d_closed(g, a, 2));
            CHECK(is_self_sufficient(g, a, cfg) == naive_self_sufficient(g, a, 2));
        }
    };
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& g : graphs_up_to_iso(n))
            check_graph(g);
    for (int trial = 0; trial < 40; ++trial)
        check_graph(random_graph(rng, 7, 0.3));
}

TEST_CASE("closure in a member of K_f stays within f^{-1}(alpha |A|)")
{
    for (const auto& g : class_members(cfg, 7)) {
        for (VertexMask a = 1; a <= g.all(); ++a) {
            auto c = closure(g, a, cfg);
            CHECK(popcount(c) <= max_size_at_predim(cfg, cfg.alpha * popcount(a)));
        }
    }
}

TEST_CASE("class members")
{
    auto members = class_members(cfg, 6);
    std::size_t six_vertex_with_six_edges = 0;
    for (const auto& g : members) {
        CHECK(in_class(g, cfg));
        if (g.order() == 6 && g.edge_count() == 6)
            ++six_vertex_with_six_edges;
    }
    // Only the hexagon reaches delta 6 on six vertices.
    CHECK(six_vertex_with_six_edges == 1);
    CHECK(min_size_at_predim(cfg, 2) == std::size_t{1});
    CHECK(min_size_at_predim(cfg, 3) == std::size_t{2});
    CHECK(min_size_at_predim(cfg, 4) == std::size_t{2});
    CHECK(min_size_at_predim(cfg, 5) == std::size_t{3});
    CHECK(min_size_at_predim(cfg, 6) == std::size_t{3});
    CHECK_FALSE(min_size_at_predim(cfg, 1).has_value());
}
