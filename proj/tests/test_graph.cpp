#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

#include "miskit/graph.hpp"

using namespace miskit;

TEST_CASE("vertex set basics") {
    VertexSet s(10, {3, 7});
    CHECK(s.contains(3));
    CHECK(s.contains(7));
    CHECK_FALSE(s.contains(0));
    CHECK(s.count() == 2);
    CHECK(s.first() == 3);
    CHECK(s.next(3) == 7);
    CHECK(s.next(7) == -1);
    CHECK(s.members() == std::vector<int>{3, 7});

    s.remove(3);
    CHECK_FALSE(s.contains(3));
    CHECK(s.count() == 1);

    CHECK(VertexSet(0).empty());
    CHECK(VertexSet::full(5).count() == 5);
    CHECK(VertexSet(70, {0, 69}).complement().count() == 68);

    CHECK_THROWS_AS(s.add(10), std::out_of_range);
    CHECK_THROWS_AS((VertexSet(3) & VertexSet(4)), std::invalid_argument);
}

TEST_CASE("vertex set lexicographic order follows index sequences") {
    auto set = [](std::initializer_list<int> m) { return VertexSet(8, m); };
    CHECK(VertexSet::lex_less(set({0, 2}), set({0, 3})));
    CHECK(VertexSet::lex_less(set({0, 2}), set({1})));
    CHECK(VertexSet::lex_less(set({0, 3}), set({1, 3})));
    CHECK_FALSE(VertexSet::lex_less(set({1, 3}), set({0, 3})));
    CHECK_FALSE(VertexSet::lex_less(set({0, 2}), set({0, 2})));
    // prefix cases
    CHECK(VertexSet::lex_less(set({0}), set({0, 1})));
    CHECK_FALSE(VertexSet::lex_less(set({0, 1}), set({0})));
    CHECK(VertexSet::lex_less(set({}), set({0})));
}

TEST_CASE("graph construction validates input") {
    CHECK(WeightedGraph().vertex_count() == 0);
    WeightedGraph empty(0, {}, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    WeightedGraph triangle(3, {1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(triangle.edge_count() == 3);
    CHECK(triangle.adjacent(0, 2));
    CHECK(triangle.degree(1) == 2);

    CHECK_THROWS_AS(WeightedGraph(3, {1, 1, 1}, {{0, 0}}), graph_error);
    CHECK_THROWS_AS(WeightedGraph(3, {1, 1, 1}, {{0, 3}}), graph_error);
    CHECK_THROWS_AS(WeightedGraph(3, {1, 1}, {}), graph_error);

    // duplicate and mirrored edges collapse
    WeightedGraph dup(2, {1, 1}, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    // total weight must fit 64 bits
    Weight half = Weight{1} << 63;
    CHECK_THROWS_AS(WeightedGraph(2, {half, half}, {}), std::overflow_error);
}

TEST_CASE("neighborhood of a set") {
    auto k3 = fixtures::complete({1, 1, 1});
    CHECK(neighborhood(k3, VertexSet(3, {0})) == VertexSet(3, {1, 2}));

    auto p4 = fixtures::unit_path(4);
    CHECK(neighborhood(p4, VertexSet(4, {0, 3})) == VertexSet(4, {1, 2}));
    CHECK(neighborhood(p4, VertexSet(4)) == VertexSet(4));
}

TEST_CASE("weight of a set") {
    WeightedGraph g(5, {3, 2, 2, 1, 1}, {});
    CHECK(weight_of(g, VertexSet(5, {0, 2})) == 5);
    CHECK(weight_of(g, VertexSet(5)) == 0);
    WeightedGraph single(1, {7}, {});
    CHECK(weight_of(single, VertexSet(1, {0})) == 7);
}

TEST_CASE("independence and maximality") {
    auto k3 = fixtures::complete({1, 1, 1});
    CHECK(is_independent(k3, VertexSet(3, {0})));
    CHECK_FALSE(is_independent(k3, VertexSet(3, {0, 1})));
    CHECK(is_independent(k3, VertexSet(3)));

    auto p4 = fixtures::unit_path(4);
    CHECK(is_mis(p4, VertexSet(4, {0, 2})));
    CHECK_FALSE(is_mis(p4, VertexSet(4, {0}))); // vertex 3 undominated

    WeightedGraph empty(0, {}, {});
    CHECK(is_mis(empty, VertexSet(0)));
}

TEST_CASE("predicates agree with the subset-scan oracle up to n=5") {
    for (int n = 0; n <= 5; ++n) {
        oracle::for_each_graph(n, [&](const std::vector<std::pair<int, int>>& edges) {
            WeightedGraph g(n, std::vector<Weight>(static_cast<std::size_t>(n), 1), edges);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                VertexSet u(n);
                std::vector<int> list;
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v)) {
                        u.add(v);
                        list.push_back(v);
                    }
                REQUIRE(is_independent(g, u) == oracle::independent(edges, list));
                REQUIRE(is_mis(g, u) == oracle::maximal_independent(n, edges, list));
                if (is_mis(g, u)) {
                    // the neighborhood of a MIS is exactly the complement
                    REQUIRE(neighborhood(g, u) == u.complement());
                }
            }
        });
    }
}

TEST_CASE("a MIS neighborhood is its complement, exhaustively to n=6") {
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_graph(n, [&](const std::vector<std::pair<int, int>>& edges) {
            WeightedGraph g(n, std::vector<Weight>(static_cast<std::size_t>(n), 1), edges);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                VertexSet u(n);
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v))
                        u.add(v);
                if (is_mis(g, u))
                    REQUIRE(neighborhood(g, u) == u.complement());
            }
        });
}

TEST_CASE("neighborhood is monotone and weights are additive") {
    auto g = fixtures::cycle(6);
    for (std::uint32_t a = 0; a < 64; ++a)
        for (std::uint32_t b = 0; b < 64; ++b) {
            if ((a & b) != a)
                continue; // want a subset of b
            VertexSet sa(6), sb(6);
            for (int v = 0; v < 6; ++v) {
                if (a & (1u << v))
                    sa.add(v);
                if (b & (1u << v))
                    sb.add(v);
            }
            CHECK(neighborhood(g, sa).is_subset_of(neighborhood(g, sb)));
        }

    WeightedGraph w(4, {5, 7, 11, 13}, {});
    VertexSet a(4, {0, 2});
    VertexSet b(4, {1, 3});
    CHECK(weight_of(w, a | b) == weight_of(w, a) + weight_of(w, b));
}

TEST_CASE("isolated vertices belong to every MIS") {
    // vertex 2 is isolated
    WeightedGraph g(4, {1, 1, 1, 1}, {{0, 1}, {1, 3}});
    for (const auto& set : oracle::all_mis(4, {{0, 1}, {1, 3}})) {
        VertexSet u(4);
        for (int v : set)
            u.add(v);
        REQUIRE(is_mis(g, u));
        REQUIRE(u.contains(2));
    }
}
