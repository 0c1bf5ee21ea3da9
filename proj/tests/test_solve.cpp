#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

#include "miskit/generate.hpp"
#include "miskit/normalize.hpp"
#include "miskit/solve.hpp"

using namespace miskit;

namespace {

std::vector<std::vector<int>> as_lists(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    for (const auto& s : sets)
        out.push_back(s.members());
    return out;
}

} // namespace

TEST_CASE("enumeration emits every MIS once, in lexicographic order") {
    auto k3 = fixtures::complete({1, 1, 1});
    CHECK(as_lists(enumerate_mis(k3)) == std::vector<std::vector<int>>{{0}, {1}, {2}});

    auto p4 = fixtures::unit_path(4);
    CHECK(as_lists(enumerate_mis(p4)) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}});

    auto none = fixtures::edgeless(3);
    CHECK(as_lists(enumerate_mis(none)) == std::vector<std::vector<int>>{{0, 1, 2}});

    WeightedGraph empty(0, {}, {});
    CHECK(enumerate_mis(empty).size() == 1);
    CHECK(enumerate_mis(empty)[0].empty());
}

TEST_CASE("enumeration agrees with the subset-scan oracle, exhaustively to n=6") {
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_graph(n, [&](const std::vector<std::pair<int, int>>& edges) {
            WeightedGraph g(n, std::vector<Weight>(static_cast<std::size_t>(n), 1), edges);
            auto expected = oracle::all_mis(n, edges);
            auto actual = as_lists(enumerate_mis(g));
            // oracle output is sorted; enumeration order is lexicographic, so
            // they must match directly
            REQUIRE(actual == expected);
        });
}

TEST_CASE("emission order is lexicographic on random instances") {
    GenParams params;
    params.weight_max = 5;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        params.n = 4 + static_cast<int>(seed % 10);
        params.edge_probability = 0.1 + 0.08 * static_cast<double>(seed % 9);
        auto g = generate(GenKind::random, params, seed).graph;
        auto sets = enumerate_mis(g);
        for (std::size_t i = 0; i + 1 < sets.size(); ++i)
            REQUIRE(VertexSet::lex_less(sets[i], sets[i + 1]));
    }
}

TEST_CASE("enumeration respects the capacity guard") {
    auto big = fixtures::edgeless(25);
    CHECK_THROWS_AS(enumerate_mis(big), capacity_error);
    CHECK(enumerate_mis(big, true).size() == 1);

    // early stop through the callback
    auto k3 = fixtures::complete({1, 1, 1});
    int seen = 0;
    enumerate_mis(k3, [&](const VertexSet&) { return ++seen < 2; });
    CHECK(seen == 2);
}

TEST_CASE("MIS count bound") {
    CHECK(mis_count_bound(1) == 1);
    CHECK(mis_count_bound(2) == 2);
    CHECK(mis_count_bound(3) == 3);
    CHECK(mis_count_bound(4) == 4);
    CHECK(mis_count_bound(5) == 6);
    CHECK(mis_count_bound(6) == 9);
    CHECK(mis_count_bound(9) == 27);
    CHECK(mis_count_bound(12) == 81);
    CHECK_THROWS_AS(mis_count_bound(0), std::invalid_argument);
    CHECK_THROWS_AS(mis_count_bound(-3), std::invalid_argument);
    CHECK_THROWS_AS(mis_count_bound(1000), std::overflow_error);
}

TEST_CASE("enumeration count never exceeds the bound, exhaustively to n=5") {
    for (int n = 1; n <= 5; ++n)
        oracle::for_each_graph(n, [&](const std::vector<std::pair<int, int>>& edges) {
            WeightedGraph g(n, std::vector<Weight>(static_cast<std::size_t>(n), 1), edges);
            REQUIRE(enumerate_mis(g).size() <= mis_count_bound(n));
        });
}

TEST_CASE("disjoint triangles meet the bound exactly") {
    for (int n : {3, 6, 9}) {
        GenParams params;
        params.n = n;
        auto doc = generate(GenKind::moon_moser, params, 0);
        CHECK(enumerate_mis(doc.graph).size() == mis_count_bound(n));
    }
}

TEST_CASE("solve_max on fixtures") {
    auto quotient = fixtures::quotient_path_fixture(); // weights 1,2,2,3,1
    auto best = solve_max(quotient);
    CHECK(best.set == VertexSet(5, {1, 3}));
    CHECK(best.weight == 5);
    CHECK(is_mis(quotient, best.set));

    auto k3 = fixtures::complete({1, 5, 2});
    auto k3_best = solve_max(k3);
    CHECK(k3_best.set == VertexSet(3, {1}));
    CHECK(k3_best.weight == 5);

    WeightedGraph free3(3, {2, 3, 4}, {});
    auto all = solve_max(free3);
    CHECK(all.set == VertexSet::full(3));
    CHECK(all.weight == 9);

    WeightedGraph empty(0, {}, {});
    CHECK(solve_max(empty).weight == 0);
    CHECK(solve_max(empty).set.empty());
}

TEST_CASE("solve_min on fixtures") {
    auto skew = fixtures::path({5, 0, 0, 7});
    auto low = solve_min(skew);
    CHECK(low.set == VertexSet(4, {0, 2}));
    CHECK(low.weight == 5);

    auto k3 = fixtures::complete({1, 5, 2});
    CHECK(solve_min(k3).set == VertexSet(3, {0}));
    CHECK(solve_min(k3).weight == 1);

    // trivial twin-orthogonal instances have equal max and min
    GenParams params;
    params.n = 6;
    params.edge_probability = 0.4;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto doc = generate(GenKind::trivial_twin_ortho, params, seed);
        CHECK(solve_min(doc.graph).weight == solve_max(doc.graph).weight);
    }
}

TEST_CASE("solvers match the subset-scan oracle, exhaustively to n=5") {
    for (int n = 0; n <= 5; ++n)
        oracle::for_each_graph(n, [&](const std::vector<std::pair<int, int>>& edges) {
            std::vector<Weight> weights;
            for (int v = 0; v < n; ++v)
                weights.push_back(static_cast<Weight>((v * 3 + 1) % 4));
            WeightedGraph g(n, weights, edges);
            if (n > 0) {
                REQUIRE(solve_max(g).weight ==
                        oracle::best_mis_weight(n, edges, weights, true));
                REQUIRE(solve_min(g).weight ==
                        oracle::best_mis_weight(n, edges, weights, false));
            }
        });
}

TEST_CASE("enumerate and branch-and-bound methods agree on random instances") {
    GenParams params;
    params.weight_max = 20;
    for (int n : {8, 12, 16}) {
        params.n = n;
        params.edge_probability = 0.3;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto doc = generate(GenKind::random, params, seed);
            for (Direction dir : {Direction::max, Direction::min}) {
                SolveOptions scan;
                scan.method = SolveMethod::enumerate;
                SolveOptions bnb;
                bnb.method = SolveMethod::branch_and_bound;
                auto a = solve(doc.graph, dir, scan);
                auto b = solve(doc.graph, dir, bnb);
                REQUIRE(a.weight == b.weight);
                REQUIRE(a.set == b.set);
            }
        }
    }
}

TEST_CASE("ties break toward the lexicographically smallest set") {
    // two equal-weight maximum sets: {0,2} and {1,3} on C4
    auto c4 = fixtures::cycle(4);
    CHECK(solve_max(c4).set == VertexSet(4, {0, 2}));
    CHECK(solve_min(c4).set == VertexSet(4, {0, 2}));

    // all-zero weights: every MIS ties at 0
    WeightedGraph zeros(4, {0, 0, 0, 0}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(solve_max(zeros).set == VertexSet(4, {0, 2}));
    CHECK(solve_min(zeros).set == VertexSet(4, {0, 2}));
}

TEST_CASE("reduction pipeline returns the direct optimum") {
    auto expanded = expand_normal(fixtures::quotient_path_fixture(), {1, 2, 2, 3, 1});
    for (EmbedMode mode : {EmbedMode::full, EmbedMode::minimal}) {
        auto result = solve_via_reduction(expanded, mode);
        CHECK(result.weight == 5);
        CHECK(result.set == VertexSet(9, {1, 2, 5, 6, 7}));
        CHECK(is_mis(expanded, result.set));
        CHECK(result.stats.source_vertices == 9);
        CHECK(result.stats.quotient_vertices == 5);
    }

    auto k3 = fixtures::complete({1, 5, 2});
    CHECK(solve_via_reduction(k3, EmbedMode::full).weight == 5);

    WeightedGraph empty(0, {}, {});
    CHECK(solve_via_reduction(empty, EmbedMode::full).weight == 0);
}

TEST_CASE("reduction pipeline is sound, exhaustively to n=5") {
    for (int n = 1; n <= 5; ++n)
        oracle::for_each_graph(n, [&](const std::vector<std::pair<int, int>>& edges) {
            std::vector<Weight> weights;
            for (int v = 0; v < n; ++v)
                weights.push_back(static_cast<Weight>((v * 7 + 1) % 6));
            WeightedGraph g(n, weights, edges);
            std::uint64_t direct = oracle::best_mis_weight(n, edges, weights, true);
            for (EmbedMode mode : {EmbedMode::full, EmbedMode::minimal}) {
                auto result = solve_via_reduction(g, mode);
                REQUIRE(result.weight == direct);
                REQUIRE(is_mis(g, result.set));
                REQUIRE(weight_of(g, result.set) == result.weight);
            }
        });
}

TEST_CASE("solve results are reproducible") {
    GenParams params;
    params.n = 10;
    params.edge_probability = 0.4;
    auto doc = generate(GenKind::random, params, 7);
    auto a = solve_max(doc.graph);
    auto b = solve_max(doc.graph);
    CHECK(a.set == b.set);
    CHECK(a.weight == b.weight);
    CHECK(a.stats.nodes == b.stats.nodes);
}
