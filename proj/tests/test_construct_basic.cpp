#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "oracles.hpp"
#include "vic/checker.hpp"
#include "vic/construct_basic.hpp"
#include "vic/exact.hpp"
#include "vic/generators.hpp"

using vic::Graph;

namespace {

// Expected cycle palette size: four colors iff the length is a multiple of
// four; the triangle needs six under spread 1 and five otherwise.
int cycle_palette(int n, int spread) {
    if (n % 4 == 0) return 4;
    if (n == 3) return spread == 1 ? 6 : 5;
    return 5;
}

// Random tree: each new vertex hangs off an earlier one.
Graph random_tree(int n, vic::SplitMix64& rng) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.emplace_back(static_cast<int>(rng.below(v)), v);
    return Graph(n, std::move(es));
}

}  // namespace

TEST_CASE("paths use four colors at spread one") {
    for (int n = 1; n <= 16; ++n) {
        INFO("n=" << n);
        auto c = vic::color_path(n);
        auto rep = vic::verify(vic::path_graph(n), c, 4, 1);
        CHECK(rep.valid);
        CHECK(rep.spread_over_cap.empty());
    }
    // Four is also necessary from the second vertex on.
    CHECK(*vic::chi_vi(vic::path_graph(2)).value == 4);
    CHECK(*vic::chi_vi(vic::path_graph(5), 1).value == 4);
}

TEST_CASE("cycle palettes match the closed form at both spreads") {
    for (int n = 3; n <= 20; ++n) {
        for (int s : {1, 2}) {
            INFO("n=" << n << " spread=" << s);
            auto c = vic::color_cycle(n, s);
            auto rep = vic::verify(vic::cycle_graph(n), c, cycle_palette(n, s), s);
            CHECK(rep.valid);
            CHECK(rep.spread_over_cap.empty());
            CHECK(vic::max_color(c) == cycle_palette(n, s));
        }
    }
}

TEST_CASE("cycle closed form agrees with the exact solver") {
    for (int n = 3; n <= 9; ++n) {
        INFO("n=" << n);
        CHECK(*vic::chi_vi(vic::cycle_graph(n)).value == cycle_palette(n, 2));
        CHECK(*vic::chi_vi(vic::cycle_graph(n), 1).value == cycle_palette(n, 1));
    }
}

TEST_CASE("forests color within max_degree + 2 at spread one") {
    // Degenerate shapes first.
    CHECK(vic::max_color(vic::color_forest(Graph(3, {}))) == 1);
    CHECK(vic::verify(Graph(3, {}), vic::color_forest(Graph(3, {})), 1, 1).valid);
    Graph matching(4, {{0, 1}, {2, 3}});
    CHECK(vic::verify(matching, vic::color_forest(matching), 4, 1).valid);

    vic::SplitMix64 rng(2026);
    for (int trial = 0; trial < 60; ++trial) {
        Graph t = random_tree(2 + static_cast<int>(rng.below(40)), rng);
        INFO("trial " << trial << " n=" << t.n);
        int bound = t.max_degree() >= 2 ? t.max_degree() + 2 : 4;
        auto rep = vic::verify(t, vic::color_forest(t), bound, 1);
        CHECK(rep.valid);
        CHECK(rep.spread_over_cap.empty());
    }
    // A star is the tight case: the hub sees every leaf incidence.
    Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(*vic::chi_vi(star, 1).value == star.max_degree() + 2);
}

TEST_CASE("complete graphs take exactly order-plus-two colors") {
    for (int n = 2; n <= 8; ++n) {
        INFO("n=" << n);
        auto c = vic::color_complete(n);
        CHECK(vic::verify(vic::complete_graph(n), c, n + 2).valid);
        CHECK(vic::max_color(c) == n + 2);
    }
    for (int n = 2; n <= 6; ++n) {
        INFO("n=" << n);
        CHECK(*vic::chi_vi(vic::complete_graph(n)).value == n + 2);
    }
}

TEST_CASE("degeneracy greedy rejects bad inputs") {
    CHECK_THROWS_AS(vic::color_degenerate(oracles::cycle(4), 0), std::invalid_argument);
    // Too flat: max degree below two.
    CHECK_THROWS_AS(vic::color_degenerate(vic::path_graph(2), 1), std::invalid_argument);
    // Not 1-degenerated.
    CHECK_THROWS_AS(vic::color_degenerate(oracles::cycle(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(vic::color_degenerate(oracles::complete(5), 2), std::invalid_argument);
}

TEST_CASE("degeneracy greedy meets its palette and spread budgets") {
    vic::SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Graph t = random_tree(3 + static_cast<int>(rng.below(30)), rng);
        if (t.max_degree() < 2) continue;
        INFO("tree trial " << trial);
        auto c = vic::color_degenerate(t, 1);
        auto rep = vic::verify(t, c, t.max_degree() + 2, 1);
        CHECK(rep.valid);
        CHECK(rep.spread_over_cap.empty());
    }
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = vic::gen_outerplanar({20, 6, 3, seed % 2 == 0, seed * 107 + 3});
        if (g.max_degree() < 2) continue;
        INFO("outerplanar seed " << seed);
        auto c2 = vic::color_degenerate(g, 2);
        auto rep2 = vic::verify(g, c2, g.max_degree() + 4, 2);
        CHECK(rep2.valid);
        CHECK(rep2.spread_over_cap.empty());
        // A 2-degenerated graph is also 3-degenerated; the wider budget holds.
        auto c3 = vic::color_degenerate(g, 3);
        auto rep3 = vic::verify(g, c3, g.max_degree() + 6, 3);
        CHECK(rep3.valid);
        CHECK(rep3.spread_over_cap.empty());
    }
}
