#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "vic/canonical.hpp"
#include "vic/generators.hpp"

using vic::Graph;

TEST_CASE("relabeling never changes the key") {
    vic::SplitMix64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracles::random_graph(1 + static_cast<int>(rng.below(8)), 50, rng);
        Graph h = vic::relabel(g, oracles::random_permutation(g.n, rng));
        CHECK(vic::canonical_key(g) == vic::canonical_key(h));
        CHECK(vic::isomorphic(g, h));
        auto map = vic::find_isomorphism(g, h);
        REQUIRE(map.has_value());
        // The map carries edges to edges and is a permutation.
        std::set<int> image(map->begin(), map->end());
        CHECK(static_cast<int>(image.size()) == g.n);
        for (auto [u, v] : g.edges) CHECK(h.has_edge((*map)[u], (*map)[v]));
    }
}

TEST_CASE("regular non-isomorphic pairs are told apart") {
    // C_6 vs two triangles: same order, size, and degree sequence.
    Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(vic::isomorphic(oracles::cycle(6), two_triangles));
    CHECK_FALSE(vic::find_isomorphism(oracles::cycle(6), two_triangles).has_value());
    // Path vs star on four vertices.
    CHECK_FALSE(vic::isomorphic(oracles::path(4), oracles::complete_bipartite(1, 3)));
    // C_4 vs K_3 plus an isolated vertex differ in edge count already.
    Graph k3_plus(4, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(vic::isomorphic(oracles::cycle(4), k3_plus));
}

TEST_CASE("canonical permutation reproduces the certificate") {
    vic::SplitMix64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracles::random_graph(2 + static_cast<int>(rng.below(6)), 50, rng);
        auto f = vic::canonical_form(g);
        Graph c = vic::relabel(g, f.perm);
        std::string bits;
        for (int i = 0; i < c.n; ++i)
            for (int j = i + 1; j < c.n; ++j) bits.push_back(c.has_edge(i, j) ? '1' : '0');
        CHECK(bits == f.bits);
    }
}

TEST_CASE("enumeration counts match the literature") {
    int expected_all[] = {1, 2, 4, 11, 34, 156};
    int expected_connected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        auto all = vic::enumerate_graphs(n);
        CHECK(static_cast<int>(all.size()) == expected_all[n - 1]);
        int connected = 0;
        for (const Graph& g : all)
            if (vic::is_connected(g)) connected++;
        CHECK(connected == expected_connected[n - 1]);
        // Every listed graph really has n vertices, and keys are unique.
        std::set<std::string> keys;
        for (const Graph& g : all) {
            CHECK(g.n == n);
            keys.insert(vic::canonical_key(g));
        }
        CHECK(keys.size() == all.size());
    }
}

TEST_CASE("enumeration at seven vertices") {
    auto all = vic::enumerate_graphs(7);
    CHECK(all.size() == 1044);
    int connected = 0;
    for (const Graph& g : all)
        if (vic::is_connected(g)) connected++;
    CHECK(connected == 853);
}

TEST_CASE("enumeration filters") {
    auto trees = vic::enumerate_graphs(5, [](const Graph& g) { return vic::is_forest(g) && vic::is_connected(g); });
    CHECK(trees.size() == 3);  // path, star, spider
    auto subcubic = vic::enumerate_graphs(
        5, {}, [](const Graph& g) { return g.max_degree() <= 3; });
    for (const Graph& g : subcubic) CHECK(g.max_degree() <= 3);
    CHECK(vic::enumerate_graphs(1).size() == 1);
    CHECK_THROWS_AS(vic::enumerate_graphs(0), std::invalid_argument);
    CHECK_THROWS_AS(vic::enumerate_graphs(9), std::invalid_argument);
}
