#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "vic/checker.hpp"
#include "vic/compose.hpp"
#include "vic/construct_basic.hpp"
#include "vic/construct_outerplanar.hpp"
#include "vic/exact.hpp"
#include "vic/generators.hpp"

using vic::ColoredPiece;
using vic::Graph;
using vic::ViColoring;

namespace {

// Exact minimum coloring of a piece, optionally under a spread cap.
ViColoring best(const Graph& g, std::optional<int> spread = std::nullopt) {
    auto ex = vic::chi_vi(g, spread);
    REQUIRE(ex.witness.has_value());
    return *ex.witness;
}

}  // namespace

TEST_CASE("cut edge split keeps the shared edge on both sides") {
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(vic::is_cut_edge(g, 2, 3));
    CHECK_FALSE(vic::is_cut_edge(g, 0, 1));
    auto [a, b] = vic::split_at_cut_edge(g, {2, 3});
    CHECK(a.graph.n == 4);
    CHECK(b.graph.n == 4);
    CHECK(a.graph.edge_count() == 4);
    CHECK(b.graph.edge_count() == 4);
    CHECK_THROWS_AS(vic::split_at_cut_edge(g, {0, 1}), std::invalid_argument);
}

TEST_CASE("two triangles over a bridge merge into five colors") {
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    auto [a, b] = vic::split_at_cut_edge(g, {2, 3});
    ViColoring m = vic::compose_cut_edge(g, {2, 3}, ColoredPiece{a.graph, best(a.graph), a.to_host},
                                         ColoredPiece{b.graph, best(b.graph), b.to_host});
    auto rep = vic::verify(g, m, 5);
    CHECK(rep.valid);
    CHECK(vic::max_color(m) == 5);
    // The merged palette is exactly the larger of the two sides.
    CHECK(*vic::chi_vi(g).value == 5);
}

TEST_CASE("cut edge merge equals the larger side over random bridged graphs") {
    int tried = 0;
    for (std::uint64_t seed = 1; seed <= 40 && tried < 10; ++seed) {
        Graph g = vic::gen_outerplanar({8, 4, 3, false, seed * 611 + 2});
        auto cuts = vic::blocks(g).cut_edges;
        if (cuts.empty()) continue;
        auto [u, v] = cuts[0];
        auto [a, b] = vic::split_at_cut_edge(g, {u, v});
        if (a.graph.n < 2 || b.graph.n < 2) continue;
        tried++;
        INFO("seed " << seed);
        auto ca = vic::chi_vi(a.graph);
        auto cb = vic::chi_vi(b.graph);
        int k = std::max(*ca.value, *cb.value);
        ViColoring m = vic::compose_cut_edge(g, {u, v},
                                             ColoredPiece{a.graph, *ca.witness, a.to_host},
                                             ColoredPiece{b.graph, *cb.witness, b.to_host});
        CHECK(vic::verify(g, m, k).valid);
        // Optimal: the whole graph needs no more than its harder side.
        CHECK(*vic::chi_vi(g).value == k);
    }
    CHECK(tried >= 5);
}

TEST_CASE("compose_cut_edge rejects a bogus partition") {
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    auto [a, b] = vic::split_at_cut_edge(g, {2, 3});
    // Same piece on both sides cannot partition the graph.
    CHECK_THROWS(vic::compose_cut_edge(g, {2, 3}, ColoredPiece{a.graph, best(a.graph), a.to_host},
                                       ColoredPiece{a.graph, best(a.graph), a.to_host}));
}

TEST_CASE("two paths glued at an end make a longer four-color path") {
    Graph g = vic::path_graph(5);
    auto [a, b] = vic::split_at_cut_vertex(g, 2);
    ViColoring ca = vic::color_path(a.graph.n);
    ViColoring cb = vic::color_path(b.graph.n);
    ViColoring m = vic::compose_cut_vertex(g, 2, ColoredPiece{a.graph, ca, a.to_host},
                                           ColoredPiece{b.graph, cb, b.to_host});
    auto rep = vic::verify(g, m, 4, 1);
    CHECK(rep.valid);
    CHECK(rep.spread_over_cap.empty());
    CHECK(vic::max_color(m) == 4);
}

TEST_CASE("two squares at a shared corner need six colors") {
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
    auto [a, b] = vic::split_at_cut_vertex(g, 0);
    ViColoring ca = vic::color_cycle(4, 1);
    ViColoring cb = vic::color_cycle(4, 1);
    ViColoring m = vic::compose_cut_vertex(g, 0, ColoredPiece{a.graph, ca, a.to_host},
                                           ColoredPiece{b.graph, cb, b.to_host});
    auto rep = vic::verify(g, m, 6, 1);
    CHECK(rep.valid);
    CHECK(rep.spread_over_cap.empty());
    CHECK(vic::max_color(m) == 6);
    // Six is forced: around the shared corner the vertex, its incoming color
    // and four outgoing incidences form a clique under spread one.
    CHECK(*vic::chi_vi(g, 1).value == 6);
}

TEST_CASE("three octagons at one corner need eight colors") {
    std::vector<std::pair<int, int>> es;
    int next = 1;
    for (int ring = 0; ring < 3; ++ring) {
        int first = next;
        es.emplace_back(0, first);
        for (int i = 0; i < 6; ++i, ++next) es.emplace_back(next, next + 1);
        es.emplace_back(0, next);
        next++;
    }
    Graph g(22, std::move(es));
    REQUIRE(g.degree(0) == 6);

    auto [a, rest] = vic::split_at_cut_vertex(g, 0);
    auto [b, c] = vic::split_at_cut_vertex(rest.graph, 0);
    ViColoring cb = vic::color_cycle(8, 1);
    ViColoring inner =
        vic::compose_cut_vertex(rest.graph, 0, ColoredPiece{b.graph, cb, b.to_host},
                                ColoredPiece{c.graph, cb, c.to_host});
    ViColoring m =
        vic::compose_cut_vertex(g, 0, ColoredPiece{a.graph, vic::color_cycle(8, 1), a.to_host},
                                ColoredPiece{rest.graph, inner, rest.to_host});
    auto rep = vic::verify(g, m, 8, 1);
    CHECK(rep.valid);
    CHECK(rep.spread_over_cap.empty());
    // Eight is also a floor: degree six plus vertex and entering color.
    CHECK(vic::max_color(m) == 8);
}

TEST_CASE("cut vertex formula matches the exact solver on small gluings") {
    struct Case {
        Graph a, b;
        int expect;
    };
    // Piece values at spread one: triangle 6, square 4, short path 4.
    std::vector<Case> cases;
    cases.push_back({oracles::cycle(3), oracles::cycle(3), 6});
    cases.push_back({oracles::cycle(3), oracles::path(3), 6});
    cases.push_back({oracles::cycle(4), oracles::path(2), 5});
    cases.push_back({oracles::path(3), oracles::path(3), 4});
    for (std::size_t i = 0; i < cases.size(); ++i) {
        INFO("case " << i);
        const Graph& a = cases[i].a;
        const Graph& b = cases[i].b;
        // Glue vertex 0 of both pieces.
        std::vector<std::pair<int, int>> es = a.edges;
        auto lift = [&](int v) { return v == 0 ? 0 : v + a.n - 1; };
        for (auto [u, v] : b.edges) es.emplace_back(lift(u), lift(v));
        Graph g(a.n + b.n - 1, std::move(es));
        CHECK(*vic::chi_vi(g, 1).value == cases[i].expect);

        auto [pa, pb] = vic::split_at_cut_vertex(g, 0);
        ViColoring m = vic::compose_cut_vertex(g, 0, ColoredPiece{pa.graph, best(pa.graph, 1), pa.to_host},
                                               ColoredPiece{pb.graph, best(pb.graph, 1), pb.to_host});
        auto rep = vic::verify(g, m, cases[i].expect, 1);
        CHECK(rep.valid);
        CHECK(rep.spread_over_cap.empty());
    }
}

TEST_CASE("compose_cut_vertex refuses a piece that is wide at the joint") {
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
    auto [a, b] = vic::split_at_cut_vertex(g, 0);
    ViColoring ca = vic::color_cycle(4, 1);
    // Recolor one incidence entering the joint to a fresh color: still a
    // proper coloring, but the joint now sees two entering colors.
    int local = 0;
    while (a.to_host[local] != 0) local++;
    vic::ElementIndex ix(a.graph);
    ViColoring wide = ca;
    int nb = a.graph.neighbors(local)[0];
    vic::set_color(wide, ix, vic::ElementId::inc(nb, local), 7);
    REQUIRE(vic::verify(a.graph, wide, 7).valid);
    CHECK_THROWS_AS(vic::compose_cut_vertex(g, 0, ColoredPiece{a.graph, wide, a.to_host},
                                            ColoredPiece{b.graph, vic::color_cycle(4, 1), b.to_host}),
                    vic::SpreadViolation);
}
