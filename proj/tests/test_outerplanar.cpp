#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "vic/generators.hpp"
#include "vic/outerplanar.hpp"

using vic::Graph;

namespace {

Graph diamond() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

Graph fan5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }

}  // namespace

TEST_CASE("recognition accepts and rejects the classics") {
    CHECK(vic::is_outerplanar(oracles::cycle(5)).has_value());
    CHECK(vic::is_outerplanar(oracles::path(6)).has_value());
    CHECK(vic::is_outerplanar(diamond()).has_value());
    CHECK(vic::is_outerplanar(fan5()).has_value());
    CHECK_FALSE(vic::is_outerplanar(oracles::complete(4)).has_value());
    CHECK_FALSE(vic::is_outerplanar(oracles::complete_bipartite(2, 3)).has_value());
    // Prism: 3-connected, so not outerplanar.
    Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(vic::is_outerplanar(prism).has_value());
}

TEST_CASE("subdividing the diamond chord yields a forbidden bipartite minor") {
    // Degree-2 contraction alone would accept this graph; the outer-cycle
    // certificate must reject it.
    Graph trap(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}});
    CHECK_FALSE(vic::is_outerplanar(trap).has_value());
    CHECK_FALSE(oracles::is_outerplanar(trap));
}

TEST_CASE("diamond embedding") {
    auto emb = vic::is_outerplanar(diamond());
    REQUIRE(emb.has_value());
    CHECK(emb->outer_order == std::vector<int>{0, 1, 2, 3});
    CHECK(emb->chords == std::vector<std::pair<int, int>>{{0, 2}});
    REQUIRE(emb->faces.size() == 2);
    CHECK(emb->faces[0] == std::vector<int>{0, 1, 2});
    CHECK(emb->faces[1] == std::vector<int>{0, 2, 3});
}

TEST_CASE("chordless cycles embed with a single face") {
    for (int n : {3, 4, 7, 12}) {
        auto emb = vic::is_outerplanar(oracles::cycle(n));
        REQUIRE(emb.has_value());
        CHECK(emb->chords.empty());
        REQUIRE(emb->faces.size() == 1);
        CHECK(static_cast<int>(emb->faces[0].size()) == n);
        CHECK(vic::end_faces(*emb, oracles::cycle(n)).empty());
    }
}

TEST_CASE("face count is chords plus one on 2-connected inputs") {
    vic::SplitMix64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        vic::GenSpec spec;
        spec.n = 4 + static_cast<int>(rng.below(9));
        spec.delta_max = 6;
        spec.two_connected = true;
        spec.seed = rng.next();
        Graph g = vic::gen_outerplanar(spec);
        auto emb = vic::is_outerplanar(g);
        REQUIRE(emb.has_value());
        CHECK(emb->faces.size() == emb->chords.size() + 1);
        // Outer order is a Hamiltonian cycle of real edges.
        REQUIRE(static_cast<int>(emb->outer_order.size()) == g.n);
        for (int i = 0; i < g.n; ++i)
            CHECK(g.has_edge(emb->outer_order[i], emb->outer_order[(i + 1) % g.n]));
        // Girth of a 2-connected outerplanar graph is its shortest face.
        size_t shortest = emb->faces.front().size();
        for (const auto& f : emb->faces) shortest = std::min(shortest, f.size());
        CHECK(vic::girth(g) == static_cast<int>(shortest));
    }
}

TEST_CASE("recognition agrees with the minor-based oracle on all small graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : vic::enumerate_graphs(n))
            CHECK(vic::is_outerplanar(g).has_value() == oracles::is_outerplanar(g));
}

TEST_CASE("recognition agrees with the minor-based oracle on random graphs") {
    vic::SplitMix64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_graph(5 + static_cast<int>(rng.below(4)), 30, rng);
        CHECK(vic::is_outerplanar(g).has_value() == oracles::is_outerplanar(g));
    }
}

TEST_CASE("end faces of the fan") {
    Graph g = fan5();
    auto emb = vic::is_outerplanar(g);
    REQUIRE(emb.has_value());
    auto efs = vic::end_faces(*emb, g);
    REQUIRE(efs.size() == 2);
    CHECK(efs[0].boundary == std::vector<int>{1, 0, 4});
    CHECK(efs[0].degree == 3);
    CHECK(efs[1].boundary == std::vector<int>{2, 3, 4});
    CHECK(efs[1].degree == 3);
    // Closing edge endpoints both have degree < 5 here.
    auto low = vic::low_degree_end_face(*emb, g);
    CHECK(low.boundary == std::vector<int>{1, 0, 4});
}

TEST_CASE("end face boundaries walk the outer cycle") {
    vic::SplitMix64 rng(55);
    int seen = 0;
    for (int trial = 0; trial < 40 && seen < 25; ++trial) {
        vic::GenSpec spec;
        spec.n = 5 + static_cast<int>(rng.below(8));
        spec.delta_max = 5;
        spec.two_connected = true;
        spec.seed = rng.next();
        Graph g = vic::gen_outerplanar(spec);
        auto emb = vic::is_outerplanar(g);
        REQUIRE(emb.has_value());
        auto efs = vic::end_faces(*emb, g);
        if (emb->chords.empty()) {
            CHECK(efs.empty());
            continue;
        }
        REQUIRE_FALSE(efs.empty());
        seen++;
        for (const auto& ef : efs) {
            REQUIRE(ef.degree == static_cast<int>(ef.boundary.size()));
            // Consecutive boundary vertices are edges; the closing pair too.
            for (size_t i = 0; i + 1 < ef.boundary.size(); ++i)
                CHECK(g.has_edge(ef.boundary[i], ef.boundary[i + 1]));
            CHECK(g.has_edge(ef.boundary.front(), ef.boundary.back()));
            // Interior vertices have degree 2.
            for (size_t i = 1; i + 1 < ef.boundary.size(); ++i)
                CHECK(g.degree(ef.boundary[i]) == 2);
        }
    }
    CHECK(seen >= 10);
}

TEST_CASE("reduction cases") {
    Graph p2(2, {{0, 1}});
    auto r1 = vic::find_reduction(p2);
    CHECK(r1.kind == vic::ReductionCase::Kind::PendantVertex);
    CHECK(r1.v == 0);

    auto r2 = vic::find_reduction(oracles::cycle(5));
    CHECK(r2.kind == vic::ReductionCase::Kind::AdjacentTwoVertices);
    CHECK(r2.v == 0);
    CHECK(r2.u == 1);

    auto r3 = vic::find_reduction(diamond());
    CHECK(r3.kind == vic::ReductionCase::Kind::TriangulatedTwoVertex);
    CHECK(r3.v == 1);
    CHECK(r3.u == 0);
    CHECK(r3.w == 2);

    Graph lone(1, {});
    CHECK(vic::find_reduction(lone).kind == vic::ReductionCase::Kind::PendantVertex);

    CHECK_THROWS_AS(vic::find_reduction(oracles::complete(4)), std::invalid_argument);
}

TEST_CASE("every random outerplanar graph admits a reduction") {
    vic::SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        vic::GenSpec spec;
        spec.n = 3 + static_cast<int>(rng.below(12));
        spec.delta_max = 5;
        spec.two_connected = rng.chance(1, 2);
        if (spec.two_connected) spec.n = std::max(spec.n, 3);
        spec.seed = rng.next();
        Graph g = vic::gen_outerplanar(spec);
        auto rc = vic::find_reduction(g);
        if (spec.two_connected && g.n >= 3)
            CHECK(rc.kind != vic::ReductionCase::Kind::PendantVertex);
        // The named vertices actually satisfy the claimed shape.
        switch (rc.kind) {
            case vic::ReductionCase::Kind::PendantVertex:
                CHECK(g.degree(rc.v) <= 1);
                break;
            case vic::ReductionCase::Kind::AdjacentTwoVertices:
                CHECK(g.degree(rc.v) == 2);
                CHECK(g.degree(rc.u) == 2);
                CHECK(g.has_edge(rc.v, rc.u));
                break;
            case vic::ReductionCase::Kind::TriangulatedTwoVertex:
                CHECK(g.degree(rc.v) == 2);
                CHECK(g.has_edge(rc.v, rc.u));
                CHECK(g.has_edge(rc.v, rc.w));
                CHECK(g.has_edge(rc.u, rc.w));
                break;
        }
    }
}

TEST_CASE("stitched embeddings cover non-2-connected graphs") {
    // Two triangles joined by a bridge plus a pendant vertex.
    Graph g(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {0, 6}, {6, 7}});
    auto emb = vic::is_outerplanar(g);
    REQUIRE(emb.has_value());
    std::vector<int> sorted = emb->outer_order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(emb->faces.size() == 2);
    CHECK(vic::is_outerplanar(Graph(3, {})).has_value());
}

TEST_CASE("end_faces rejects non-2-connected inputs") {
    auto emb = vic::is_outerplanar(oracles::path(4));
    REQUIRE(emb.has_value());
    CHECK_THROWS_AS(vic::end_faces(*emb, oracles::path(4)), std::invalid_argument);
    auto cyc_emb = vic::is_outerplanar(oracles::cycle(6));
    CHECK_THROWS_AS(vic::low_degree_end_face(*cyc_emb, oracles::cycle(6)),
                    std::invalid_argument);
}
