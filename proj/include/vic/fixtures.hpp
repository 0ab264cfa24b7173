#ifndef VIC_FIXTURES_HPP
#define VIC_FIXTURES_HPP

// Reference colorings for the small graphs the constructive algorithms lean
// on: tight base cases, worked examples, and the smallest instances of each
// degree/girth regime. Each entry carries the palette size and spread cap it
// is valid under; a dedicated test re-verifies all of them.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vic/canonical.hpp"
#include "vic/checker.hpp"
#include "vic/construct_util.hpp"
#include "vic/graph.hpp"

namespace vic {

struct Fixture {
    std::string name;
    Graph graph;
    ViColoring coloring;
    int colors = 0;  // palette the coloring is valid within
    int spread = 0;  // spread cap it satisfies
};

namespace detail {

struct IncidenceColor {
    int at = 0;      // holder vertex
    int toward = 0;  // far end of the edge
    int color = 0;
};

inline Fixture make_fixture(std::string name, Graph g, std::vector<int> vertex_colors,
                            std::vector<IncidenceColor> incidence_colors, int colors,
                            int spread) {
    ElementIndex ix(g);
    ViColoring c = make_unset_coloring(g);
    c.vertex_colors = std::move(vertex_colors);
    for (const auto& i : incidence_colors)
        set_color(c, ix, ElementId::inc(i.at, i.toward), i.color);
    return {std::move(name), std::move(g), std::move(c), colors, spread};
}

inline std::vector<Fixture> build_fixture_table() {
    std::vector<Fixture> t;

    // Two squares glued along one edge: the smallest graph where a plain
    // greedy over the elements beats the naive bound.
    t.push_back(make_fixture(
        "two_squares_shared_edge",
        Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 3}}),
        {1, 5, 1, 4, 4, 3},
        {{0, 1, 4}, {1, 0, 3}, {1, 2, 2}, {2, 1, 4}, {2, 3, 5}, {3, 2, 2}, {3, 0, 3},
         {0, 3, 5}, {0, 4, 2}, {4, 0, 3}, {4, 5, 1}, {5, 4, 2}, {5, 3, 5}, {3, 5, 1}},
        5, 1));

    // Triangle at spread 1: six colors are necessary and sufficient.
    t.push_back(make_fixture(
        "triangle_spread1", Graph(3, {{0, 1}, {1, 2}, {2, 0}}), {1, 2, 3},
        {{0, 1, 5}, {1, 0, 4}, {1, 2, 6}, {2, 1, 5}, {2, 0, 4}, {0, 2, 6}},
        6, 1));

    // Triangle at spread 2: one fewer color suffices.
    t.push_back(make_fixture(
        "triangle_spread2", Graph(3, {{0, 1}, {1, 2}, {2, 0}}), {1, 4, 2},
        {{0, 1, 2}, {1, 0, 3}, {1, 2, 5}, {2, 1, 1}, {2, 0, 3}, {0, 2, 4}},
        5, 2));

    // The diamond (a four-clique less one edge): the subcubic outerplanar
    // graph that forces six colors even at spread 2.
    t.push_back(make_fixture(
        "diamond", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}), {1, 6, 4, 5},
        {{0, 1, 5}, {1, 0, 3}, {1, 2, 2}, {2, 1, 5}, {2, 3, 6}, {3, 2, 2}, {3, 0, 3},
         {0, 3, 6}, {0, 2, 2}, {2, 0, 3}},
        6, 1));

    // Maximal outerplanar graph of order 5 with a degree-4 hub; the other
    // order-5 outerplanar graphs with max degree 4 embed into it.
    t.push_back(make_fixture(
        "fan_order5",
        Graph(5, {{0, 1}, {0, 4}, {1, 4}, {1, 2}, {1, 3}, {2, 4}, {2, 3}}),
        {3, 1, 5, 4, 2},
        {{0, 1, 6}, {1, 0, 5}, {1, 2, 3}, {2, 1, 6}, {4, 2, 3}, {2, 4, 4}, {1, 4, 4},
         {4, 1, 6}, {4, 0, 5}, {0, 4, 4}, {1, 3, 2}, {3, 1, 6}, {3, 2, 3}, {2, 3, 2}},
        6, 1));

    // Hexagon plus one long chord: smallest two-connected instance with max
    // degree 3 and girth 4, colored at spread 1.
    t.push_back(make_fixture(
        "hexagon_chord",
        Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}),
        {1, 3, 1, 2, 5, 2},
        {{0, 1, 2}, {1, 0, 5}, {1, 2, 4}, {2, 1, 2}, {2, 3, 3}, {3, 2, 4}, {3, 4, 1},
         {4, 3, 3}, {4, 5, 4}, {5, 4, 1}, {5, 0, 5}, {0, 5, 4}, {0, 3, 3}, {3, 0, 5}},
        6, 1));

    // Octagon with two chords from one hub: smallest degree-4, girth-4
    // instance, spread 1.
    t.push_back(make_fixture(
        "octagon_two_chords",
        Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                  {0, 3}, {0, 5}}),
        {1, 2, 6, 2, 1, 2, 3, 5},
        {{0, 1, 3}, {1, 0, 6}, {1, 2, 1}, {2, 1, 3}, {2, 3, 4}, {3, 2, 1}, {3, 4, 3},
         {4, 3, 4}, {4, 5, 5}, {5, 4, 3}, {5, 0, 6}, {0, 5, 5}, {0, 3, 4}, {3, 0, 6},
         {5, 6, 4}, {6, 5, 5}, {6, 7, 2}, {7, 6, 4}, {7, 0, 6}, {0, 7, 2}},
        6, 1));

    // Fourteen-ring with two spaced chords at one hub: smallest degree-4,
    // girth-6 instance, where the optimum drops to six, spread 1.
    t.push_back(make_fixture(
        "ring14_two_chords",
        Graph(14, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                   {8, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 0},
                   {12, 7}, {7, 2}}),
        {3, 5, 2, 6, 2, 4, 5, 1, 4, 6, 3, 2, 3, 5},
        {{0, 1, 4},   {1, 0, 1},   {1, 2, 3},   {2, 1, 4},  {2, 3, 1},  {3, 2, 3},
         {3, 4, 5},   {4, 3, 1},   {4, 5, 3},   {5, 4, 5},  {5, 6, 2},  {6, 5, 3},
         {6, 7, 6},   {7, 6, 2},   {7, 8, 5},   {8, 7, 6},  {8, 9, 2},  {9, 8, 5},
         {9, 10, 1},  {10, 9, 2},  {10, 11, 5}, {11, 10, 1}, {11, 12, 4}, {12, 11, 5},
         {12, 13, 2}, {13, 12, 4}, {13, 0, 1},  {0, 13, 2}, {12, 7, 6}, {7, 12, 4},
         {7, 2, 3},   {2, 7, 6}},
        6, 1));

    // Decagon with three chords from one hub: smallest degree-5, girth-4
    // instance, spread 1 at the tight seven colors.
    t.push_back(make_fixture(
        "decagon_three_chords",
        Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                   {8, 9}, {9, 0}, {0, 3}, {0, 5}, {0, 7}}),
        {1, 3, 5, 2, 1, 3, 6, 3, 2, 3},
        {{0, 1, 2}, {1, 0, 7}, {1, 2, 4}, {2, 1, 2}, {2, 3, 3}, {3, 2, 4}, {3, 4, 6},
         {4, 3, 3}, {4, 5, 4}, {5, 4, 6}, {5, 0, 7}, {0, 5, 4}, {0, 3, 3}, {3, 0, 7},
         {5, 6, 2}, {6, 5, 4}, {6, 7, 5}, {7, 6, 2}, {7, 0, 7}, {0, 7, 5}, {7, 8, 4},
         {8, 7, 5}, {8, 9, 6}, {9, 8, 4}, {9, 0, 7}, {0, 9, 6}},
        7, 1));

    return t;
}

}  // namespace detail

inline const std::vector<Fixture>& fixture_table() {
    static const std::vector<Fixture> table = detail::build_fixture_table();
    return table;
}

inline const Fixture& fixture_named(const std::string& name) {
    for (const auto& f : fixture_table())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown fixture: " + name);
}

struct FixtureMatch {
    const Fixture* fixture = nullptr;
    ViColoring coloring;  // transferred onto the queried graph
};

// Look the graph up in the fixture table up to isomorphism and, on a hit,
// carry the stored coloring over to the query's labeling.
inline std::optional<FixtureMatch> fixture_match(const Graph& g) {
    for (const auto& f : fixture_table()) {
        if (f.graph.n != g.n || f.graph.edge_count() != g.edge_count()) continue;
        auto map = find_isomorphism(f.graph, g);
        if (!map) continue;
        return FixtureMatch{&f, transfer_coloring(f.graph, f.coloring, g, *map)};
    }
    return std::nullopt;
}

}  // namespace vic

#endif  // VIC_FIXTURES_HPP
