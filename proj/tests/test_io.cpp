#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <sstream>

#include "oracles.hpp"
#include "vic/exact.hpp"
#include "vic/io.hpp"

using vic::Graph;

TEST_CASE("edge list round trip") {
    Graph g = oracles::cycle(5);
    Graph back = vic::parse_edge_list(vic::format_edge_list(g));
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);

    Graph parsed = vic::parse_edge_list("# a comment\n 3 2 \n0 1\n# middle\n1 2\n");
    CHECK(parsed.n == 3);
    CHECK(parsed.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(vic::parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(vic::parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(vic::parse_edge_list("3 1\n0 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(vic::parse_edge_list("3 1\n0 3\n"), std::invalid_argument);
}

TEST_CASE("json graph round trip and sniffing") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
    Graph back = vic::graph_from_json(vic::graph_to_json(g));
    CHECK(back.edges == g.edges);
    CHECK(back.n == 4);

    std::istringstream json_in("  {\"n\": 3, \"edges\": [[0,1],[1,2]]}");
    Graph sniffed = vic::read_graph(json_in);
    CHECK(sniffed.n == 3);
    CHECK(sniffed.edge_count() == 2);

    std::istringstream text_in("3 1\n0 2\n");
    CHECK(vic::read_graph(text_in).has_edge(0, 2));

    CHECK_THROWS_AS(vic::graph_from_json(nlohmann::json{{"n", 3}}), std::invalid_argument);
}

TEST_CASE("coloring json round trip") {
    Graph g = oracles::cycle(4);
    auto res = vic::chi_vi(g);
    REQUIRE(res.value == 4);
    nlohmann::json j = vic::coloring_to_json(g, *res.witness, *res.value);
    CHECK(j.at("k") == 4);
    CHECK(j.at("incidence_colors").size() == 8);
    auto loaded = vic::coloring_from_json(g, j);
    CHECK(loaded.k == 4);
    CHECK(loaded.coloring.vertex_colors == res.witness->vertex_colors);
    CHECK(loaded.coloring.incidence_colors == res.witness->incidence_colors);
    CHECK(vic::verify(g, loaded.coloring, *loaded.k).valid);
}

TEST_CASE("coloring json rejects malformed input") {
    Graph g = oracles::path(3);
    nlohmann::json j = vic::coloring_to_json(g, *vic::chi_vi(g).witness);
    j["incidence_colors"].push_back(j["incidence_colors"][0]);  // duplicate record
    CHECK_THROWS_AS(vic::coloring_from_json(g, j), std::invalid_argument);

    nlohmann::json wrong = {{"vertex_colors", {1, 2}}, {"incidence_colors", nlohmann::json::array()}};
    CHECK_THROWS_AS(vic::coloring_from_json(g, wrong), std::invalid_argument);

    // A record for a non-edge cannot be addressed.
    nlohmann::json bad = vic::coloring_to_json(g, *vic::chi_vi(g).witness);
    bad["incidence_colors"][0]["u"] = 2;
    bad["incidence_colors"][0]["v"] = 0;
    CHECK_THROWS(vic::coloring_from_json(g, bad));
}

TEST_CASE("missing incidence records surface at verification") {
    Graph g = oracles::path(3);
    nlohmann::json j = vic::coloring_to_json(g, *vic::chi_vi(g).witness, 4);
    j["incidence_colors"].erase(0);
    auto loaded = vic::coloring_from_json(g, j);
    CHECK_THROWS_AS(vic::verify(g, loaded.coloring, 4), std::invalid_argument);
}

TEST_CASE("file round trip") {
    Graph g = oracles::complete(4);
    {
        std::ofstream out("io_test_graph.json");
        out << vic::graph_to_json(g).dump(2) << "\n";
    }
    Graph back = vic::read_graph_file("io_test_graph.json");
    CHECK(back.edges == g.edges);
    CHECK_THROWS_AS(vic::read_graph_file("does_not_exist.graph"), std::runtime_error);

    auto res = vic::chi_vi(g);
    {
        std::ofstream out("io_test_coloring.json");
        out << vic::coloring_to_json(g, *res.witness, *res.value).dump() << "\n";
    }
    auto loaded = vic::read_coloring_file(g, "io_test_coloring.json");
    CHECK(loaded.k == res.value);
    CHECK(vic::verify(g, loaded.coloring, *loaded.k).valid);
    std::remove("io_test_graph.json");
    std::remove("io_test_coloring.json");
}

TEST_CASE("dot exports are well formed") {
    Graph g = oracles::path(3);
    std::string d1 = vic::graph_dot(g, "P3");
    CHECK(d1.find("graph P3 {") == 0);
    CHECK(d1.find("0 -- 1") != std::string::npos);
    std::string d2 = vic::incidence_graph_dot(g);
    CHECK(d2.find("(0,1)") != std::string::npos);
    CHECK(d2.find("shape=box") != std::string::npos);
    std::string d3 = vic::three_thirds_dot(g);
    CHECK(d3.find("label=\"2\"") != std::string::npos);
    CHECK(d3.find("(1,2)") != std::string::npos);
}
