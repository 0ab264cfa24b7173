#ifndef VIC_IO_HPP
#define VIC_IO_HPP

// Reading and writing graphs and colorings. Two graph formats: a plain edge
// list ("n m" header, one "u v" line per edge, '#' comments) and JSON
// {"n": .., "edges": [[u,v], ..]}. Colorings travel as JSON with explicit
// incidence records. DOT exports are provided for eyeballing.

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vic/checker.hpp"
#include "vic/elements.hpp"
#include "vic/graph.hpp"
#include "vic/transforms.hpp"

namespace vic {

inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::vector<std::pair<int, int>> edges;
    long n = -1, m = -1;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line.substr(first));
        if (n < 0) {
            if (!(row >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("edge list: expected header 'n m'");
            continue;
        }
        int u, v;
        if (!(row >> u >> v)) throw std::invalid_argument("edge list: expected 'u v'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("edge list: empty input");
    if (static_cast<long>(edges.size()) != m)
        throw std::invalid_argument("edge list: header promised " + std::to_string(m) +
                                    " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need fields 'n' and 'edges'");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j.at("n").get<int>(), std::move(edges));
}

// Accepts either format; JSON is recognized by a leading '{'.
inline Graph read_graph(std::istream& in) {
    // Peek past whitespace.
    int ch;
    while ((ch = in.peek()) != EOF && (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'))
        in.get();
    if (ch == '{') {
        nlohmann::json j;
        in >> j;
        return graph_from_json(j);
    }
    return parse_edge_list(in);
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

inline nlohmann::json coloring_to_json(const Graph& g, const ViColoring& c,
                                       std::optional<int> k = std::nullopt) {
    nlohmann::json j;
    if (k) j["k"] = *k;
    j["vertex_colors"] = c.vertex_colors;
    j["incidence_colors"] = nlohmann::json::array();
    ElementIndex ix(g);
    for (int i = 0; i < ix.incidence_count(); ++i) {
        const Incidence& inc = ix.all_incidences()[i];
        j["incidence_colors"].push_back(
            {{"v", inc.vertex}, {"u", inc.other}, {"color", c.incidence_colors[i]}});
    }
    return j;
}

struct LoadedColoring {
    ViColoring coloring;
    std::optional<int> k;  // advertised palette size, when the file carries one
};

inline LoadedColoring coloring_from_json(const Graph& g, const nlohmann::json& j) {
    if (!j.contains("vertex_colors") || !j.contains("incidence_colors"))
        throw std::invalid_argument("coloring json: need 'vertex_colors' and 'incidence_colors'");
    LoadedColoring out;
    out.coloring = make_unset_coloring(g);
    const auto& vc = j.at("vertex_colors");
    if (static_cast<int>(vc.size()) != g.n)
        throw std::invalid_argument("coloring json: vertex_colors length != n");
    for (int v = 0; v < g.n; ++v) out.coloring.vertex_colors[v] = vc[v].get<int>();
    ElementIndex ix(g);
    std::vector<char> seen(ix.incidence_count(), 0);
    for (const auto& rec : j.at("incidence_colors")) {
        Incidence inc{rec.at("v").get<int>(), rec.at("u").get<int>()};
        int id = ix.id_of(inc) - ix.vertex_count();
        if (seen[id])
            throw std::invalid_argument("coloring json: duplicate incidence entry " +
                                        to_string(ElementId::inc(inc)));
        seen[id] = 1;
        out.coloring.incidence_colors[id] = rec.at("color").get<int>();
    }
    if (j.contains("k")) out.k = j.at("k").get<int>();
    return out;
}

inline LoadedColoring read_coloring_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coloring file: " + path);
    nlohmann::json j;
    in >> j;
    return coloring_from_json(g, j);
}

inline std::string graph_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.n; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

// Incidence graph of g: one box node per incidence, labeled "(v,u)".
inline std::string incidence_graph_dot(const Graph& g, const std::string& name = "I") {
    ElementIndex ix(g);
    Graph ig = incidence_graph(g);
    std::ostringstream out;
    out << "graph " << name << " {\n  node [shape=box];\n";
    for (int i = 0; i < ig.n; ++i) {
        const Incidence& inc = ix.all_incidences()[i];
        out << "  i" << i << " [label=\"(" << inc.vertex << "," << inc.other << ")\"];\n";
    }
    for (auto [a, b] : ig.edges) out << "  i" << a << " -- i" << b << ";\n";
    out << "}\n";
    return out.str();
}

// Cube of the 3-subdivision, original vertices as ellipses, incidence
// carriers as boxes.
inline std::string three_thirds_dot(const Graph& g, const std::string& name = "T") {
    ThreeThirdsPower t = three_thirds_power(g);
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < t.graph.n; ++v) {
        const ElementId& e = t.element_of[v];
        if (e.is_vertex())
            out << "  e" << v << " [label=\"" << e.vertex << "\"];\n";
        else
            out << "  e" << v << " [shape=box, label=\"(" << e.vertex << "," << e.other
                << ")\"];\n";
    }
    for (auto [a, b] : t.graph.edges) out << "  e" << a << " -- e" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace vic

#endif  // VIC_IO_HPP
