#ifndef VIC_TRANSFORMS_HPP
#define VIC_TRANSFORMS_HPP

// Graph transforms: edge subdivision, graph powers, and their composition
// that turns element coloring questions into plain vertex coloring questions.

#include <stdexcept>
#include <utility>
#include <vector>

#include "vic/elements.hpp"
#include "vic/graph.hpp"

namespace vic {

// Replace every edge by a path with `parts` segments (parts-1 new internal
// vertices). Originals keep their ids; edge j (canonical order, u < v) gets
// internals n + (parts-1)*j + s for s = 0.., laid out from the u side to the
// v side.
inline Graph subdivide(const Graph& g, int parts) {
    if (parts < 1) throw std::invalid_argument("subdivide: parts must be >= 1");
    if (parts == 1) return g;
    int per = parts - 1;
    int m = g.edge_count();
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(m) * parts);
    for (int j = 0; j < m; ++j) {
        auto [u, v] = g.edges[j];
        int prev = u;
        for (int s = 0; s < per; ++s) {
            int mid = g.n + per * j + s;
            es.emplace_back(prev, mid);
            prev = mid;
        }
        es.emplace_back(prev, v);
    }
    return Graph(g.n + per * m, std::move(es));
}

// p-th power: join vertices at distance 1..p.
inline Graph power(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("power: exponent must be >= 1");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < g.n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = v + 1; u < g.n; ++u)
            if (dist[u] > 0 && dist[u] <= p) es.emplace_back(v, u);
    }
    return Graph(g.n, std::move(es));
}

// Result vertex carrying element e of the base graph: vertices map to
// themselves; incidence (a,b) of edge j maps to n+2j (a < b) or n+2j+1.
inline int three_thirds_vertex(const Graph& g, const ElementId& e) {
    if (e.is_vertex()) return e.vertex;
    int j = g.edge_index(e.vertex, e.other);
    if (j < 0) throw std::invalid_argument("three_thirds_vertex: incidence of a non-edge");
    return g.n + 2 * j + (e.vertex < e.other ? 0 : 1);
}

struct ThreeThirdsPower {
    Graph graph;
    std::vector<ElementId> element_of;  // per result vertex, the base element it carries
};

// Cube of the 3-subdivision. Its vertices are exactly the elements of g, and
// its edges are exactly the pairs of elements that may not share a color.
inline ThreeThirdsPower three_thirds_power(const Graph& g) {
    ThreeThirdsPower out;
    out.graph = power(subdivide(g, 3), 3);
    out.element_of.resize(out.graph.n, ElementId::vert(0));
    for (int v = 0; v < g.n; ++v) out.element_of[v] = ElementId::vert(v);
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [u, v] = g.edges[j];
        out.element_of[g.n + 2 * j] = ElementId::inc(u, v);
        out.element_of[g.n + 2 * j + 1] = ElementId::inc(v, u);
    }
    return out;
}

}  // namespace vic

#endif  // VIC_TRANSFORMS_HPP
