#ifndef VIC_GRAPH_HPP
#define VIC_GRAPH_HPP

// Simple undirected graph with contiguous 0-based vertex ids, plus the
// structural queries (components, girth, blocks, degeneracy) every other
// module consumes. Graphs are immutable values after construction.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vic {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted
    std::vector<std::vector<int>> adj;       // sorted neighbor lists

    Graph() = default;

    Graph(int n_, std::vector<std::pair<int, int>> edge_list) : n(n_) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        for (auto& [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (u == v) throw std::invalid_argument("graph: self-loop rejected");
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
            throw std::invalid_argument("graph: parallel edge rejected");
        edges = std::move(edge_list);
        adj.assign(n, {});
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
        const auto& nb = adj[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Position of edge {u,v} in the sorted edge list, -1 when absent.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges.begin());
    }

    int degree(int v) const { return static_cast<int>(adj.at(v).size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    const std::vector<int>& neighbors(int v) const { return adj.at(v); }
};

inline Graph with_edge(const Graph& g, int u, int v) {
    auto es = g.edges;
    es.emplace_back(u, v);
    return Graph(g.n, std::move(es));
}

inline Graph without_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges.size());
    for (auto e : g.edges)
        if (e != std::make_pair(u, v)) es.push_back(e);
    return Graph(g.n, std::move(es));
}

// Induced subgraph on `keep` (sorted, distinct). Second result maps new id -> old id.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                           const std::vector<int>& keep) {
    std::vector<int> old_to_new(g.n, -1);
    for (size_t i = 0; i < keep.size(); ++i) old_to_new[keep[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges)
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
            es.emplace_back(old_to_new[u], old_to_new[v]);
    return {Graph(static_cast<int>(keep.size()), std::move(es)), keep};
}

// perm[old] = new; returns the relabeled graph.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges.size());
    for (auto [u, v] : g.edges) es.emplace_back(perm[u], perm[v]);
    return Graph(g.n, std::move(es));
}

inline std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : g.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int y : g.neighbors(comp[head]))
                if (!seen[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return static_cast<int>(connected_components(g).size()) == 1;
}

// Length of a shortest cycle; nullopt for forests. Per-root BFS: every
// non-tree edge seen from the right root yields the exact minimum.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            if (best > 0 && 2 * dist[x] >= best) break;
            for (int y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;                  // vertex sets, sorted
    std::vector<std::vector<std::pair<int, int>>> block_edges;  // edges per block
    std::vector<int> cut_vertices;                         // sorted
    std::vector<std::pair<int, int>> cut_edges;            // bridges, normalized
};

// Standard lowpoint decomposition into biconnected components (an isolated
// vertex forms no block; a bridge forms a 2-vertex block).
inline BlockDecomposition blocks(const Graph& g) {
    BlockDecomposition out;
    std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    // Iterative DFS to keep deep graphs safe.
    struct Frame {
        int v;
        size_t next_child = 0;
        int children = 0;
    };
    for (int root = 0; root < g.n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.next_child < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.next_child++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    f.children++;
                    stack.push_back({w});
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        // u closes a block; pop its edges.
                        std::vector<std::pair<int, int>> bes;
                        while (!edge_stack.empty()) {
                            auto e = edge_stack.back();
                            edge_stack.pop_back();
                            bes.push_back(e);
                            if (e == std::make_pair(u, v)) break;
                        }
                        if (!bes.empty()) {
                            std::vector<int> verts;
                            for (auto& [a, b] : bes) {
                                verts.push_back(a);
                                verts.push_back(b);
                                if (a > b) std::swap(a, b);
                            }
                            std::sort(verts.begin(), verts.end());
                            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                            std::sort(bes.begin(), bes.end());
                            if (bes.size() == 1) out.cut_edges.push_back(bes[0]);
                            out.blocks.push_back(std::move(verts));
                            out.block_edges.push_back(std::move(bes));
                        }
                    }
                }
            }
        }
    }
    // A vertex is a cut vertex iff it lies in two or more blocks.
    std::vector<int> appearances(g.n, 0);
    for (const auto& b : out.blocks)
        for (int v : b) appearances[v]++;
    out.cut_vertices.clear();
    for (int v = 0; v < g.n; ++v)
        if (appearances[v] >= 2) out.cut_vertices.push_back(v);
    std::sort(out.cut_edges.begin(), out.cut_edges.end());
    return out;
}

// True for connected graphs on >= 3 vertices with no cut vertex.
inline bool is_biconnected(const Graph& g) {
    if (g.n < 3 || !is_connected(g)) return false;
    return blocks(g).cut_vertices.empty();
}

// Chordless-cycle test: connected, every degree exactly 2.
inline bool is_cycle_graph(const Graph& g) {
    if (g.n < 3 || g.edge_count() != g.n || !is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool is_forest(const Graph& g) { return !girth(g).has_value(); }

// Smallest k such that every subgraph has a vertex of degree <= k, plus a
// peel order (repeatedly delete a minimum-degree vertex; smallest id first).
inline std::pair<int, std::vector<int>> degeneracy_order(const Graph& g) {
    std::vector<int> deg(g.n);
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<int> order;
    int degeneracy = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        degeneracy = std::max(degeneracy, deg[best]);
        removed[best] = 1;
        order.push_back(best);
        for (int y : g.neighbors(best))
            if (!removed[y]) deg[y]--;
    }
    return {degeneracy, order};
}

}  // namespace vic

#endif  // VIC_GRAPH_HPP
