#ifndef VIC_TESTS_ORACLES_HPP
#define VIC_TESTS_ORACLES_HPP

// Independent reference implementations used only by tests. Everything here
// is written as directly as possible from first principles — slow and
// obviously correct — so library results can be checked against them.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vic/canonical.hpp"
#include "vic/elements.hpp"
#include "vic/generators.hpp"
#include "vic/graph.hpp"

namespace oracles {

// Rule-by-rule transliteration of the element adjacency relation.
inline bool elements_adjacent(const vic::Graph& g, const vic::ElementId& a,
                              const vic::ElementId& b) {
    using vic::ElementId;
    auto is_edge = [&](int u, int v) { return g.has_edge(u, v); };
    if (a.is_vertex() && b.is_vertex()) return is_edge(a.vertex, b.vertex);
    if (!a.is_vertex() && !b.is_vertex()) {
        // incidences (v, e={v,u}) and (w, f={w,x}) adjacent iff
        // (1) v == w, (2) e == f, (3) {v,w} equals e or f.
        int v = a.vertex, u = a.other, w = b.vertex, x = b.other;
        if (v == w) return true;
        bool same_edge = (std::minmax(v, u) == std::minmax(w, x));
        if (same_edge) return true;
        // {v,w} as a set equals {v,u} iff w == u; equals {w,x} iff v == x.
        if (w == u || v == x) return true;
        return false;
    }
    const vic::ElementId& t = a.is_vertex() ? a : b;
    const vic::ElementId& i = a.is_vertex() ? b : a;
    return t.vertex == i.vertex || t.vertex == i.other;
}

// Girth by deleting each edge and measuring the shortest replacement path.
inline std::optional<int> girth(const vic::Graph& g) {
    std::optional<int> best;
    for (auto [u, v] : g.edges) {
        vic::Graph h = vic::without_edge(g, u, v);
        auto dist = vic::bfs_distances(h, u);
        if (dist[v] < 0) continue;
        int len = dist[v] + 1;
        if (!best || len < *best) best = len;
    }
    return best;
}

// Plain chromatic number by naive backtracking (vertices in id order).
inline int chromatic_number(const vic::Graph& g) {
    if (g.n == 0) return 0;
    std::vector<int> color(g.n, 0);
    auto fits = [&](int v, int c) {
        for (int u : g.neighbors(v))
            if (color[u] == c) return false;
        return true;
    };
    std::function<bool(int, int)> go = [&](int v, int k) -> bool {
        if (v == g.n) return true;
        for (int c = 1; c <= k; ++c) {
            if (!fits(v, c)) continue;
            color[v] = c;
            if (go(v + 1, k)) return true;
            color[v] = 0;
        }
        return false;
    };
    for (int k = 1;; ++k) {
        std::fill(color.begin(), color.end(), 0);
        if (go(0, k)) return k;
    }
}

// Contract edge {u,v}: v merges into u, loops dropped, parallels collapsed.
inline vic::Graph contract_edge(const vic::Graph& g, int u, int v) {
    std::vector<int> to(g.n);
    int next = 0;
    for (int w = 0; w < g.n; ++w) to[w] = (w == v) ? -1 : next++;
    to[v] = to[u];
    std::set<std::pair<int, int>> es;
    for (auto [a, b] : g.edges) {
        int x = to[a], y = to[b];
        if (x == y) continue;
        es.insert({std::min(x, y), std::max(x, y)});
    }
    return vic::Graph(g.n - 1, std::vector<std::pair<int, int>>(es.begin(), es.end()));
}

inline bool has_k4_subgraph(const vic::Graph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                for (int d = c + 1; d < g.n; ++d)
                    if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d)) return true;
            }
        }
    return false;
}

inline bool has_k23_subgraph(const vic::Graph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            // Count common neighbors of a and b other than each other.
            int common = 0;
            for (int w = 0; w < g.n; ++w)
                if (w != a && w != b && g.has_edge(a, w) && g.has_edge(b, w)) common++;
            if (common >= 3) return true;
        }
    return false;
}

// Minor testing by repeated edge contraction with a subgraph check at every
// node, memoized on canonical form. Complete because G has an H minor exactly
// when H is a subgraph of some contraction of G — edge/vertex deletions are
// absorbed by testing containment rather than equality.
inline bool has_minor(const vic::Graph& g, bool (*subgraph_check)(const vic::Graph&),
                      int pattern_order, std::map<std::string, bool>& memo) {
    if (g.n < pattern_order) return false;
    std::string key = vic::canonical_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool found = subgraph_check(g);
    if (!found)
        for (auto [u, v] : g.edges) {
            if (has_minor(contract_edge(g, u, v), subgraph_check, pattern_order, memo)) {
                found = true;
                break;
            }
        }
    memo[key] = found;
    return found;
}

inline bool is_outerplanar(const vic::Graph& g) {
    static std::map<std::string, bool> memo_k4, memo_k23;
    if (has_minor(g, has_k4_subgraph, 4, memo_k4)) return false;
    if (has_minor(g, has_k23_subgraph, 5, memo_k23)) return false;
    return true;
}

// Random simple graph: each pair kept with probability percent/100.
inline vic::Graph random_graph(int n, int percent, vic::SplitMix64& rng) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(percent, 100)) es.emplace_back(u, v);
    return vic::Graph(n, std::move(es));
}

inline std::vector<int> random_permutation(int n, vic::SplitMix64& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[static_cast<size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    return perm;
}

inline vic::Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return vic::Graph(n, std::move(es));
}

inline vic::Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return vic::Graph(n, std::move(es));
}

inline vic::Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return vic::Graph(n, std::move(es));
}

inline vic::Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return vic::Graph(a + b, std::move(es));
}

}  // namespace oracles

#endif  // VIC_TESTS_ORACLES_HPP
