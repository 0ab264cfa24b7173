#ifndef VIC_FORBIDDEN_HPP
#define VIC_FORBIDDEN_HPP

// Four small subcubic obstructions, each of which rules out a five-color
// vi-simultaneous coloring of any host that contains it degree-respectingly.
// "Degree-respecting" is the load-bearing part: the underlying argument pins
// the spread at the obstruction's degree-3 vertices, which only works when
// those vertices keep degree exactly 3 in the host. Plain containment would
// overclaim, so the matcher enforces host degree == 3 at every pattern vertex
// of degree 3 (lower-degree pattern vertices may land anywhere).

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vic/graph.hpp"

namespace vic {

enum class ForbiddenPattern { Diamond, Net, TailedHouse, TailedTriPent };

inline const char* pattern_name(ForbiddenPattern p) {
    switch (p) {
        case ForbiddenPattern::Diamond: return "diamond";
        case ForbiddenPattern::Net: return "net";
        case ForbiddenPattern::TailedHouse: return "tailed-house";
        case ForbiddenPattern::TailedTriPent: return "tailed-tripent";
    }
    throw std::invalid_argument("pattern_name: unknown pattern");
}

// One located copy of an obstruction inside a host graph.
struct ForbiddenEmbedding {
    ForbiddenPattern pattern;
    std::vector<int> mapping;  // pattern vertex -> host vertex
};

// The obstruction graphs, indexed by ForbiddenPattern order.
inline const std::vector<Graph>& forbidden_patterns() {
    static const std::vector<Graph> table = {
        // diamond: two triangles sharing edge {0,1}.
        Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}}),
        // net: triangle 0-1-2 with a pendant vertex at each corner.
        Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}),
        // tailed house: square 0-1-4-3 and triangle 0-1-2 sharing edge {0,1},
        // plus a pendant 5 on the square corner 4.
        Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {3, 4}, {4, 5}}),
        // tailed tri-pent: pentagon 0-3-5-4-1 and triangle 0-1-2 sharing edge
        // {0,1}, plus pendants 6 and 7 on the pentagon corners 3 and 4.
        Graph(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {4, 5}, {3, 5}, {3, 6}, {4, 7}}),
    };
    return table;
}

inline const Graph& pattern_graph(ForbiddenPattern p) {
    return forbidden_patterns().at(static_cast<std::size_t>(p));
}

// Checks the embedding invariants: injective into the host, every pattern
// edge on a host edge, host degree exactly 3 under every degree-3 pattern
// vertex.
inline bool embedding_ok(const Graph& host, const ForbiddenEmbedding& e) {
    const Graph& pat = pattern_graph(e.pattern);
    if (static_cast<int>(e.mapping.size()) != pat.n) return false;
    std::vector<char> hit(host.n, 0);
    for (int h : e.mapping) {
        if (h < 0 || h >= host.n || hit[h]) return false;
        hit[h] = 1;
    }
    for (auto [u, v] : pat.edges)
        if (!host.has_edge(e.mapping[u], e.mapping[v])) return false;
    for (int v = 0; v < pat.n; ++v)
        if (pat.degree(v) == 3 && host.degree(e.mapping[v]) != 3) return false;
    return true;
}

namespace detail {

// Visit order for the matcher: a highest-degree vertex first, then always a
// vertex with the most already-placed neighbors. Keeps every later placement
// anchored to an existing one, so bad branches die on the edge checks.
inline std::vector<int> match_order(const Graph& pat) {
    std::vector<int> order;
    std::vector<char> placed(pat.n, 0);
    int start = 0;
    for (int v = 1; v < pat.n; ++v)
        if (pat.degree(v) > pat.degree(start)) start = v;
    order.push_back(start);
    placed[start] = 1;
    while (static_cast<int>(order.size()) < pat.n) {
        int best = -1, best_touch = -1;
        for (int v = 0; v < pat.n; ++v) {
            if (placed[v]) continue;
            int touch = 0;
            for (int w : pat.neighbors(v)) touch += placed[w];
            if (best == -1 || touch > best_touch ||
                (touch == best_touch && pat.degree(v) > pat.degree(best))) {
                best = v;
                best_touch = touch;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
    return order;
}

// Backtracking extension. `emit` sees each complete mapping and returns true
// to stop the whole search (first-hit mode).
template <typename Emit>
inline bool extend_match(const Graph& pat, const Graph& host, const std::vector<int>& order,
                         std::size_t pos, std::vector<int>& map, std::vector<char>& used,
                         const std::vector<int>& all_hosts, Emit&& emit) {
    if (pos == order.size()) return emit(map);
    int p = order[pos];
    int dp = pat.degree(p);
    int anchor = -1;
    for (int q : pat.neighbors(p))
        if (map[q] != -1) {
            anchor = q;
            break;
        }
    const std::vector<int>& cands = anchor == -1 ? all_hosts : host.neighbors(map[anchor]);
    for (int h : cands) {
        if (used[h]) continue;
        int dh = host.degree(h);
        if (dp == 3 ? dh != 3 : dh < dp) continue;
        bool edges_ok = true;
        for (int q : pat.neighbors(p))
            if (map[q] != -1 && !host.has_edge(map[q], h)) {
                edges_ok = false;
                break;
            }
        if (!edges_ok) continue;
        map[p] = h;
        used[h] = 1;
        if (extend_match(pat, host, order, pos + 1, map, used, all_hosts, emit)) return true;
        map[p] = -1;
        used[h] = 0;
    }
    return false;
}

template <typename Emit>
inline void match_pattern(ForbiddenPattern which, const Graph& host, Emit&& emit) {
    const Graph& pat = pattern_graph(which);
    if (host.n < pat.n || host.edge_count() < pat.edge_count()) return;
    int need3 = 0, have3 = 0;
    for (int v = 0; v < pat.n; ++v) need3 += pat.degree(v) == 3;
    for (int v = 0; v < host.n; ++v) have3 += host.degree(v) == 3;
    if (have3 < need3) return;
    std::vector<int> order = match_order(pat);
    std::vector<int> map(pat.n, -1);
    std::vector<char> used(host.n, 0);
    std::vector<int> all_hosts(host.n);
    for (int v = 0; v < host.n; ++v) all_hosts[v] = v;
    extend_match(pat, host, order, 0, map, used, all_hosts, emit);
}

}  // namespace detail

// Every degree-respecting embedding of every obstruction, in pattern order.
// Never throws: an empty list simply means no certificate, whatever the host
// looks like (the patterns all carry degree-3 vertices, so hosts without any
// degree-3 vertex trivially come back empty).
inline std::vector<ForbiddenEmbedding> detect_forbidden(const Graph& g) {
    std::vector<ForbiddenEmbedding> out;
    for (ForbiddenPattern p : {ForbiddenPattern::Diamond, ForbiddenPattern::Net,
                               ForbiddenPattern::TailedHouse, ForbiddenPattern::TailedTriPent})
        detail::match_pattern(p, g, [&](const std::vector<int>& map) {
            out.push_back({p, map});
            return false;
        });
    return out;
}

// First embedding found, if any; cheaper than detect_forbidden when one
// certificate is enough.
inline std::optional<ForbiddenEmbedding> first_forbidden(const Graph& g) {
    std::optional<ForbiddenEmbedding> out;
    for (ForbiddenPattern p : {ForbiddenPattern::Diamond, ForbiddenPattern::Net,
                               ForbiddenPattern::TailedHouse, ForbiddenPattern::TailedTriPent}) {
        detail::match_pattern(p, g, [&](const std::vector<int>& map) {
            out = ForbiddenEmbedding{p, map};
            return true;
        });
        if (out) break;
    }
    return out;
}

}  // namespace vic

#endif  // VIC_FORBIDDEN_HPP
