#ifndef VIC_CANONICAL_HPP
#define VIC_CANONICAL_HPP

// Canonical labeling for small graphs by color refinement plus
// individualization backtracking: refine a vertex coloring to equitability,
// branch on the first non-singleton class, and keep the lexicographically
// smallest adjacency certificate over all discrete leaves. Adequate for the
// desk-scale graphs this project enumerates and matches.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vic/graph.hpp"

namespace vic {

struct CanonicalForm {
    int n = 0;
    std::string bits;       // upper-triangle adjacency in canonical order
    std::vector<int> perm;  // original vertex -> canonical position
};

namespace detail {

// One pass of signature-based refinement until stable. Color values are
// renumbered densely by sorted signature, so the result is label-independent.
inline void refine_colors(const Graph& g, std::vector<int>& color) {
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            for (int u : g.neighbors(v)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<int> order(g.n);
        for (int v = 0; v < g.n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a].first < sig[b].first; });
        std::vector<int> next(g.n, 0);
        int classes = 0;
        for (int i = 0; i < g.n; ++i) {
            if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) classes++;
            next[order[i]] = classes;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

inline std::string certificate_for(const Graph& g, const std::vector<int>& pos_of) {
    std::vector<int> at(g.n);
    for (int v = 0; v < g.n; ++v) at[pos_of[v]] = v;
    std::string bits;
    bits.reserve(static_cast<size_t>(g.n) * (g.n - 1) / 2);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) bits.push_back(g.has_edge(at[i], at[j]) ? '1' : '0');
    return bits;
}

inline void canon_search(const Graph& g, std::vector<int> color, std::string& best_bits,
                         std::vector<int>& best_perm, bool& have_best) {
    refine_colors(g, color);
    int branch_class = -1;
    for (int c = 0; c < g.n; ++c) {
        int count = 0;
        for (int v = 0; v < g.n; ++v)
            if (color[v] == c) count++;
        if (count >= 2) {
            branch_class = c;
            break;
        }
        if (count == 0) break;
    }
    if (branch_class < 0) {
        // Discrete: color IS the canonical position.
        std::string bits = certificate_for(g, color);
        if (!have_best || bits < best_bits) {
            best_bits = std::move(bits);
            best_perm = color;
            have_best = true;
        }
        return;
    }
    for (int v = 0; v < g.n; ++v) {
        if (color[v] != branch_class) continue;
        std::vector<int> split(g.n);
        for (int u = 0; u < g.n; ++u) split[u] = 2 * color[u] + 1;
        split[v] = 2 * branch_class;  // individualize v ahead of its class
        canon_search(g, std::move(split), best_bits, best_perm, have_best);
    }
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    CanonicalForm out;
    out.n = g.n;
    if (g.n == 0) return out;
    std::string best_bits;
    std::vector<int> best_perm;
    bool have_best = false;
    detail::canon_search(g, std::vector<int>(g.n, 0), best_bits, best_perm, have_best);
    out.bits = std::move(best_bits);
    out.perm = std::move(best_perm);
    return out;
}

// Compact text key for map-based deduplication.
inline std::string canonical_key(const Graph& g) {
    CanonicalForm f = canonical_form(g);
    return std::to_string(f.n) + ":" + f.bits;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).bits == canonical_form(b).bits;
}

// Vertex map a -> b realizing an isomorphism, when one exists.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
    CanonicalForm fa = canonical_form(a), fb = canonical_form(b);
    if (fa.bits != fb.bits) return std::nullopt;
    std::vector<int> b_at(b.n);
    for (int v = 0; v < b.n; ++v) b_at[fb.perm[v]] = v;
    std::vector<int> map(a.n);
    for (int v = 0; v < a.n; ++v) map[v] = b_at[fa.perm[v]];
    for (auto [u, v] : a.edges)
        if (!b.has_edge(map[u], map[v]))
            throw std::logic_error("find_isomorphism: certificate collision");
    return map;
}

}  // namespace vic

#endif  // VIC_CANONICAL_HPP
