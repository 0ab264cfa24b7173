#ifndef VIC_CONSTRUCT_BASIC_HPP
#define VIC_CONSTRUCT_BASIC_HPP

// Closed-form colorers for the elementary families: paths, cycles, forests,
// complete graphs, and the greedy that covers k-degenerated graphs. Each
// produces a coloring matching the family's known optimum (or proven bound)
// directly, without search, except where noted.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vic/checker.hpp"
#include "vic/construct_util.hpp"
#include "vic/elements.hpp"
#include "vic/exact.hpp"
#include "vic/fixtures.hpp"
#include "vic/generators.hpp"
#include "vic/graph.hpp"

namespace vic {

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: need at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph: need at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

// Four colors, spread 1, on the path with vertices 0..n-1 in order. The
// entering color at vertex i cycles with period four and the vertex color
// takes the one value its three surrounding entering colors leave free.
inline ViColoring color_path(int n) {
    Graph g = path_graph(n);
    ViColoring c = make_unset_coloring(g);
    if (n == 1) {
        c.vertex_colors[0] = 1;
        return c;
    }
    ElementIndex ix(g);
    auto entering = [](int i) { return i % 4 + 1; };
    for (int i = 0; i < n; ++i) c.vertex_colors[i] = (i + 2) % 4 + 1;
    for (int i = 0; i + 1 < n; ++i) {
        set_color(c, ix, ElementId::inc(i, i + 1), entering(i + 1));
        set_color(c, ix, ElementId::inc(i + 1, i), entering(i));
    }
    return c;
}

namespace detail {

// Color the 3n cyclically arranged elements of a cycle (vertex i at position
// 3i, its two edge incidences at 3i+1 and 3i+2) from a sequence that keeps
// any four consecutive positions distinct.
inline ViColoring cycle_coloring_from_positions(int n, const std::vector<int>& seq) {
    Graph g = cycle_graph(n);
    ElementIndex ix(g);
    ViColoring c = make_unset_coloring(g);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        c.vertex_colors[i] = seq[3 * i];
        set_color(c, ix, ElementId::inc(i, j), seq[3 * i + 1]);
        set_color(c, ix, ElementId::inc(j, i), seq[3 * i + 2]);
    }
    return c;
}

// Spread-1 cycle coloring in five colors for n not divisible by four, n >= 5.
// Encode vertex i as the state (entering color of i-1, entering color of i,
// vertex color of i) and walk the cyclic transition relation; the start state
// can be fixed up to renaming colors.
inline std::optional<ViColoring> cycle_spread1_five(int n) {
    struct State {
        int prev_in, in, at;
    };
    std::vector<State> states;
    std::vector<std::vector<int>> id(6, std::vector<int>(6 * 6, -1));
    for (int p = 1; p <= 5; ++p)
        for (int s = 1; s <= 5; ++s)
            for (int t = 1; t <= 5; ++t) {
                if (p == s || t == p || t == s) continue;
                id[p][s * 6 + t] = static_cast<int>(states.size());
                states.push_back({p, s, t});
            }
    auto can_follow = [&](const State& a, const State& b) {
        return b.prev_in == a.in && b.in != a.prev_in && b.in != a.in && a.at != b.in &&
               b.at != a.at;
    };
    int start = id[1][2 * 6 + 4];  // entering(prev)=1, entering(here)=2, vertex=4
    int m = static_cast<int>(states.size());
    std::vector<std::vector<char>> reach(n, std::vector<char>(m, 0));
    reach[0][start] = 1;
    for (int step = 1; step < n; ++step)
        for (int s = 0; s < m; ++s) {
            if (!reach[step - 1][s]) continue;
            for (int t = 0; t < m; ++t)
                if (can_follow(states[s], states[t])) reach[step][t] = 1;
        }
    int last = -1;
    for (int s = 0; s < m; ++s)
        if (reach[n - 1][s] && can_follow(states[s], states[start])) {
            last = s;
            break;
        }
    if (last < 0) return std::nullopt;
    std::vector<int> chosen(n);
    chosen[n - 1] = last;
    for (int step = n - 2; step >= 1; --step)
        for (int s = 0; s < m; ++s)
            if (reach[step][s] && can_follow(states[s], states[chosen[step + 1]])) {
                chosen[step] = s;
                break;
            }
    chosen[0] = start;

    Graph g = cycle_graph(n);
    ElementIndex ix(g);
    ViColoring c = make_unset_coloring(g);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        c.vertex_colors[i] = states[chosen[i]].at;
        set_color(c, ix, ElementId::inc(i, j), states[chosen[j]].in);
        set_color(c, ix, ElementId::inc(j, i), states[chosen[i]].in);
    }
    return c;
}

}  // namespace detail

// Cycle colorer hitting the exact optimum for the requested spread cap:
// four colors when the element count 3n wraps evenly, five otherwise, except
// that a triangle at spread 1 needs six.
inline ViColoring color_cycle(int n, int spread) {
    if (n < 3) throw std::invalid_argument("cycle colorer: need at least three vertices");
    if (spread != 1 && spread != 2)
        throw std::invalid_argument("cycle colorer: spread cap must be 1 or 2");
    if (n % 4 == 0) {
        std::vector<int> seq(3 * n);
        for (int p = 0; p < 3 * n; ++p) seq[p] = p % 4 + 1;
        return detail::cycle_coloring_from_positions(n, seq);
    }
    if (spread == 2) {
        // Blocks of 1..4 and 1..5 laid around the 3n positions; any window of
        // four consecutive positions stays distinct across the seams.
        int r = (3 * n) % 4, q = (3 * n) / 4;
        std::vector<int> seq;
        for (int b = 0; b < q - r; ++b)
            for (int x = 1; x <= 4; ++x) seq.push_back(x);
        for (int b = 0; b < r; ++b)
            for (int x = 1; x <= 5; ++x) seq.push_back(x);
        return detail::cycle_coloring_from_positions(n, seq);
    }
    if (n == 3) {
        // A spread-1 triangle forces its three entering colors and three
        // vertex colors into six distinct values.
        return fixture_named("triangle_spread1").coloring;
    }
    auto five = detail::cycle_spread1_five(n);
    if (!five) throw std::logic_error("cycle colorer: five-color walk not closed");
    return *five;
}

// Forests at spread 1: one entering color per vertex, assigned down a BFS
// tree so that sibling entering colors stay distinct and clear of the two
// colors in use at the parent.
inline ViColoring color_forest(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("forest colorer: graph has a cycle");
    int delta = g.max_degree();
    int palette = delta == 0 ? 1 : delta == 1 ? 4 : delta + 2;
    ElementIndex ix(g);
    ViColoring c = make_unset_coloring(g);
    std::vector<int> entering(g.n, 0), parent(g.n, -1);
    std::vector<char> seen(g.n, 0);
    for (int root = 0; root < g.n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        if (g.degree(root) == 0) {
            c.vertex_colors[root] = 1;
            continue;
        }
        entering[root] = 1;
        c.vertex_colors[root] = 2;
        std::vector<int> queue{root};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            int up = parent[u] >= 0 ? entering[parent[u]] : 0;
            int next = 1;
            for (int x : g.neighbors(u)) {
                if (x == parent[u]) continue;
                seen[x] = 1;
                parent[x] = u;
                while (next == entering[u] || next == up || next == c.vertex_colors[u])
                    next++;
                if (next > palette) throw std::logic_error("forest colorer: palette overrun");
                entering[x] = next++;
                set_color(c, ix, ElementId::inc(u, x), entering[x]);
                set_color(c, ix, ElementId::inc(x, u), entering[u]);
                for (int t = 1; t <= palette; ++t)
                    if (t != entering[x] && t != entering[u] && t != c.vertex_colors[u]) {
                        c.vertex_colors[x] = t;
                        break;
                    }
                queue.push_back(x);
            }
        }
    }
    return c;
}

// Complete graphs at the exact optimum n+2: vertex i takes color i, and the
// incidence at i toward x takes x+1 or x-1 (mod n+2) depending on which side
// of i the far end sits. Entering colors at any vertex then use at most two
// values, and all clashes cancel arithmetically.
inline ViColoring color_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete colorer: need at least two vertices");
    Graph g = complete_graph(n);
    ElementIndex ix(g);
    ViColoring c = make_unset_coloring(g);
    int mod = n + 2;
    for (int i = 0; i < n; ++i) c.vertex_colors[i] = i + 1;
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < n; ++x) {
            if (x == i) continue;
            int raw = x > i ? (x + 1) % mod : (x - 1 + mod) % mod;
            set_color(c, ix, ElementId::inc(i, x), raw + 1);
        }
    if (!verify(g, c, n + 2).valid) {
        if (n > 6) throw std::logic_error("complete colorer: rotation scheme failed");
        auto exact = chi_vi(g);
        if (!exact.witness || exact.value != n + 2)
            throw std::logic_error("complete colorer: fallback failed");
        return *exact.witness;
    }
    return c;
}

namespace detail {

// One greedy pass for the degeneracy colorer. The spread cap inside the
// partial coloring is what forces color reuse once a vertex has k distinct
// entering colors; restarts vary the neighbor order and color preference.
inline bool degenerate_pass(const Graph& g, const std::vector<int>& add_order, int palette,
                            int cap, SplitMix64* shuffle, ViColoring& out) {
    PartialColoring pc(g, palette, cap);
    std::vector<int> pref(palette);
    for (int t = 0; t < palette; ++t) pref[t] = t + 1;
    if (shuffle)
        for (size_t i = pref.size(); i > 1; --i)
            std::swap(pref[i - 1], pref[shuffle->below(i)]);
    std::vector<char> placed(g.n, 0);
    for (int v : add_order) {
        std::vector<int> back;
        for (int b : g.neighbors(v))
            if (placed[b]) back.push_back(b);
        if (shuffle)
            for (size_t i = back.size(); i > 1; --i)
                std::swap(back[i - 1], back[shuffle->below(i)]);
        std::vector<ElementId> step;
        for (int b : back) step.push_back(ElementId::inc(v, b));
        for (int b : back) step.push_back(ElementId::inc(b, v));
        step.push_back(ElementId::vert(v));
        bool ok = true;
        for (const auto& e : step) {
            int pick = 0;
            for (int t : pref)
                if (pc.legal(e, t)) {
                    pick = t;
                    break;
                }
            if (pick == 0) {
                ok = false;
                break;
            }
            pc.set(e, pick);
        }
        if (!ok && !pc.local_complete(step)) return false;
        placed[v] = 1;
    }
    out = pc.finish();
    return true;
}

}  // namespace detail

// Greedy for k-degenerated graphs: at most max_degree + 2k colors with
// spread at most k, coloring vertices in reverse elimination order so each
// arrival touches at most k finished neighbors. The spread cap itself steers
// color reuse; rare dead ends fall to a local exhaustive completion and then
// to reshuffled restarts.
inline ViColoring color_degenerate(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("degeneracy colorer: cap must be positive");
    if (g.max_degree() < 2)
        throw std::invalid_argument("degeneracy colorer: needs max degree at least 2");
    auto [degeneracy, order] = degeneracy_order(g);
    if (degeneracy > k)
        throw std::invalid_argument("degeneracy colorer: graph is not " + std::to_string(k) +
                                    "-degenerated");
    std::vector<int> add_order(order.rbegin(), order.rend());
    int palette = g.max_degree() + 2 * k;
    ViColoring out;
    if (detail::degenerate_pass(g, add_order, palette, k, nullptr, out)) return out;
    for (int attempt = 1; attempt <= 32; ++attempt) {
        SplitMix64 rng(0x5eedbeef00ull + attempt);
        if (detail::degenerate_pass(g, add_order, palette, k, &rng, out)) return out;
    }
    throw std::logic_error("degeneracy colorer: all restart attempts failed");
}

}  // namespace vic

#endif  // VIC_CONSTRUCT_BASIC_HPP
