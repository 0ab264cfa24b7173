#ifndef VIC_COMPOSE_HPP
#define VIC_COMPOSE_HPP

// Gluing colorings across cut edges and cut vertices. Each composition
// renames the colors of one side so the two sides agree on everything they
// share, then takes the union; the share is a four-element clique for a cut
// edge and a single vertex (plus its forced entering color) for a cut vertex.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vic/checker.hpp"
#include "vic/construct_util.hpp"
#include "vic/elements.hpp"
#include "vic/graph.hpp"

namespace vic {

struct SpreadViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subgraph living inside a host graph, with its vertex map.
struct GraphPiece {
    Graph graph;
    std::vector<int> to_host;
};

struct ColoredPiece {
    Graph graph;
    ViColoring coloring;
    std::vector<int> to_host;
};

namespace detail {

// Per-vertex component id, from the component list.
inline std::vector<int> component_ids(const Graph& g) {
    auto comps = connected_components(g);
    std::vector<int> id(g.n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) id[v] = static_cast<int>(c);
    return id;
}

}  // namespace detail

inline bool is_cut_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) return false;
    auto comp = detail::component_ids(without_edge(g, u, v));
    return comp[u] != comp[v];
}

// The two sides of a cut edge, each keeping the edge itself.
inline std::pair<GraphPiece, GraphPiece> split_at_cut_edge(const Graph& g,
                                                           std::pair<int, int> e) {
    auto [u, v] = e;
    if (!is_cut_edge(g, u, v))
        throw std::invalid_argument("cut edge split: edge is not a cut edge");
    auto comp = detail::component_ids(without_edge(g, u, v));
    std::vector<int> keep_u{v}, keep_v{u};
    for (int x = 0; x < g.n; ++x) {
        if (comp[x] == comp[u]) keep_u.push_back(x);
        if (comp[x] == comp[v]) keep_v.push_back(x);
    }
    std::sort(keep_u.begin(), keep_u.end());
    std::sort(keep_v.begin(), keep_v.end());
    auto [gu, mu] = induced_subgraph(g, keep_u);
    auto [gv, mv] = induced_subgraph(g, keep_v);
    return {GraphPiece{gu, mu}, GraphPiece{gv, mv}};
}

// The two sides of a cut vertex: one chosen component of g - v against all
// the others, each side keeping v.
inline std::pair<GraphPiece, GraphPiece> split_at_cut_vertex(const Graph& g, int v) {
    std::vector<int> keep_all;
    for (int x = 0; x < g.n; ++x)
        if (x != v) keep_all.push_back(x);
    auto [rest, rest_map] = induced_subgraph(g, keep_all);
    auto comp = detail::component_ids(rest);
    std::set<int> touched;
    for (int i = 0; i < rest.n; ++i)
        if (g.has_edge(rest_map[i], v)) touched.insert(comp[i]);
    if (touched.size() < 2) throw std::invalid_argument("cut vertex split: not a cut vertex");
    int first = *touched.begin();
    std::vector<int> keep_a{v}, keep_b{v};
    for (int i = 0; i < rest.n; ++i)
        (comp[i] == first ? keep_a : keep_b).push_back(rest_map[i]);
    std::sort(keep_a.begin(), keep_a.end());
    std::sort(keep_b.begin(), keep_b.end());
    auto [ga, ma] = induced_subgraph(g, keep_a);
    auto [gb, mb] = induced_subgraph(g, keep_b);
    return {GraphPiece{ga, ma}, GraphPiece{gb, mb}};
}

namespace detail {

inline int local_vertex(const ColoredPiece& p, int host_vertex) {
    for (int i = 0; i < p.graph.n; ++i)
        if (p.to_host[i] == host_vertex) return i;
    throw std::invalid_argument("compose: piece does not contain the shared vertex");
}

// Write a piece's colors into the host coloring; slots colored by both
// pieces must agree (they are exactly the shared elements).
inline void merge_piece(const ElementIndex& ix, ViColoring& out,
                        const ColoredPiece& p) {
    ElementIndex pix(p.graph);
    auto put = [&](const ElementId& host_e, int c) {
        int have = color_of(out, ix, host_e);
        if (have == 0)
            set_color(out, ix, host_e, c);
        else if (have != c)
            throw std::logic_error("compose: shared element colored twice inconsistently");
    };
    for (int x = 0; x < p.graph.n; ++x)
        put(ElementId::vert(p.to_host[x]), p.coloring.vertex_colors[x]);
    for (const auto& i : pix.all_incidences())
        put(ElementId::inc(p.to_host[i.vertex], p.to_host[i.other]),
            color_of(p.coloring, pix, ElementId::inc(i)));
}

// Grow a partial color rename into a full permutation of 1..k.
inline std::vector<int> complete_permutation(std::vector<int> perm, int k) {
    std::vector<char> used(k + 1, 0);
    for (int c = 1; c <= k; ++c)
        if (perm[c] != 0) used[perm[c]] = 1;
    int next = 1;
    for (int c = 1; c <= k; ++c) {
        if (perm[c] != 0) continue;
        while (used[next]) next++;
        perm[c] = next;
        used[next] = 1;
    }
    return perm;
}

}  // namespace detail

// Glue two colorings across the cut edge e. The four shared elements (both
// endpoints and both incidences of e) form a clique, so each side colors
// them with four distinct values; renaming one side's values onto the
// other's is always possible within max(k1, k2) colors.
inline ViColoring compose_cut_edge(const Graph& g, std::pair<int, int> e,
                                   const ColoredPiece& side_u, const ColoredPiece& side_v) {
    auto [u, v] = e;
    if (!is_cut_edge(g, u, v))
        throw std::invalid_argument("cut edge composition: edge is not a cut edge");
    // The sides must cover the host exactly, overlapping only on the edge.
    std::vector<int> cover(g.n, 0);
    for (const ColoredPiece* p : {&side_u, &side_v})
        for (int x : p->to_host) {
            if (x < 0 || x >= g.n)
                throw std::invalid_argument("cut edge composition: piece maps outside the host");
            cover[x]++;
        }
    for (int x = 0; x < g.n; ++x)
        if (cover[x] != ((x == u || x == v) ? 2 : 1))
            throw std::invalid_argument("cut edge composition: sides do not partition the host");
    if (side_u.graph.edge_count() + side_v.graph.edge_count() != g.edge_count() + 1)
        throw std::invalid_argument("cut edge composition: sides do not partition the host");
    int k1 = max_color(side_u.coloring), k2 = max_color(side_v.coloring);
    int k = std::max(k1, k2);
    if (!verify(side_u.graph, side_u.coloring, k).valid ||
        !verify(side_v.graph, side_v.coloring, k).valid)
        throw std::invalid_argument("cut edge composition: a side coloring is invalid");

    ElementIndex ix_u(side_u.graph), ix_v(side_v.graph);
    int u1 = detail::local_vertex(side_u, u), v1 = detail::local_vertex(side_u, v);
    int u2 = detail::local_vertex(side_v, u), v2 = detail::local_vertex(side_v, v);
    auto shared_colors = [&](const ColoredPiece& p, const ElementIndex& pix, int lu, int lv) {
        return std::vector<int>{p.coloring.vertex_colors[lu], p.coloring.vertex_colors[lv],
                                color_of(p.coloring, pix, ElementId::inc(lu, lv)),
                                color_of(p.coloring, pix, ElementId::inc(lv, lu))};
    };
    std::vector<int> from = shared_colors(side_v, ix_v, u2, v2);
    std::vector<int> to = shared_colors(side_u, ix_u, u1, v1);
    std::vector<int> perm(k + 1, 0);
    for (int i = 0; i < 4; ++i) {
        if (perm[from[i]] != 0 && perm[from[i]] != to[i])
            throw std::logic_error("cut edge composition: permutation not found");
        perm[from[i]] = to[i];
    }
    perm = detail::complete_permutation(std::move(perm), k);

    ColoredPiece renamed = side_v;
    renamed.coloring = apply_palette_map(side_v.coloring, perm);
    ElementIndex ix(g);
    ViColoring out = make_unset_coloring(g);
    detail::merge_piece(ix, out, side_u);
    detail::merge_piece(ix, out, renamed);
    return out;
}

// Glue two spread-1 colorings at the cut vertex v. Keeping spread 1 at v
// pins the renamed side's entering color; its outgoing colors at v move to
// values unused around v on the other side, which is exactly what
// max(k1, k2, deg(v)+2) colors leave room for.
inline ViColoring compose_cut_vertex(const Graph& g, int v, const ColoredPiece& side_a,
                                     const ColoredPiece& side_b) {
    // The sides must cover the host exactly, overlapping only on v.
    std::vector<int> cover(g.n, 0);
    for (const ColoredPiece* p : {&side_a, &side_b})
        for (int x : p->to_host) {
            if (x < 0 || x >= g.n)
                throw std::invalid_argument("cut vertex composition: piece maps outside the host");
            cover[x]++;
        }
    for (int x = 0; x < g.n; ++x)
        if (cover[x] != (x == v ? 2 : 1))
            throw std::invalid_argument("cut vertex composition: sides do not partition the host");
    if (side_a.graph.edge_count() + side_b.graph.edge_count() != g.edge_count())
        throw std::invalid_argument("cut vertex composition: sides do not partition the host");
    int k1 = max_color(side_a.coloring), k2 = max_color(side_b.coloring);
    int k = std::max({k1, k2, g.degree(v) + 2});
    for (const ColoredPiece* p : {&side_a, &side_b}) {
        auto report = verify(p->graph, p->coloring, k, 1);
        if (!report.violations.empty())
            throw std::invalid_argument("cut vertex composition: a side coloring is invalid");
        int lv = detail::local_vertex(*p, v);
        for (int w : report.spread_over_cap)
            if (w == lv)
                throw SpreadViolation("cut vertex composition: spread above 1 at the cut vertex");
        if (!report.spread_over_cap.empty())
            throw std::invalid_argument("cut vertex composition: side is not a spread-1 coloring");
        if (p->graph.degree(lv) == 0)
            throw std::invalid_argument("cut vertex composition: piece has no edge at the cut vertex");
    }

    ElementIndex ix_a(side_a.graph), ix_b(side_b.graph);
    int va = detail::local_vertex(side_a, v), vb = detail::local_vertex(side_b, v);
    int c_a = side_a.coloring.vertex_colors[va];
    int sigma_a = entering_colors(side_a.graph, ix_a, side_a.coloring, va)[0];
    int c_b = side_b.coloring.vertex_colors[vb];
    int sigma_b = entering_colors(side_b.graph, ix_b, side_b.coloring, vb)[0];

    std::vector<int> perm(k + 1, 0);
    perm[c_b] = c_a;
    if (perm[sigma_b] != 0 && perm[sigma_b] != sigma_a)
        throw std::logic_error("cut vertex composition: entering color pinned inconsistently");
    perm[sigma_b] = sigma_a;

    std::set<int> blocked{c_a, sigma_a};
    for (int x : side_a.graph.neighbors(va))
        blocked.insert(color_of(side_a.coloring, ix_a, ElementId::inc(va, x)));
    std::vector<int> outgoing_b;
    for (int x : side_b.graph.neighbors(vb))
        outgoing_b.push_back(color_of(side_b.coloring, ix_b, ElementId::inc(vb, x)));
    std::sort(outgoing_b.begin(), outgoing_b.end());
    int target = 1;
    for (int c : outgoing_b) {
        while (target <= k && blocked.count(target)) target++;
        if (target > k) throw std::logic_error("cut vertex composition: palette exhausted");
        perm[c] = target;
        blocked.insert(target);
    }
    perm = detail::complete_permutation(std::move(perm), k);

    ColoredPiece renamed = side_b;
    renamed.coloring = apply_palette_map(side_b.coloring, perm);
    ElementIndex ix(g);
    ViColoring out = make_unset_coloring(g);
    detail::merge_piece(ix, out, side_a);
    detail::merge_piece(ix, out, renamed);
    return out;
}

}  // namespace vic

#endif  // VIC_COMPOSE_HPP
