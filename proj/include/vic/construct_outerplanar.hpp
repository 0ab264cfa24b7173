#ifndef VIC_CONSTRUCT_OUTERPLANAR_HPP
#define VIC_CONSTRUCT_OUTERPLANAR_HPP

// Constructive coloring of outerplanar graphs within max_degree + 3 colors
// at spread <= 2 (six colors when the maximum degree is three). Two engines:
// an end-face induction for subcubic graphs, and a vertex-removal induction
// for higher degrees that bottoms out in the degeneracy greedy. Every
// induction step recolors only the elements it introduces and re-verifies
// them through the shared legality machinery.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vic/checker.hpp"
#include "vic/compose.hpp"
#include "vic/construct_basic.hpp"
#include "vic/construct_util.hpp"
#include "vic/fixtures.hpp"
#include "vic/graph.hpp"
#include "vic/outerplanar.hpp"

namespace vic {

struct NotOuterplanar : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A finished construction together with its palette and the reduction trace
// (one line per induction step, for the CLI's --explain).
struct ConstructRun {
    ViColoring coloring;
    int palette = 0;
    std::vector<std::string> trace;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

// --- shared extension steps -------------------------------------------------
//
// Each extension adopts the child's coloring into a partial coloring of the
// parent and fills the handful of new element slots. Preferred assignments
// are tried first; if anything is unavailable the step falls back to an
// exhaustive completion over its own slots (optionally widening to a few
// recolorable neighbors), never touching the rest of the graph.

// New vertex v attached to u by one edge.
inline bool extend_pendant(PartialColoring& pc, int u, int v) {
    std::vector<ElementId> slots{ElementId::inc(u, v), ElementId::inc(v, u),
                                 ElementId::vert(v)};
    bool ok = true;
    for (const auto& e : slots)
        if (!pc.assign_smallest(e)) {
            ok = false;
            break;
        }
    return ok || pc.local_complete(slots);
}

// New 2-vertex v whose neighbors u, w are adjacent in the parent. The two
// incidences leaving v copy the colors crossing the edge {u,w}, which keeps
// every spread unchanged.
inline bool extend_triangulated(PartialColoring& pc, int v, int u, int w) {
    std::vector<ElementId> slots{ElementId::inc(v, u), ElementId::inc(v, w),
                                 ElementId::inc(u, v), ElementId::inc(w, v),
                                 ElementId::vert(v)};
    std::vector<std::pair<ElementId, int>> forced{
        {slots[0], pc.color(ElementId::inc(w, u))},
        {slots[1], pc.color(ElementId::inc(u, w))}};
    bool ok = true;
    for (const auto& [e, c] : forced) {
        if (!pc.legal(e, c)) {
            ok = false;
            break;
        }
        pc.set(e, c);
    }
    for (size_t i = 2; i < slots.size() && ok; ++i) ok = pc.assign_smallest(slots[i]);
    if (ok) return true;
    for (const auto& e : slots) pc.unset(e);
    if (pc.local_complete(slots)) return true;
    // Last resort: allow the incidences of {u,w} to move as well.
    std::vector<ElementId> wider = slots;
    wider.push_back(ElementId::inc(u, w));
    wider.push_back(ElementId::inc(w, u));
    return pc.local_complete(wider);
}

// New adjacent 2-vertices u (other neighbor x) and v (other neighbor y).
inline bool extend_adjacent_pair(PartialColoring& pc, int u, int x, int v, int y) {
    std::vector<ElementId> slots{ElementId::inc(u, x), ElementId::inc(v, y),
                                 ElementId::inc(x, u), ElementId::inc(y, v),
                                 ElementId::inc(u, v), ElementId::inc(v, u),
                                 ElementId::vert(u),   ElementId::vert(v)};
    bool ok = true;
    for (const auto& e : slots)
        if (!pc.assign_smallest(e)) {
            ok = false;
            break;
        }
    if (ok) return true;
    for (const auto& e : slots) pc.unset(e);
    return pc.local_complete(slots);
}

// New path x - b1 - b2 - y across an end face whose closing edge {x,y}
// remains in the parent. The preferred assignment reuses the four colors
// already sitting on that closing edge, crossed over the square.
inline bool extend_quad(PartialColoring& pc, int x, int b1, int b2, int y) {
    std::vector<ElementId> slots{ElementId::inc(b1, x), ElementId::inc(b2, y),
                                 ElementId::vert(b1),   ElementId::vert(b2),
                                 ElementId::inc(b1, b2), ElementId::inc(b2, b1),
                                 ElementId::inc(x, b1),  ElementId::inc(y, b2)};
    int from_y = pc.color(ElementId::inc(y, x));
    int from_x = pc.color(ElementId::inc(x, y));
    int at_x = pc.color(ElementId::vert(x));
    int at_y = pc.color(ElementId::vert(y));
    std::vector<std::pair<ElementId, int>> forced{
        {slots[0], from_y}, {slots[1], from_x}, {slots[2], from_x}, {slots[3], from_y},
        {slots[4], at_x},   {slots[5], at_y}};
    bool ok = true;
    for (const auto& [e, c] : forced) {
        if (!pc.legal(e, c)) {
            ok = false;
            break;
        }
        pc.set(e, c);
    }
    if (ok) ok = pc.assign_smallest(slots[6]) && pc.assign_smallest(slots[7]);
    if (ok) return true;
    for (const auto& e : slots) pc.unset(e);
    if (pc.local_complete(slots)) return true;
    std::vector<ElementId> wider = slots;
    wider.push_back(ElementId::inc(x, y));
    wider.push_back(ElementId::inc(y, x));
    return pc.local_complete(wider);
}

// --- component plumbing ------------------------------------------------------

// Color one path or cycle component of the host in place. `order` walks the
// component along its edges.
inline void write_degree2_component(ViColoring& out, const Graph& g, const ElementIndex& ix,
                                    const std::vector<int>& order, bool closed, int spread) {
    int len = static_cast<int>(order.size());
    if (len == 1) {
        out.vertex_colors[order[0]] = 1;
        return;
    }
    ViColoring part = closed ? color_cycle(len, spread) : color_path(len);
    Graph shape = closed ? cycle_graph(len) : path_graph(len);
    transfer_into(out, g, ix, shape, part, order);
}

// Walk a component where every vertex has degree <= 2 into a path or cycle
// order starting from an endpoint (or the smallest vertex on a cycle).
inline std::pair<std::vector<int>, bool> trace_degree2_component(const Graph& g, int start,
                                                                 std::vector<char>& seen) {
    std::vector<int> comp{start};
    seen[start] = 1;
    for (size_t head = 0; head < comp.size(); ++head)
        for (int x : g.neighbors(comp[head]))
            if (!seen[x]) {
                seen[x] = 1;
                comp.push_back(x);
            }
    bool closed = true;
    int first = comp[0];
    for (int v : comp)
        if (g.degree(v) < 2) {
            closed = false;
            first = g.degree(v) <= 0 ? v : std::min(first, v);
        }
    if (comp.size() == 1) return {comp, false};
    if (!closed) {
        first = -1;
        for (int v : comp)
            if (g.degree(v) == 1 && (first < 0 || v < first)) first = v;
    }
    std::vector<int> order{first};
    int prev = -1, cur = first;
    while (static_cast<int>(order.size()) < static_cast<int>(comp.size())) {
        int next = -1;
        for (int x : g.neighbors(cur))
            if (x != prev) {
                next = x;
                break;
            }
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    return {order, closed};
}

// Spread-2 coloring for graphs of maximum degree <= 2 (disjoint paths,
// cycles, isolated vertices), at most five colors.
inline ViColoring color_degree2(const Graph& g, int spread) {
    ElementIndex ix(g);
    ViColoring out = make_unset_coloring(g);
    std::vector<char> seen(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (seen[v]) continue;
        auto [order, closed] = trace_degree2_component(g, v, seen);
        write_degree2_component(out, g, ix, order, closed, spread);
    }
    return out;
}

// --- subcubic engine ---------------------------------------------------------

inline ViColoring subcubic_connected(const Graph& g, std::vector<std::string>& trace);

inline ViColoring subcubic_two_connected(const Graph& g, std::vector<std::string>& trace) {
    if (auto hit = fixture_match(g); hit && hit->fixture->colors <= 6 && hit->fixture->spread <= 2) {
        trace.push_back("base: fixture " + hit->fixture->name);
        return hit->coloring;
    }
    auto emb = embed_biconnected(g);
    if (!emb) throw NotOuterplanar("outerplanar colorer: block has no outerplanar embedding");
    if (emb->chords.empty()) {
        trace.push_back("base: chordless cycle of length " + std::to_string(g.n));
        return color_degree2(g, 2);
    }
    EndFace face = end_faces(*emb, g)[0];
    const auto& b = face.boundary;
    if (face.degree == 3) {
        int x = b[0], mid = b[1], y = b[2];
        trace.push_back("triangle face [" + join_ints(b) + "]: remove " + std::to_string(mid));
        std::vector<int> keep;
        for (int w = 0; w < g.n; ++w)
            if (w != mid) keep.push_back(w);
        auto [child, map] = induced_subgraph(g, keep);
        ViColoring sub = subcubic_connected(child, trace);
        PartialColoring pc(g, 6, 2);
        pc.adopt(child, sub, map);
        if (!extend_triangulated(pc, mid, x, y))
            throw std::logic_error("outerplanar colorer: triangle extension failed");
        return pc.finish();
    }
    if (face.degree == 4) {
        int x = b[0], b1 = b[1], b2 = b[2], y = b[3];
        trace.push_back("quad face [" + join_ints(b) + "]: remove " + std::to_string(b1) +
                        "," + std::to_string(b2));
        std::vector<int> keep;
        for (int w = 0; w < g.n; ++w)
            if (w != b1 && w != b2) keep.push_back(w);
        auto [child, map] = induced_subgraph(g, keep);
        ViColoring sub = subcubic_connected(child, trace);
        PartialColoring pc(g, 6, 2);
        pc.adopt(child, sub, map);
        if (!extend_quad(pc, x, b1, b2, y))
            throw std::logic_error("outerplanar colorer: quad extension failed");
        return pc.finish();
    }
    // Long face: close a triangle over the second boundary vertex with a
    // temporary chord, solve, then forget the chord's colors.
    int p = b[1], mid = b[2], q = b[3];
    trace.push_back("long face [" + join_ints(b) + "]: chord {" + std::to_string(p) + "," +
                    std::to_string(q) + "}, remove " + std::to_string(mid));
    Graph with_chord = with_edge(g, p, q);
    std::vector<int> keep;
    for (int w = 0; w < g.n; ++w)
        if (w != mid) keep.push_back(w);
    auto [child, map] = induced_subgraph(with_chord, keep);
    ViColoring sub = subcubic_connected(child, trace);
    PartialColoring pc(with_chord, 6, 2);
    pc.adopt(child, sub, map);
    if (!extend_triangulated(pc, mid, p, q))
        throw std::logic_error("outerplanar colorer: long-face extension failed");
    ViColoring full = pc.finish();
    ElementIndex gx(g);
    ViColoring out = make_unset_coloring(g);
    ElementIndex wx(with_chord);
    for (int v = 0; v < g.n; ++v) out.vertex_colors[v] = full.vertex_colors[v];
    for (const auto& i : gx.all_incidences())
        set_color(out, gx, ElementId::inc(i), color_of(full, wx, ElementId::inc(i)));
    return out;
}

inline ViColoring subcubic_connected(const Graph& g, std::vector<std::string>& trace) {
    if (g.edge_count() == 0) {
        ViColoring out = make_unset_coloring(g);
        for (int v = 0; v < g.n; ++v) out.vertex_colors[v] = 1;
        return out;
    }
    if (is_forest(g)) {
        trace.push_back("base: tree on " + std::to_string(g.n) + " vertices");
        return color_forest(g);
    }
    if (g.max_degree() <= 2) {
        trace.push_back("base: cycle of length " + std::to_string(g.n));
        return color_degree2(g, 2);
    }
    // Peel pendant vertices before looking at the 2-connected core.
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 1) continue;
        int u = g.neighbors(v)[0];
        trace.push_back("pendant " + std::to_string(v) + " at " + std::to_string(u));
        std::vector<int> keep;
        for (int w = 0; w < g.n; ++w)
            if (w != v) keep.push_back(w);
        auto [child, map] = induced_subgraph(g, keep);
        ViColoring sub = subcubic_connected(child, trace);
        PartialColoring pc(g, 6, 2);
        pc.adopt(child, sub, map);
        if (!extend_pendant(pc, u, v))
            throw std::logic_error("outerplanar colorer: pendant extension failed");
        return pc.finish();
    }
    if (is_biconnected(g)) return subcubic_two_connected(g, trace);
    // Minimum degree 2 but not 2-connected: a subcubic cut vertex always has
    // a bridge, and with no pendants both bridge sides carry edges.
    auto decomposition = blocks(g);
    if (decomposition.cut_edges.empty())
        throw std::logic_error("outerplanar colorer: expected a bridge in subcubic graph");
    auto e = decomposition.cut_edges[0];
    trace.push_back("bridge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}");
    auto [side_u, side_v] = split_at_cut_edge(g, e);
    ViColoring cu = subcubic_connected(side_u.graph, trace);
    ViColoring cv = subcubic_connected(side_v.graph, trace);
    return compose_cut_edge(g, e, ColoredPiece{side_u.graph, cu, side_u.to_host},
                            ColoredPiece{side_v.graph, cv, side_v.to_host});
}

// --- higher-degree engine ----------------------------------------------------

// Remove structural reductions until the maximum degree falls to three, then
// hand over to the degeneracy greedy; palette stays at the original
// max_degree + 3 throughout.
inline ViColoring reduce_high_degree(const Graph& g, int palette,
                                     std::vector<std::string>& trace) {
    if (g.max_degree() <= 2) {
        trace.push_back("base: paths and cycles");
        return color_degree2(g, 2);
    }
    if (g.max_degree() == 3) {
        trace.push_back("base: degeneracy greedy at max degree 3");
        return color_degenerate(g, 2);
    }
    ReductionCase rc = find_reduction(g);
    auto remove_and_recurse = [&](const std::vector<int>& gone) {
        std::vector<int> keep;
        for (int w = 0; w < g.n; ++w)
            if (std::find(gone.begin(), gone.end(), w) == gone.end()) keep.push_back(w);
        auto [child, map] = induced_subgraph(g, keep);
        ViColoring sub = reduce_high_degree(child, palette, trace);
        PartialColoring pc(g, palette, 2);
        pc.adopt(child, sub, map);
        return pc;
    };
    switch (rc.kind) {
        case ReductionCase::Kind::PendantVertex: {
            if (g.degree(rc.v) == 0) {
                auto pc = remove_and_recurse({rc.v});
                pc.set(ElementId::vert(rc.v), 1);
                return pc.finish();
            }
            int u = g.neighbors(rc.v)[0];
            trace.push_back("pendant " + std::to_string(rc.v) + " at " + std::to_string(u));
            auto pc = remove_and_recurse({rc.v});
            if (!extend_pendant(pc, u, rc.v))
                throw std::logic_error("outerplanar colorer: pendant extension failed");
            return pc.finish();
        }
        case ReductionCase::Kind::AdjacentTwoVertices: {
            int u = rc.v, v = rc.u;
            int x = -1, y = -1;
            for (int t : g.neighbors(u))
                if (t != v) x = t;
            for (int t : g.neighbors(v))
                if (t != u) y = t;
            trace.push_back("adjacent 2-vertices " + std::to_string(u) + "," +
                            std::to_string(v));
            auto pc = remove_and_recurse({u, v});
            if (!extend_adjacent_pair(pc, u, x, v, y))
                throw std::logic_error("outerplanar colorer: pair extension failed");
            return pc.finish();
        }
        case ReductionCase::Kind::TriangulatedTwoVertex: {
            trace.push_back("triangulated 2-vertex " + std::to_string(rc.v));
            auto pc = remove_and_recurse({rc.v});
            if (!extend_triangulated(pc, rc.v, rc.u, rc.w))
                throw std::logic_error("outerplanar colorer: triangulated extension failed");
            return pc.finish();
        }
    }
    throw std::logic_error("outerplanar colorer: unreachable");
}

}  // namespace detail

// Spread-2 coloring of an outerplanar graph: max_degree + 3 colors in
// general, six when the maximum degree is three, five and below for degrees
// two and less.
inline ConstructRun run_color_outerplanar(const Graph& g) {
    if (!is_outerplanar(g)) throw NotOuterplanar("outerplanar colorer: graph is not outerplanar");
    ConstructRun run;
    int delta = g.max_degree();
    if (delta == 0) {
        run.trace.push_back("edgeless: one color");
        run.coloring = make_unset_coloring(g);
        for (int v = 0; v < g.n; ++v) run.coloring.vertex_colors[v] = 1;
        run.palette = g.n > 0 ? 1 : 0;
        return run;
    }
    if (delta == 1) {
        run.trace.push_back("matching: forest colorer");
        run.coloring = color_forest(g);
        run.palette = 4;
        return run;
    }
    if (delta == 2) {
        run.trace.push_back("paths and cycles");
        run.coloring = detail::color_degree2(g, 2);
        run.palette = std::max(4, max_color(run.coloring));
        return run;
    }
    if (delta == 3) {
        ElementIndex ix(g);
        ViColoring out = make_unset_coloring(g);
        std::vector<char> seen(g.n, 0);
        for (int v = 0; v < g.n; ++v) {
            if (seen[v]) continue;
            std::vector<int> comp{v};
            seen[v] = 1;
            for (size_t head = 0; head < comp.size(); ++head)
                for (int x : g.neighbors(comp[head]))
                    if (!seen[x]) {
                        seen[x] = 1;
                        comp.push_back(x);
                    }
            std::sort(comp.begin(), comp.end());
            auto [sub, map] = induced_subgraph(g, comp);
            ViColoring part = detail::subcubic_connected(sub, run.trace);
            transfer_into(out, g, ix, sub, part, map);
        }
        run.coloring = out;
        run.palette = 6;
        return run;
    }
    run.palette = delta + 3;
    run.coloring = detail::reduce_high_degree(g, run.palette, run.trace);
    return run;
}

inline ViColoring color_outerplanar(const Graph& g) { return run_color_outerplanar(g).coloring; }

}  // namespace vic

#endif  // VIC_CONSTRUCT_OUTERPLANAR_HPP
