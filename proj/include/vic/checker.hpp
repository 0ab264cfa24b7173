#ifndef VIC_CHECKER_HPP
#define VIC_CHECKER_HPP

// Independent validity checking for element colorings. The checker builds the
// element adjacency relation straight from the input graph and walks every
// adjacent pair, so it shares no code with the solvers or constructions it
// audits.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vic/elements.hpp"
#include "vic/graph.hpp"

namespace vic {

// Total assignment of colors 1..k to all elements. Incidence colors follow
// the canonical order of incidences(g).
struct ViColoring {
    std::vector<int> vertex_colors;
    std::vector<int> incidence_colors;
};

inline ViColoring make_unset_coloring(const Graph& g) {
    return {std::vector<int>(g.n, 0), std::vector<int>(2 * g.edge_count(), 0)};
}

inline int color_of(const ViColoring& c, const ElementIndex& ix, const ElementId& e) {
    int id = ix.id_of(e);
    if (id < ix.vertex_count()) return c.vertex_colors[id];
    return c.incidence_colors[id - ix.vertex_count()];
}

inline void set_color(ViColoring& c, const ElementIndex& ix, const ElementId& e, int color) {
    int id = ix.id_of(e);
    if (id < ix.vertex_count()) c.vertex_colors[id] = color;
    else c.incidence_colors[id - ix.vertex_count()] = color;
}

inline int max_color(const ViColoring& c) {
    int k = 0;
    for (int x : c.vertex_colors) k = std::max(k, x);
    for (int x : c.incidence_colors) k = std::max(k, x);
    return k;
}

struct Violation {
    ElementId a;
    ElementId b;
    std::string reason;  // adjacent-tt | adjacent-ii | incident-ti
};

struct CheckReport {
    bool valid = false;
    std::vector<Violation> violations;
    std::vector<int> spread;            // per vertex, |colors on incidences toward it|
    std::vector<int> spread_over_cap;   // vertices whose spread exceeds the cap
    int colors_used = 0;
};

// Number of distinct colors on the incidences pointing toward v.
inline int spread_at(const Graph& g, const ElementIndex& ix, const ViColoring& c, int v) {
    std::set<int> seen;
    for (int u : g.neighbors(v)) seen.insert(color_of(c, ix, ElementId::inc(u, v)));
    return static_cast<int>(seen.size());
}

// Exhaustive check of c against g: every adjacent element pair is compared,
// every clash reported. Colors must be total and within 1..k.
inline CheckReport verify(const Graph& g, const ViColoring& c, int k,
                          std::optional<int> spread_cap = std::nullopt) {
    ElementIndex ix(g);
    if (static_cast<int>(c.vertex_colors.size()) != g.n ||
        static_cast<int>(c.incidence_colors.size()) != ix.incidence_count())
        throw std::invalid_argument("verify: coloring shape does not match the graph");
    for (int x : c.vertex_colors)
        if (x < 1 || x > k) throw std::invalid_argument("verify: partial or out-of-range vertex color");
    for (int x : c.incidence_colors)
        if (x < 1 || x > k) throw std::invalid_argument("verify: partial or out-of-range incidence color");

    CheckReport report;
    report.colors_used = max_color(c);
    Graph eg = element_graph(g, ix);
    auto color_by_id = [&](int id) {
        return id < g.n ? c.vertex_colors[id] : c.incidence_colors[id - g.n];
    };
    for (auto [a, b] : eg.edges) {
        if (color_by_id(a) != color_by_id(b)) continue;
        Violation viol;
        viol.a = ix.element(a);
        viol.b = ix.element(b);
        bool av = a < g.n, bv = b < g.n;
        if (av && bv) viol.reason = "adjacent-tt";
        else if (!av && !bv) viol.reason = "adjacent-ii";
        else viol.reason = "incident-ti";
        report.violations.push_back(std::move(viol));
    }
    report.spread.resize(g.n, 0);
    for (int v = 0; v < g.n; ++v) report.spread[v] = spread_at(g, ix, c, v);
    if (spread_cap) {
        for (int v = 0; v < g.n; ++v)
            if (report.spread[v] > *spread_cap) report.spread_over_cap.push_back(v);
    }
    report.valid = report.violations.empty() && report.spread_over_cap.empty();
    return report;
}

// No element coloring can beat this: an edgeless graph needs one color, and
// otherwise the elements around a maximum-degree vertex contain a clique of
// size max_degree + 2.
inline int lower_bound(const Graph& g) {
    if (g.edge_count() == 0) return 1;
    return g.max_degree() + 2;
}

enum class SpreadLemmaResult { Holds, Violated, NotApplicable };

// For colorings with exactly max_degree + 2 colors, the spread at each vertex
// v is forced down to max_degree - deg(v) + 1. Checks that bound everywhere.
inline SpreadLemmaResult verify_spread_lemma(const Graph& g, const ViColoring& c, int k) {
    int delta = g.max_degree();
    if (g.edge_count() == 0 || k != delta + 2) return SpreadLemmaResult::NotApplicable;
    ElementIndex ix(g);
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == 0) continue;
        if (spread_at(g, ix, c, v) > delta - g.degree(v) + 1)
            return SpreadLemmaResult::Violated;
    }
    return SpreadLemmaResult::Holds;
}

}  // namespace vic

#endif  // VIC_CHECKER_HPP
