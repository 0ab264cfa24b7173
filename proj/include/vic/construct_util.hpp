#ifndef VIC_CONSTRUCT_UTIL_HPP
#define VIC_CONSTRUCT_UTIL_HPP

// Shared machinery for the constructive colorers: a mutable partial
// assignment over the element relation with spread-cap bookkeeping, a
// deterministic local completion search, and helpers for carrying colorings
// across vertex maps and palette permutations.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vic/checker.hpp"
#include "vic/elements.hpp"
#include "vic/graph.hpp"

namespace vic {

// Partial coloring of one graph's elements under a fixed palette and an
// optional spread cap. Legality is always computed from the element relation
// itself, never from per-case exclusion lists, so every construction step
// shares one notion of "allowed".
class PartialColoring {
  public:
    PartialColoring(const Graph& g, int palette, std::optional<int> spread_cap = std::nullopt)
        : g_(&g),
          ix_(g),
          adj_(element_graph(g, ix_).adj),
          colors_(ix_.size(), 0),
          palette_(palette),
          spread_cap_(spread_cap),
          entering_(g.n) {
        if (palette < 1) throw std::invalid_argument("partial coloring: palette must be positive");
    }

    const Graph& graph() const { return *g_; }
    const ElementIndex& index() const { return ix_; }
    int palette() const { return palette_; }

    int color(const ElementId& e) const { return colors_[ix_.id_of(e)]; }
    bool is_set(const ElementId& e) const { return color(e) != 0; }

    void set(const ElementId& e, int c) {
        int id = ix_.id_of(e);
        if (colors_[id] != 0) throw std::logic_error("partial coloring: slot already set");
        if (c < 1 || c > palette_) throw std::invalid_argument("partial coloring: color out of range");
        colors_[id] = c;
        if (!e.is_vertex()) entering_[e.other][c]++;
    }

    void unset(const ElementId& e) {
        int id = ix_.id_of(e);
        int c = colors_[id];
        if (c == 0) return;
        colors_[id] = 0;
        if (!e.is_vertex()) {
            auto& counts = entering_[e.other];
            if (--counts[c] == 0) counts.erase(c);
        }
    }

    // Replace the color of a slot, set or not.
    void reset(const ElementId& e, int c) {
        unset(e);
        set(e, c);
    }

    // Whether an unset slot could take color c. Re-testing a slot that is
    // already set requires unsetting it first.
    bool legal(const ElementId& e, int c) const {
        if (c < 1 || c > palette_) return false;
        int id = ix_.id_of(e);
        for (int nb : adj_[id])
            if (colors_[nb] == c) return false;
        if (spread_cap_ && !e.is_vertex()) {
            const auto& counts = entering_[e.other];
            if (!counts.count(c) && static_cast<int>(counts.size()) >= *spread_cap_)
                return false;
        }
        return true;
    }

    // Smallest color legal on the slot, or 0 when none fits.
    int smallest_legal(const ElementId& e) const {
        for (int c = 1; c <= palette_; ++c)
            if (legal(e, c)) return c;
        return 0;
    }

    bool assign_smallest(const ElementId& e) {
        int c = smallest_legal(e);
        if (c == 0) return false;
        set(e, c);
        return true;
    }

    // One shared color placed on every listed slot (used for entering pairs
    // that a spread-1 target forces to coincide). Slots are set one at a
    // time, so mutual conflicts between them are caught too.
    bool assign_joint(const std::vector<ElementId>& slots) {
        for (int c = 1; c <= palette_; ++c) {
            size_t placed = 0;
            for (const auto& e : slots) {
                if (!legal(e, c)) break;
                set(e, c);
                placed++;
            }
            if (placed == slots.size()) return true;
            for (size_t i = 0; i < placed; ++i) unset(slots[i]);
        }
        return false;
    }

    // Copy every colored element of `sub` into this graph through the vertex
    // map to_host[sub vertex] = host vertex. Unset sub slots are skipped.
    void adopt(const Graph& sub, const ViColoring& sub_coloring, const std::vector<int>& to_host) {
        ElementIndex sub_ix(sub);
        for (int v = 0; v < sub.n; ++v) {
            int c = sub_coloring.vertex_colors[v];
            if (c != 0) set(ElementId::vert(to_host[v]), c);
        }
        for (const auto& i : sub_ix.all_incidences()) {
            int c = color_of(sub_coloring, sub_ix, ElementId::inc(i));
            if (c != 0) set(ElementId::inc(to_host[i.vertex], to_host[i.other]), c);
        }
    }

    bool complete() const {
        return std::find(colors_.begin(), colors_.end(), 0) == colors_.end();
    }

    std::vector<ElementId> unset_elements() const {
        std::vector<ElementId> out;
        for (int id = 0; id < ix_.size(); ++id)
            if (colors_[id] == 0) out.push_back(ix_.element(id));
        return out;
    }

    ViColoring finish() const {
        if (!complete()) throw std::logic_error("partial coloring: incomplete at finish");
        ViColoring c = make_unset_coloring(*g_);
        for (int id = 0; id < ix_.size(); ++id) set_color(c, ix_, ix_.element(id), colors_[id]);
        return c;
    }

    // Deterministic exhaustive completion of exactly the listed slots, colors
    // ascending, slots in the given order. Any prior colors on them are
    // cleared first; on failure the prior state is restored.
    bool local_complete(const std::vector<ElementId>& slots) {
        std::vector<int> saved(slots.size());
        for (size_t i = 0; i < slots.size(); ++i) {
            saved[i] = color(slots[i]);
            unset(slots[i]);
        }
        if (fill_from(slots, 0)) return true;
        for (size_t i = 0; i < slots.size(); ++i)
            if (saved[i] != 0) set(slots[i], saved[i]);
        return false;
    }

  private:
    bool fill_from(const std::vector<ElementId>& slots, size_t pos) {
        if (pos == slots.size()) return true;
        for (int c = 1; c <= palette_; ++c) {
            if (!legal(slots[pos], c)) continue;
            set(slots[pos], c);
            if (fill_from(slots, pos + 1)) return true;
            unset(slots[pos]);
        }
        return false;
    }

    const Graph* g_;
    ElementIndex ix_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> colors_;  // by element id, 0 = unset
    int palette_;
    std::optional<int> spread_cap_;
    std::vector<std::map<int, int>> entering_;  // per target vertex: color -> count
};

// Write a coloring of `from` into `out` (a coloring of `to`) through
// map[from vertex] = to vertex. Every edge of `from` must map onto an edge
// of `to`; slots of `to` outside the image are left alone.
inline void transfer_into(ViColoring& out, const Graph& to, const ElementIndex& to_ix,
                          const Graph& from, const ViColoring& coloring,
                          const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != from.n)
        throw std::invalid_argument("transfer: map size mismatch");
    (void)to;
    ElementIndex from_ix(from);
    for (int v = 0; v < from.n; ++v)
        out.vertex_colors[map[v]] = coloring.vertex_colors[v];
    for (const auto& i : from_ix.all_incidences()) {
        int c = color_of(coloring, from_ix, ElementId::inc(i));
        set_color(out, to_ix, ElementId::inc(map[i.vertex], map[i.other]), c);
    }
}

// Push a complete coloring of `from` onto `to` through map[from vertex] = to
// vertex; elements of `to` outside the image keep color 0.
inline ViColoring transfer_coloring(const Graph& from, const ViColoring& coloring,
                                    const Graph& to, const std::vector<int>& map) {
    ElementIndex to_ix(to);
    ViColoring out = make_unset_coloring(to);
    transfer_into(out, to, to_ix, from, coloring, map);
    return out;
}

// Renumber every color through perm[old] = new; perm is 1-based in both
// coordinates and must cover all colors present.
inline ViColoring apply_palette_map(const ViColoring& c, const std::vector<int>& perm) {
    auto mapped = [&](int x) {
        if (x == 0) return 0;
        if (x >= static_cast<int>(perm.size()) || perm[x] == 0)
            throw std::invalid_argument("palette map: color not covered");
        return perm[x];
    };
    ViColoring out = c;
    for (int& x : out.vertex_colors) x = mapped(x);
    for (int& x : out.incidence_colors) x = mapped(x);
    return out;
}

// Distinct colors entering v under c (the spread set at v).
inline std::vector<int> entering_colors(const Graph& g, const ElementIndex& ix,
                                        const ViColoring& c, int v) {
    std::vector<int> out;
    for (int u : g.neighbors(v)) out.push_back(color_of(c, ix, ElementId::inc(u, v)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace vic

#endif  // VIC_CONSTRUCT_UTIL_HPP
