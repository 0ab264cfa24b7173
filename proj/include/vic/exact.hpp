#ifndef VIC_EXACT_HPP
#define VIC_EXACT_HPP

// Exact element-coloring decisions by branch and bound. The search runs on
// the element adjacency relation with saturation-guided variable order, a
// precolored clique around a maximum-degree vertex, and first-use color
// symmetry breaking. A per-vertex cap on the number of distinct colors
// entering a vertex (the spread) can be enforced during the search.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vic/checker.hpp"
#include "vic/elements.hpp"
#include "vic/graph.hpp"

namespace vic {

struct SearchConfig {
    int max_colors = 0;
    std::optional<int> spread_cap;
    std::optional<long long> node_limit;
    std::uint64_t seed = 0;  // reserved; the search itself is deterministic
};

enum class SearchStatus { Satisfiable, Exhausted, NodeLimitReached };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<ViColoring> witness;
    long long nodes = 0;
};

namespace detail {

// A coloring problem stripped to adjacency lists, optional per-element spread
// groups (elements sharing a group may use at most `spread_cap` distinct
// colors), and a precolored clique listed in color order.
struct ConflictInstance {
    std::vector<std::vector<int>> adj;
    std::vector<int> group_of;  // -1 when the element is unconstrained
    int group_count = 0;
    std::vector<int> clique;
};

struct CoreResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<int> colors;
    long long nodes = 0;
};

class DsaturSearch {
  public:
    DsaturSearch(const ConflictInstance& inst, int k, std::optional<int> spread_cap,
                 std::optional<long long> node_limit)
        : inst_(inst),
          k_(k),
          spread_cap_(spread_cap),
          node_limit_(node_limit),
          count_(static_cast<int>(inst.adj.size())) {
        color_.assign(count_, 0);
        nbr_count_.assign(static_cast<size_t>(count_) * (k_ + 1), 0);
        sat_.assign(count_, 0);
        grp_count_.assign(static_cast<size_t>(inst.group_count) * (k_ + 1), 0);
        grp_distinct_.assign(inst.group_count, 0);
    }

    CoreResult run() {
        CoreResult out;
        if (k_ < 0) throw std::invalid_argument("search: negative color budget");
        if (static_cast<int>(inst_.clique.size()) > k_) {
            out.status = SearchStatus::Exhausted;
            out.nodes = 0;
            return out;
        }
        int assigned = 0;
        for (int e : inst_.clique) {
            place(e, ++max_used_);
            assigned++;
        }
        SearchStatus status = descend(assigned);
        out.status = status;
        out.nodes = nodes_;
        if (status == SearchStatus::Satisfiable) out.colors = color_;
        return out;
    }

  private:
    int& nbr(int e, int c) { return nbr_count_[static_cast<size_t>(e) * (k_ + 1) + c]; }
    int& grp(int gidx, int c) { return grp_count_[static_cast<size_t>(gidx) * (k_ + 1) + c]; }

    void place(int e, int c) {
        color_[e] = c;
        for (int f : inst_.adj[e])
            if (++nbr(f, c) == 1) sat_[f]++;
        int gi = inst_.group_of[e];
        if (gi >= 0 && ++grp(gi, c) == 1) grp_distinct_[gi]++;
    }

    void unplace(int e) {
        int c = color_[e];
        color_[e] = 0;
        for (int f : inst_.adj[e])
            if (--nbr(f, c) == 0) sat_[f]--;
        int gi = inst_.group_of[e];
        if (gi >= 0 && --grp(gi, c) == 0) grp_distinct_[gi]--;
    }

    bool allowed(int e, int c) {
        if (nbr(e, c) > 0) return false;
        if (spread_cap_) {
            int gi = inst_.group_of[e];
            if (gi >= 0 && grp_distinct_[gi] >= *spread_cap_ && grp(gi, c) == 0) return false;
        }
        return true;
    }

    // Highest saturation, then highest degree, then smallest id.
    int pick(int assigned) {
        (void)assigned;
        int best = -1;
        for (int e = 0; e < count_; ++e) {
            if (color_[e]) continue;
            if (best < 0 || sat_[e] > sat_[best] ||
                (sat_[e] == sat_[best] && inst_.adj[e].size() > inst_.adj[best].size()))
                best = e;
        }
        return best;
    }

    SearchStatus descend(int assigned) {
        if (assigned == count_) return SearchStatus::Satisfiable;
        int e = pick(assigned);
        int limit = std::min(k_, max_used_ + 1);
        for (int c = 1; c <= limit; ++c) {
            if (!allowed(e, c)) continue;
            if (node_limit_ && nodes_ >= *node_limit_) return SearchStatus::NodeLimitReached;
            nodes_++;
            int prev_max = max_used_;
            max_used_ = std::max(max_used_, c);
            place(e, c);
            SearchStatus status = descend(assigned + 1);
            if (status != SearchStatus::Exhausted) return status;
            unplace(e);
            max_used_ = prev_max;
        }
        return SearchStatus::Exhausted;
    }

    const ConflictInstance& inst_;
    int k_;
    std::optional<int> spread_cap_;
    std::optional<long long> node_limit_;
    int count_;
    std::vector<int> color_;
    std::vector<int> nbr_count_;
    std::vector<int> sat_;
    std::vector<int> grp_count_;
    std::vector<int> grp_distinct_;
    int max_used_ = 0;
    long long nodes_ = 0;
};

// Element-coloring instance for g: the conflict graph is the element graph,
// spread groups collect the incidences entering each vertex, and the seeded
// clique is a maximum-degree vertex, its own incidences, and one incidence
// entering it.
inline ConflictInstance element_instance(const Graph& g, const ElementIndex& ix) {
    ConflictInstance inst;
    Graph eg = element_graph(g, ix);
    inst.adj = eg.adj;
    inst.group_of.assign(eg.n, -1);
    inst.group_count = g.n;
    const auto& incs = ix.all_incidences();
    for (size_t i = 0; i < incs.size(); ++i) inst.group_of[g.n + i] = incs[i].other;
    if (g.edge_count() > 0) {
        int v = 0;
        for (int x = 1; x < g.n; ++x)
            if (g.degree(x) > g.degree(v)) v = x;
        inst.clique.push_back(v);
        for (int x : g.neighbors(v)) inst.clique.push_back(ix.id_of(Incidence{v, x}));
        inst.clique.push_back(ix.id_of(Incidence{g.neighbors(v).front(), v}));
    } else if (g.n > 0) {
        inst.clique.push_back(0);
    }
    return inst;
}

}  // namespace detail

// Decides whether g has a valid element coloring with colors 1..k (and, when
// given, spread at most spread_cap at every vertex). Exhausted means a full
// search proved there is none.
inline SearchOutcome is_colorable(const Graph& g, int k,
                                  std::optional<int> spread_cap = std::nullopt,
                                  std::optional<long long> node_limit = std::nullopt) {
    if (spread_cap && *spread_cap < 1 && g.edge_count() > 0)
        throw std::invalid_argument("is_colorable: spread cap must be at least 1");
    SearchOutcome out;
    if (g.n == 0) {
        out.status = SearchStatus::Satisfiable;
        out.witness = ViColoring{};
        return out;
    }
    ElementIndex ix(g);
    detail::ConflictInstance inst = detail::element_instance(g, ix);
    detail::DsaturSearch search(inst, k, spread_cap, node_limit);
    detail::CoreResult res = search.run();
    out.status = res.status;
    out.nodes = res.nodes;
    if (res.status == SearchStatus::Satisfiable) {
        ViColoring c = make_unset_coloring(g);
        for (int v = 0; v < g.n; ++v) c.vertex_colors[v] = res.colors[v];
        for (int i = 0; i < ix.incidence_count(); ++i)
            c.incidence_colors[i] = res.colors[g.n + i];
        out.witness = std::move(c);
    }
    return out;
}

struct ExactValue {
    std::optional<int> value;  // empty when the node budget ran out first
    std::optional<ViColoring> witness;
    long long nodes = 0;
};

// Smallest k admitting a valid coloring (optionally under a spread cap),
// found by scanning upward from the clique lower bound.
inline ExactValue chi_vi(const Graph& g, std::optional<int> spread_cap = std::nullopt,
                         std::optional<long long> node_limit = std::nullopt) {
    ExactValue out;
    if (g.n == 0) {
        out.value = 0;
        out.witness = ViColoring{};
        return out;
    }
    int guard = g.n + 2 * g.edge_count() + g.max_degree() * g.max_degree() + 4;
    for (int k = lower_bound(g); k <= guard; ++k) {
        std::optional<long long> remaining;
        if (node_limit) {
            if (out.nodes >= *node_limit) return out;
            remaining = *node_limit - out.nodes;
        }
        SearchOutcome step = is_colorable(g, k, spread_cap, remaining);
        out.nodes += step.nodes;
        if (step.status == SearchStatus::Satisfiable) {
            out.value = k;
            out.witness = std::move(step.witness);
            return out;
        }
        if (step.status == SearchStatus::NodeLimitReached) return out;
    }
    throw std::logic_error("chi_vi: scan guard exceeded");
}

struct PlainValue {
    std::optional<int> value;
    std::vector<int> colors;
    long long nodes = 0;
};

// Chromatic number of an arbitrary plain graph with the same engine (no
// incidences, no spread). Used to color graph powers independently.
inline PlainValue chi_of_power(const Graph& h,
                               std::optional<long long> node_limit = std::nullopt) {
    PlainValue out;
    if (h.n == 0) {
        out.value = 0;
        return out;
    }
    detail::ConflictInstance inst;
    inst.adj = h.adj;
    inst.group_of.assign(h.n, -1);
    inst.group_count = 0;
    // Greedy clique around a maximum-degree vertex.
    int v = 0;
    for (int x = 1; x < h.n; ++x)
        if (h.degree(x) > h.degree(v)) v = x;
    inst.clique.push_back(v);
    for (int x : h.neighbors(v)) {
        bool joins = true;
        for (int c : inst.clique)
            if (c != v && !h.has_edge(c, x)) {
                joins = false;
                break;
            }
        if (joins) inst.clique.push_back(x);
    }
    int lo = static_cast<int>(inst.clique.size());
    for (int k = lo; k <= h.n; ++k) {
        std::optional<long long> remaining;
        if (node_limit) {
            if (out.nodes >= *node_limit) return out;
            remaining = *node_limit - out.nodes;
        }
        detail::DsaturSearch search(inst, k, std::nullopt, remaining);
        detail::CoreResult res = search.run();
        out.nodes += res.nodes;
        if (res.status == SearchStatus::Satisfiable) {
            out.value = k;
            out.colors = std::move(res.colors);
            return out;
        }
        if (res.status == SearchStatus::NodeLimitReached) return out;
    }
    throw std::logic_error("chi_of_power: scan guard exceeded");
}

}  // namespace vic

#endif  // VIC_EXACT_HPP
