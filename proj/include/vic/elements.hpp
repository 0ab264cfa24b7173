#ifndef VIC_ELEMENTS_HPP
#define VIC_ELEMENTS_HPP

// Elements of a graph: its vertices plus its incidences. An incidence is a
// (vertex, edge) pair, stored as (vertex, other endpoint). Two elements are
// adjacent when they must receive different colors:
//   vertex u  ~ vertex v   iff {u,v} is an edge
//   vertex v  ~ (x, e)     iff v is an endpoint of e
//   (v, {v,u}) ~ (w, {w,x}) iff v == w, or u == w, or x == v
// ElementIndex freezes a canonical numbering: vertices 0..n-1 first, then the
// incidences sorted by (vertex, other).

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "vic/graph.hpp"

namespace vic {

struct Incidence {
    int vertex = 0;  // the endpoint this incidence sits at
    int other = 0;   // the far endpoint of the edge

    friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

struct ElementId {
    enum class Kind { Vertex, Inc };
    Kind kind = Kind::Vertex;
    int vertex = 0;  // vertex id, or Incidence::vertex
    int other = 0;   // unused for vertices; Incidence::other otherwise

    static ElementId vert(int v) { return {Kind::Vertex, v, 0}; }
    static ElementId inc(int v, int u) { return {Kind::Inc, v, u}; }
    static ElementId inc(Incidence i) { return {Kind::Inc, i.vertex, i.other}; }

    bool is_vertex() const { return kind == Kind::Vertex; }

    friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

inline std::string to_string(const ElementId& e) {
    if (e.is_vertex()) return "v" + std::to_string(e.vertex);
    return "(" + std::to_string(e.vertex) + "," + std::to_string(e.other) + ")";
}

// All incidences of g in canonical order: (0, n0_0), (0, n0_1), ..., (1, ...).
inline std::vector<Incidence> incidences(const Graph& g) {
    std::vector<Incidence> out;
    out.reserve(2 * g.edges.size());
    for (int v = 0; v < g.n; ++v)
        for (int u : g.neighbors(v)) out.push_back({v, u});
    return out;
}

// Incidences sitting at v, i.e. (v, u) for each neighbor u.
inline std::vector<Incidence> incidences_at(const Graph& g, int v) {
    std::vector<Incidence> out;
    for (int u : g.neighbors(v)) out.push_back({v, u});
    return out;
}

// Incidences pointing toward v from its neighbors, i.e. (u, v).
inline std::vector<Incidence> incidences_toward(const Graph& g, int v) {
    std::vector<Incidence> out;
    for (int u : g.neighbors(v)) out.push_back({u, v});
    return out;
}

inline bool elements_adjacent(const Graph& g, const ElementId& a, const ElementId& b) {
    if (a.is_vertex() && b.is_vertex()) return g.has_edge(a.vertex, b.vertex);
    if (a.is_vertex() && !b.is_vertex())
        return a.vertex == b.vertex || a.vertex == b.other;
    if (!a.is_vertex() && b.is_vertex())
        return b.vertex == a.vertex || b.vertex == a.other;
    // (v,u) ~ (w,x): shared holder, or one sits at the far end of the other.
    return a.vertex == b.vertex || a.other == b.vertex || b.other == a.vertex;
}

// Canonical numbering of elements: ids 0..n-1 are vertices, n.. are incidences
// in the order produced by incidences().
class ElementIndex {
  public:
    explicit ElementIndex(const Graph& g) : n_(g.n), incs_(incidences(g)) {
        first_at_.assign(g.n + 1, 0);
        for (int v = 0; v < g.n; ++v)
            first_at_[v + 1] = first_at_[v] + g.degree(v);
    }

    int size() const { return n_ + static_cast<int>(incs_.size()); }
    int vertex_count() const { return n_; }
    int incidence_count() const { return static_cast<int>(incs_.size()); }

    const std::vector<Incidence>& all_incidences() const { return incs_; }

    int id_of_vertex(int v) const { return v; }

    int id_of(const Incidence& i) const {
        int base = first_at_[i.vertex];
        int end = first_at_[i.vertex + 1];
        for (int k = base; k < end; ++k)
            if (incs_[k].other == i.other) return n_ + k;
        throw std::invalid_argument("element index: unknown incidence " +
                                    to_string(ElementId::inc(i)));
    }

    int id_of(const ElementId& e) const {
        if (e.is_vertex()) {
            if (e.vertex < 0 || e.vertex >= n_)
                throw std::invalid_argument("element index: unknown vertex");
            return e.vertex;
        }
        return id_of(Incidence{e.vertex, e.other});
    }

    ElementId element(int id) const {
        if (id < 0 || id >= size()) throw std::invalid_argument("element index: bad id");
        if (id < n_) return ElementId::vert(id);
        return ElementId::inc(incs_[id - n_]);
    }

  private:
    int n_;
    std::vector<Incidence> incs_;
    std::vector<int> first_at_;  // prefix offsets into incs_ per holder vertex
};

// The graph on all elements of g under the adjacency relation above, using
// ElementIndex ids. Built directly from the relation, edge by edge.
inline Graph element_graph(const Graph& g, const ElementIndex& ix) {
    std::vector<std::pair<int, int>> es;
    // vertex-vertex
    for (auto [u, v] : g.edges) es.emplace_back(u, v);
    const auto& incs = ix.all_incidences();
    for (size_t k = 0; k < incs.size(); ++k) {
        const Incidence& i = incs[k];
        int iid = ix.vertex_count() + static_cast<int>(k);
        // vertex-incidence: both endpoints of the underlying edge
        es.emplace_back(i.vertex, iid);
        es.emplace_back(i.other, iid);
        // incidence-incidence: shared holder (j later in the same bucket)
        for (size_t j = k + 1; j < incs.size() && incs[j].vertex == i.vertex; ++j)
            es.emplace_back(iid, ix.vertex_count() + static_cast<int>(j));
        // incidence-incidence: (v,u) against everything held at u
        for (int w : g.neighbors(i.other)) {
            int jid = ix.id_of(Incidence{i.other, w});
            if (iid < jid) es.emplace_back(iid, jid);
            else es.emplace_back(jid, iid);
        }
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(ix.size(), std::move(es));
}

inline Graph element_graph(const Graph& g) { return element_graph(g, ElementIndex(g)); }

// The graph on incidences alone (vertex rows dropped), ids 0..2m-1 matching
// the canonical incidence order.
inline Graph incidence_graph(const Graph& g) {
    ElementIndex ix(g);
    Graph eg = element_graph(g, ix);
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : eg.edges)
        if (a >= g.n && b >= g.n) es.emplace_back(a - g.n, b - g.n);
    return Graph(ix.incidence_count(), std::move(es));
}

}  // namespace vic

#endif  // VIC_ELEMENTS_HPP
