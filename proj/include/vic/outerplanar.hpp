#ifndef VIC_OUTERPLANAR_HPP
#define VIC_OUTERPLANAR_HPP

// Outerplanar recognition and structure. Recognition reduces each 2-connected
// block by repeatedly contracting a degree-2 vertex, rebuilds the claimed
// outer cycle by reverse reinsertion, and then certifies the result
// (Hamiltonian outer cycle of real edges, every edge on the cycle or a
// non-crossing chord). The certificate step is what makes the answer sound:
// contraction alone also accepts some non-outerplanar graphs.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vic/graph.hpp"

namespace vic {

struct OuterplanarEmbedding {
    // For a 2-connected graph: the outer Hamiltonian cycle. Otherwise a
    // per-block stitched order placing every vertex on the outer face.
    std::vector<int> outer_order;
    std::vector<std::pair<int, int>> chords;  // edges off the outer cycle, sorted
    std::vector<std::vector<int>> faces;      // inner faces as vertex cycles
};

namespace detail {

// Rotate a cyclic vertex sequence so the smallest vertex comes first and its
// smaller cycle-neighbor comes second.
inline std::vector<int> canonical_cycle(std::vector<int> cyc) {
    if (cyc.empty()) return cyc;
    size_t L = cyc.size();
    size_t at = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
    std::vector<int> out;
    out.reserve(L);
    if (L == 1) return cyc;
    int fwd = cyc[(at + 1) % L], bwd = cyc[(at + L - 1) % L];
    if (fwd <= bwd)
        for (size_t i = 0; i < L; ++i) out.push_back(cyc[(at + i) % L]);
    else
        for (size_t i = 0; i < L; ++i) out.push_back(cyc[(at + L - i) % L]);
    return out;
}

// Outer Hamiltonian cycle of a 2-connected candidate block (>= 3 vertices,
// ids 0..n-1), or nullopt when the block is not outerplanar.
inline std::optional<std::vector<int>> outer_cycle_of_block(const Graph& b) {
    if (b.n < 3) return std::nullopt;
    if (b.edge_count() > 2 * b.n - 3) return std::nullopt;  // too dense
    std::vector<std::set<int>> adj(b.n);
    for (int v = 0; v < b.n; ++v)
        adj[v] = std::set<int>(b.neighbors(v).begin(), b.neighbors(v).end());
    struct Removal {
        int v, x, y;
    };
    std::vector<Removal> removed;
    std::vector<char> alive(b.n, 1);
    int remaining = b.n;
    while (remaining > 3) {
        int v = -1;
        for (int cand = 0; cand < b.n; ++cand)
            if (alive[cand] && adj[cand].size() == 2) {
                v = cand;
                break;
            }
        if (v < 0) return std::nullopt;
        auto it = adj[v].begin();
        int x = *it++;
        int y = *it;
        adj[x].erase(v);
        adj[y].erase(v);
        adj[v].clear();
        adj[x].insert(y);  // keep the boundary closed; may shadow a real edge
        adj[y].insert(x);
        alive[v] = 0;
        removed.push_back({v, x, y});
        remaining--;
    }
    std::vector<int> cyc;
    for (int v = 0; v < b.n; ++v)
        if (alive[v]) cyc.push_back(v);
    if (cyc.size() != 3) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        if (!adj[cyc[i]].count(cyc[(i + 1) % 3])) return std::nullopt;
    // Reverse reinsertion: each removed vertex must slot back between its two
    // neighbors, which must be cyclically adjacent at that moment.
    for (auto rit = removed.rbegin(); rit != removed.rend(); ++rit) {
        size_t L = cyc.size();
        size_t px = L, py = L;
        for (size_t i = 0; i < L; ++i) {
            if (cyc[i] == rit->x) px = i;
            if (cyc[i] == rit->y) py = i;
        }
        if (px > py) std::swap(px, py);
        if (py == px + 1)
            cyc.insert(cyc.begin() + static_cast<long>(py), rit->v);
        else if (px == 0 && py == L - 1)
            cyc.push_back(rit->v);
        else
            return std::nullopt;
    }
    // Certify: consecutive pairs are real edges; off-cycle edges are pairwise
    // non-crossing chords.
    std::vector<int> pos(b.n, -1);
    for (size_t i = 0; i < cyc.size(); ++i) pos[cyc[i]] = static_cast<int>(i);
    for (int v = 0; v < b.n; ++v)
        if (pos[v] < 0) return std::nullopt;
    int L = static_cast<int>(cyc.size());
    for (int i = 0; i < L; ++i)
        if (!b.has_edge(cyc[i], cyc[(i + 1) % L])) return std::nullopt;
    std::vector<std::pair<int, int>> chord_pos;
    for (auto [u, v] : b.edges) {
        int d = std::abs(pos[u] - pos[v]);
        if (d == 1 || d == L - 1) continue;  // outer edge
        int p = std::min(pos[u], pos[v]), q = std::max(pos[u], pos[v]);
        chord_pos.emplace_back(p, q);
    }
    for (size_t i = 0; i < chord_pos.size(); ++i)
        for (size_t j = i + 1; j < chord_pos.size(); ++j) {
            auto [a, c] = chord_pos[i];
            auto [b2, d] = chord_pos[j];
            bool b_inside = a < b2 && b2 < c;
            bool d_inside = a < d && d < c;
            if (b_inside != d_inside && b2 != a && b2 != c && d != a && d != c)
                return std::nullopt;  // crossing chords
        }
    return canonical_cycle(cyc);
}

// Split the polygon `poly` (positions in cyclic order) along non-crossing
// chords (position pairs) into its faces.
inline void split_faces(const std::vector<int>& poly,
                        std::vector<std::pair<int, int>> chords,
                        std::vector<std::vector<int>>& out) {
    if (chords.empty()) {
        out.push_back(poly);
        return;
    }
    auto [a, b] = chords.back();
    chords.pop_back();
    size_t ia = poly.size(), ib = poly.size();
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] == a) ia = i;
        if (poly[i] == b) ib = i;
    }
    if (ia > ib) std::swap(ia, ib);
    std::vector<int> side1(poly.begin() + static_cast<long>(ia),
                           poly.begin() + static_cast<long>(ib) + 1);
    std::vector<int> side2(poly.begin() + static_cast<long>(ib), poly.end());
    side2.insert(side2.end(), poly.begin(), poly.begin() + static_cast<long>(ia) + 1);
    std::set<int> in1(side1.begin(), side1.end());
    std::vector<std::pair<int, int>> c1, c2;
    for (auto ch : chords) {
        if (in1.count(ch.first) && in1.count(ch.second)) c1.push_back(ch);
        else c2.push_back(ch);
    }
    split_faces(side1, std::move(c1), out);
    split_faces(side2, std::move(c2), out);
}

}  // namespace detail

// Embedding of one 2-connected outerplanar graph (vertex ids are the graph's
// own), or nullopt. Faces come back canonicalized and sorted.
inline std::optional<OuterplanarEmbedding> embed_biconnected(const Graph& g) {
    auto cyc = detail::outer_cycle_of_block(g);
    if (!cyc) return std::nullopt;
    OuterplanarEmbedding emb;
    emb.outer_order = *cyc;
    int L = static_cast<int>(cyc->size());
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < L; ++i) pos[(*cyc)[i]] = i;
    std::vector<std::pair<int, int>> chord_pos;
    for (auto [u, v] : g.edges) {
        int d = std::abs(pos[u] - pos[v]);
        if (d == 1 || d == L - 1) continue;
        emb.chords.emplace_back(u, v);
        chord_pos.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
    }
    std::sort(emb.chords.begin(), emb.chords.end());
    std::vector<int> poly(L);
    for (int i = 0; i < L; ++i) poly[i] = i;
    std::vector<std::vector<int>> face_pos;
    detail::split_faces(poly, chord_pos, face_pos);
    for (auto& f : face_pos) {
        std::vector<int> verts;
        verts.reserve(f.size());
        for (int p : f) verts.push_back(emb.outer_order[p]);
        emb.faces.push_back(detail::canonical_cycle(std::move(verts)));
    }
    std::sort(emb.faces.begin(), emb.faces.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return std::make_pair(a[0], a) < std::make_pair(b[0], b);
              });
    return emb;
}

// Decision + embedding for arbitrary graphs: every block must embed. The
// whole-graph outer_order stitches the block cycles in first-seen order; for
// 2-connected inputs it is exactly the outer Hamiltonian cycle.
inline std::optional<OuterplanarEmbedding> is_outerplanar(const Graph& g) {
    BlockDecomposition bd = blocks(g);
    OuterplanarEmbedding total;
    std::vector<char> placed(g.n, 0);
    std::vector<std::pair<int, const std::vector<int>*>> order;
    for (const auto& blk : bd.blocks) order.emplace_back(blk.front(), &blk);
    std::sort(order.begin(), order.end());
    for (auto& [lead, blkp] : order) {
        const auto& blk = *blkp;
        if (blk.size() == 2) {
            for (int v : blk)
                if (!placed[v]) {
                    placed[v] = 1;
                    total.outer_order.push_back(v);
                }
            continue;
        }
        auto [sub, back] = induced_subgraph(g, blk);
        auto emb = embed_biconnected(sub);
        if (!emb) return std::nullopt;
        for (int local : emb->outer_order) {
            int v = back[local];
            if (!placed[v]) {
                placed[v] = 1;
                total.outer_order.push_back(v);
            }
        }
        for (auto [a, b] : emb->chords) {
            int u = back[a], v = back[b];
            total.chords.emplace_back(std::min(u, v), std::max(u, v));
        }
        for (const auto& f : emb->faces) {
            std::vector<int> verts;
            verts.reserve(f.size());
            for (int local : f) verts.push_back(back[local]);
            total.faces.push_back(detail::canonical_cycle(std::move(verts)));
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (!placed[v]) total.outer_order.push_back(v);  // isolated vertices
    std::sort(total.chords.begin(), total.chords.end());
    std::sort(total.faces.begin(), total.faces.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return std::make_pair(a[0], a) < std::make_pair(b[0], b);
              });
    return total;
}

struct EndFace {
    std::vector<int> boundary;  // path along the outer cycle; the edge
                                // {front, back} closes the face
    int degree = 0;             // boundary length
};

// Inner faces whose non-endpoint boundary vertices all have degree 2 in g.
// Requires a 2-connected g; a chordless cycle has no end face (empty result).
inline std::vector<EndFace> end_faces(const OuterplanarEmbedding& emb, const Graph& g) {
    if (g.n < 3 || !is_biconnected(g))
        throw std::invalid_argument("end_faces: graph must be 2-connected");
    std::vector<EndFace> out;
    if (emb.chords.empty()) return out;
    for (const auto& face : emb.faces) {
        int r = static_cast<int>(face.size());
        // Candidate closing edges {face[p], face[p+1]} such that every other
        // boundary vertex has degree 2.
        std::optional<std::pair<int, int>> best_edge;
        int best_p = -1;
        for (int p = 0; p < r; ++p) {
            int x = face[p], y = face[(p + 1) % r];
            bool ok = true;
            for (int q = 0; q < r && ok; ++q) {
                if (q == p || q == (p + 1) % r) continue;
                if (g.degree(face[q]) != 2) ok = false;
            }
            if (!ok) continue;
            auto edge = std::make_pair(std::min(x, y), std::max(x, y));
            if (!best_edge || edge < *best_edge) {
                best_edge = edge;
                best_p = p;
            }
        }
        if (!best_edge) continue;
        // Walk the long way around the face, from the smaller endpoint.
        int x = face[best_p], y = face[(best_p + 1) % r];
        EndFace ef;
        ef.degree = r;
        if (x < y)
            for (int i = 0; i < r; ++i) ef.boundary.push_back(face[(best_p - i + 2 * r) % r]);
        else
            for (int i = 0; i < r; ++i) ef.boundary.push_back(face[(best_p + 1 + i) % r]);
        out.push_back(std::move(ef));
    }
    std::sort(out.begin(), out.end(), [](const EndFace& a, const EndFace& b) {
        int ma = *std::min_element(a.boundary.begin(), a.boundary.end());
        int mb = *std::min_element(b.boundary.begin(), b.boundary.end());
        return std::make_pair(ma, a.boundary) < std::make_pair(mb, b.boundary);
    });
    return out;
}

// An end face one of whose endpoints has degree < 5; guaranteed to exist for
// 2-connected outerplanar graphs with a chord.
inline EndFace low_degree_end_face(const OuterplanarEmbedding& emb, const Graph& g) {
    auto all = end_faces(emb, g);
    if (all.empty())
        throw std::invalid_argument("low_degree_end_face: chordless cycle has no end face");
    for (const auto& ef : all)
        if (g.degree(ef.boundary.front()) < 5 || g.degree(ef.boundary.back()) < 5) return ef;
    throw std::logic_error("low_degree_end_face: no end face with a low-degree endpoint");
}

struct ReductionCase {
    enum class Kind { PendantVertex, AdjacentTwoVertices, TriangulatedTwoVertex };
    Kind kind = Kind::PendantVertex;
    int v = -1;  // pendant vertex / first 2-vertex / the triangulated 2-vertex
    int u = -1;  // second 2-vertex, or first neighbor of the triangulated one
    int w = -1;  // second neighbor of the triangulated one
};

// A structural reduction that every nonempty outerplanar graph admits: a
// vertex of degree <= 1, two adjacent 2-vertices, or a 2-vertex whose
// neighbors are adjacent. 2-connected inputs always land in the last two.
inline ReductionCase find_reduction(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("find_reduction: empty graph");
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 1) return {ReductionCase::Kind::PendantVertex, v, -1, -1};
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 2) continue;
        for (int u : g.neighbors(v))
            if (u > v && g.degree(u) == 2)
                return {ReductionCase::Kind::AdjacentTwoVertices, v, u, -1};
    }
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 2) continue;
        int u = g.neighbors(v)[0], w = g.neighbors(v)[1];
        if (g.has_edge(u, w)) return {ReductionCase::Kind::TriangulatedTwoVertex, v, u, w};
    }
    throw std::invalid_argument("find_reduction: no reduction case; input is not outerplanar");
}

}  // namespace vic

#endif  // VIC_OUTERPLANAR_HPP
