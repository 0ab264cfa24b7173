#ifndef VIC_GENERATORS_HPP
#define VIC_GENERATORS_HPP

// Seeded random outerplanar generation and exhaustive small-graph
// enumeration. Generation stays outerplanar by construction: a polygon plus
// non-crossing chords inserted by splitting faces, with degree and face-length
// caps enforced per insertion; non-2-connected shapes are composed from such
// blocks joined at cut vertices, bridges, and pendant trees.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vic/canonical.hpp"
#include "vic/graph.hpp"

namespace vic {

// Small deterministic RNG (splitmix64); fixed across platforms so seeds in
// test logs stay meaningful.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    int range(int lo, int hi) {  // inclusive ends
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(int num, int den) { return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num); }
};

struct GenSpec {
    int n = 0;
    int delta_max = 4;
    int girth_min = 3;
    bool two_connected = false;
    std::uint64_t seed = 0;
};

struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Polygon of length n plus random non-crossing chords under degree and
// face-length caps. Vertices 0..n-1 in cycle order.
inline Graph random_block(int n, int delta_max, int girth_min, SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 2);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    // Faces as position sequences along the polygon.
    std::vector<std::vector<int>> faces;
    {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        faces.push_back(std::move(all));
    }
    int attempts = 3 * n;
    while (attempts-- > 0) {
        // Collect splittable faces: length L splits into d+1 and L-d+1, both
        // >= girth_min, so L >= 2*girth_min - 2.
        std::vector<int> candidates;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            if (static_cast<int>(faces[f].size()) >= 2 * girth_min - 2) candidates.push_back(f);
        if (candidates.empty()) break;
        if (rng.chance(1, 4)) continue;  // leave some faces unsplit
        int fi = candidates[static_cast<size_t>(rng.below(candidates.size()))];
        auto& face = faces[fi];
        int L = static_cast<int>(face.size());
        // Chord endpoints at face indices a < b with both arcs >= girth_min.
        int d_lo = girth_min - 1, d_hi = L - girth_min + 1;
        if (d_lo > d_hi) continue;
        int ai = rng.range(0, L - 1);
        // Hub bias: sometimes anchor at the face vertex with maximum degree
        // to actually reach high-degree regimes.
        if (rng.chance(1, 2)) {
            for (int i = 0; i < L; ++i)
                if (deg[face[i]] > deg[face[ai]] && deg[face[i]] < delta_max) ai = i;
        }
        int d = rng.range(d_lo, d_hi);
        int bi = (ai + d) % L;
        int u = face[ai], v = face[bi];
        if (deg[u] >= delta_max || deg[v] >= delta_max) continue;
        edges.emplace_back(std::min(u, v), std::max(u, v));
        deg[u]++;
        deg[v]++;
        // Split the face.
        std::vector<int> left, right;
        for (int i = ai;; i = (i + 1) % L) {
            left.push_back(face[i]);
            if (i == bi) break;
        }
        for (int i = bi;; i = (i + 1) % L) {
            right.push_back(face[i]);
            if (i == ai) break;
        }
        faces[fi] = std::move(left);
        faces.push_back(std::move(right));
    }
    return Graph(n, std::move(edges));
}

}  // namespace detail

// Random outerplanar graph meeting the requested constraints; deterministic per seed. The
// degree bound is a cap, not a target (retry with nearby seeds to hit exact
// maximum degrees).
inline Graph gen_outerplanar(const GenSpec& spec) {
    if (spec.girth_min < 3) throw Infeasible("gen: girth_min must be >= 3");
    if (spec.delta_max < 2) throw Infeasible("gen: delta_max must be >= 2");
    if (spec.two_connected && spec.n < std::max(3, spec.girth_min))
        throw Infeasible("gen: 2-connected graphs need n >= max(3, girth)");
    if (spec.n < 1) throw Infeasible("gen: need n >= 1");
    SplitMix64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);

    std::vector<std::pair<int, int>> edges;
    int built = 0;  // vertices allocated so far
    if (spec.two_connected) {
        Graph block = detail::random_block(spec.n, spec.delta_max, spec.girth_min, rng);
        edges = block.edges;
        built = spec.n;
    } else {
        // Compose blocks, bridges, and pendant vertices.
        std::vector<int> deg;
        auto add_vertex = [&]() {
            deg.push_back(0);
            return built++;
        };
        auto add_edge = [&](int u, int v) {
            edges.emplace_back(std::min(u, v), std::max(u, v));
            deg[u]++;
            deg[v]++;
        };
        int first_len = std::min(spec.n, std::max(3, spec.girth_min) + static_cast<int>(rng.below(4)));
        if (spec.n >= std::max(3, spec.girth_min) && first_len >= std::max(3, spec.girth_min)) {
            Graph block = detail::random_block(first_len, spec.delta_max, spec.girth_min, rng);
            for (int i = 0; i < first_len; ++i) add_vertex();
            for (auto [u, v] : block.edges) add_edge(u, v);
        } else {
            add_vertex();  // too small for any cycle: grow a tree below
        }
        while (built < spec.n) {
            int remaining = spec.n - built;
            int more_cycle = std::max(3, spec.girth_min);
            int mode = rng.range(0, 2);
            // Anchor: a random existing vertex with spare degree.
            int anchor = -1;
            for (int tries = 0; tries < 2 * built + 4; ++tries) {
                int cand = static_cast<int>(rng.below(static_cast<std::uint64_t>(built)));
                if (deg[cand] < spec.delta_max) {
                    anchor = cand;
                    break;
                }
            }
            if (anchor < 0) {
                for (int cand = 0; cand < built; ++cand)
                    if (deg[cand] < spec.delta_max) {
                        anchor = cand;
                        break;
                    }
            }
            if (anchor < 0) throw Infeasible("gen: degree cap saturated before reaching n");
            if (mode == 0 || remaining < more_cycle) {
                int v = add_vertex();  // pendant vertex
                add_edge(anchor, v);
            } else if (mode == 1 && deg[anchor] + 2 <= spec.delta_max &&
                       remaining >= more_cycle - 1) {
                // New block sharing the anchor as a cut vertex.
                int len = std::min(remaining + 1, more_cycle + static_cast<int>(rng.below(3)));
                if (len < more_cycle) len = more_cycle;
                Graph block = detail::random_block(len, spec.delta_max, spec.girth_min, rng);
                if (deg[anchor] + block.degree(0) > spec.delta_max) {
                    int v = add_vertex();  // block would bust the cap; pendant instead
                    add_edge(anchor, v);
                    continue;
                }
                std::vector<int> ids(len);
                ids[0] = anchor;
                for (int i = 1; i < len; ++i) ids[i] = add_vertex();
                for (auto [u, v] : block.edges) add_edge(ids[u], ids[v]);
            } else {
                int v = add_vertex();  // bridge to a fresh vertex; tree grows on
                add_edge(anchor, v);
            }
        }
    }
    Graph g(spec.n, std::move(edges));
    // Seeded relabeling so structure does not correlate with vertex ids.
    std::vector<int> perm(spec.n);
    for (int i = 0; i < spec.n; ++i) perm[i] = i;
    for (int i = spec.n - 1; i > 0; --i)
        std::swap(perm[i], perm[static_cast<size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    return relabel(g, perm);
}

// All non-isomorphic graphs on exactly n vertices that pass `keep`, by
// levelwise vertex extension with canonical deduplication. `grow_prune`, when
// given, must be a hereditary property (holds for all induced subgraphs of
// anything it accepts); it is applied at every level to cut the search.
inline std::vector<Graph> enumerate_graphs(
    int n, const std::function<bool(const Graph&)>& keep = {},
    const std::function<bool(const Graph&)>& grow_prune = {}) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: n must be >= 1");
    if (n > 8 && !(n == 9 && grow_prune))
        throw std::invalid_argument("enumerate_graphs: n > 8 needs a pruning filter");
    std::map<std::string, Graph> level;
    level.emplace(canonical_key(Graph(1, {})), Graph(1, {}));
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [key, parent] : level) {
            for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
                auto es = parent.edges;
                for (int u = 0; u < k - 1; ++u)
                    if (mask & (1u << u)) es.emplace_back(u, k - 1);
                Graph child(k, std::move(es));
                if (grow_prune && !grow_prune(child)) continue;
                std::string ck = canonical_key(child);
                if (!next.count(ck)) next.emplace(std::move(ck), std::move(child));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& [key, g] : level)
        if (!keep || keep(g)) out.push_back(g);
    return out;
}

}  // namespace vic

#endif  // VIC_GENERATORS_HPP
