#ifndef VIC_CLASSIFY_HPP
#define VIC_CLASSIFY_HPP

// Interval classification of the vi-simultaneous chromatic number. The
// classifier stacks cheap evidence first — the clique floor, a constructive
// coloring for the ceiling, an obstruction hit that rules out five colors —
// and then spends an optional node budget on exact search to close the gap.
// Every tightening is recorded as a certificate, so a caller can replay why
// the interval looks the way it does. Under a small budget the interval just
// stays wide; it never lies.

#include <optional>
#include <stdexcept>
#include <vector>

#include "vic/checker.hpp"
#include "vic/construct_basic.hpp"
#include "vic/construct_girth.hpp"
#include "vic/construct_outerplanar.hpp"
#include "vic/exact.hpp"
#include "vic/forbidden.hpp"
#include "vic/graph.hpp"
#include "vic/outerplanar.hpp"

namespace vic {

enum class CertificateKind { WitnessColoring, ForbiddenSubgraph, ExhaustedSearch };

inline const char* certificate_kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::WitnessColoring: return "witness-coloring";
        case CertificateKind::ForbiddenSubgraph: return "forbidden-subgraph";
        case CertificateKind::ExhaustedSearch: return "exhausted-search";
    }
    throw std::invalid_argument("certificate_kind_name: unknown kind");
}

// One piece of evidence, with the bounds the classifier held after absorbing
// it. WitnessColoring: a valid coloring on k colors (hi <= k from then on).
// ForbiddenSubgraph: an obstruction embedding, lifting lo to 6.
// ExhaustedSearch: a completed refutation of k colors after `nodes` search
// nodes, so lo > k.
struct ClassCertificate {
    CertificateKind kind;
    int lo = 0;
    int hi = 0;
    int k = 0;
    std::optional<ViColoring> witness;
    std::optional<ForbiddenEmbedding> embedding;
    long long nodes = 0;
};

struct Classification {
    int lo = 0;
    int hi = 0;
    std::optional<int> vi_class;  // set when lo == hi: hi - max degree - 1
    std::vector<ClassCertificate> certificates;
    long long nodes = 0;  // total exact-search effort spent
};

namespace detail {

// Try every constructive strategy that applies and keep the best valid
// coloring. The candidates are all proven elsewhere; verification here is a
// guard so a regression can never masquerade as a tighter ceiling.
inline std::pair<int, std::optional<ViColoring>> constructive_ceiling(const Graph& g) {
    int hi = 0;
    std::optional<ViColoring> best;
    auto consider = [&](const ViColoring& c) {
        int used = max_color(c);
        if (best && used >= hi) return;
        if (verify(g, c, used).valid) {
            hi = used;
            best = c;
        }
    };
    if (g.n >= 2 && g.edge_count() == g.n * (g.n - 1) / 2) consider(color_complete(g.n));
    if (is_forest(g)) consider(color_forest(g));
    if (is_outerplanar(g)) {
        consider(run_color_outerplanar(g).coloring);
        auto gi = girth(g);
        if (gi && *gi >= 4) consider(run_color_girth(g).coloring);
    }
    if (g.max_degree() >= 2) {
        auto [deg, order] = degeneracy_order(g);
        (void)order;
        consider(color_degenerate(g, deg));
    }
    return {hi, std::move(best)};
}

}  // namespace detail

// Bounds chi_vi(g) from both sides, tightening with exact search while the
// node budget lasts (no budget = search to completion). The graph needs at
// least one edge; everything below the first edge is trivial anyway.
inline Classification classify(const Graph& g,
                               std::optional<long long> node_budget = std::nullopt) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("classify: graph needs at least one edge");
    Classification out;
    out.lo = lower_bound(g);

    auto [hi, witness] = detail::constructive_ceiling(g);
    if (!witness) throw std::logic_error("classify: no constructive ceiling applied");
    out.hi = hi;
    out.certificates.push_back(
        {CertificateKind::WitnessColoring, out.lo, out.hi, out.hi, witness, std::nullopt, 0});

    // An obstruction forbids five colors; only worth looking below six.
    if (out.lo < 6 && g.max_degree() == 3) {
        if (auto emb = first_forbidden(g)) {
            out.lo = 6;
            if (out.lo > out.hi) throw std::logic_error("classify: certificates conflict");
            out.certificates.push_back(
                {CertificateKind::ForbiddenSubgraph, out.lo, out.hi, 0, std::nullopt, emb, 0});
        }
    }

    // Exact refinement from below, within the budget.
    for (int k = out.lo; k < out.hi; ++k) {
        std::optional<long long> remaining;
        if (node_budget) {
            if (out.nodes >= *node_budget) break;
            remaining = *node_budget - out.nodes;
        }
        SearchOutcome step = is_colorable(g, k, std::nullopt, remaining);
        out.nodes += step.nodes;
        if (step.status == SearchStatus::Satisfiable) {
            out.hi = k;
            out.certificates.push_back({CertificateKind::WitnessColoring, out.lo, out.hi, k,
                                        std::move(step.witness), std::nullopt, step.nodes});
            break;
        }
        if (step.status == SearchStatus::NodeLimitReached) break;
        out.lo = k + 1;
        out.certificates.push_back({CertificateKind::ExhaustedSearch, out.lo, out.hi, k,
                                    std::nullopt, std::nullopt, step.nodes});
    }

    if (out.lo == out.hi) out.vi_class = out.hi - g.max_degree() - 1;
    return out;
}

}  // namespace vic

#endif  // VIC_CLASSIFY_HPP
