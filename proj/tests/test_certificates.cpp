#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "vic/checker.hpp"
#include "vic/classify.hpp"
#include "vic/exact.hpp"
#include "vic/forbidden.hpp"
#include "vic/generators.hpp"
#include "vic/graph.hpp"
#include "vic/outerplanar.hpp"

using vic::ForbiddenPattern;
using vic::Graph;

namespace {

const std::vector<ForbiddenPattern> kAllPatterns = {
    ForbiddenPattern::Diamond, ForbiddenPattern::Net, ForbiddenPattern::TailedHouse,
    ForbiddenPattern::TailedTriPent};

Graph diamond_graph() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}}); }

int count_pattern(const std::vector<vic::ForbiddenEmbedding>& hits, ForbiddenPattern p) {
    return static_cast<int>(std::count_if(hits.begin(), hits.end(),
                                          [&](const auto& e) { return e.pattern == p; }));
}

bool subcubic(const Graph& g) { return g.max_degree() <= 3; }

}  // namespace

TEST_CASE("obstruction table has the expected shapes") {
    const auto& pats = vic::forbidden_patterns();
    REQUIRE(pats.size() == 4);
    const std::vector<int> want_n = {4, 6, 6, 8};
    const std::vector<int> want_m = {5, 6, 7, 9};
    const std::vector<int> want_deg3 = {2, 3, 3, 4};
    std::set<std::string> names;
    for (std::size_t i = 0; i < pats.size(); ++i) {
        INFO("pattern " << i);
        const Graph& p = pats[i];
        CHECK(p.n == want_n[i]);
        CHECK(p.edge_count() == want_m[i]);
        CHECK(p.max_degree() == 3);
        CHECK(vic::is_connected(p));
        CHECK(vic::is_outerplanar(p).has_value());
        int deg3 = 0;
        for (int v = 0; v < p.n; ++v) deg3 += p.degree(v) == 3;
        CHECK(deg3 == want_deg3[i]);
        names.insert(vic::pattern_name(static_cast<ForbiddenPattern>(i)));
    }
    CHECK(names.size() == 4);
}

TEST_CASE("each obstruction is found in itself and needs a sixth color") {
    for (ForbiddenPattern p : kAllPatterns) {
        INFO(vic::pattern_name(p));
        const Graph& pat = vic::pattern_graph(p);
        auto hits = vic::detect_forbidden(pat);
        std::vector<int> identity(pat.n);
        std::iota(identity.begin(), identity.end(), 0);
        bool found_self = false;
        for (const auto& e : hits) {
            CHECK(vic::embedding_ok(pat, e));
            if (e.pattern == p && e.mapping == identity) found_self = true;
        }
        CHECK(found_self);
        // The obstructions are themselves subcubic outerplanar, so six colors
        // suffice; the point is that five never do.
        CHECK(*vic::chi_vi(pat).value == 6);
    }
}

TEST_CASE("diamond host yields exactly its automorphic embeddings") {
    auto hits = vic::detect_forbidden(diamond_graph());
    CHECK(hits.size() == 4);
    CHECK(count_pattern(hits, ForbiddenPattern::Diamond) == 4);
    auto first = vic::first_forbidden(diamond_graph());
    REQUIRE(first.has_value());
    CHECK(first->pattern == ForbiddenPattern::Diamond);
    CHECK(vic::embedding_ok(diamond_graph(), *first));

    // K_4 is all edges, so any injective placement of the diamond works.
    Graph k4 = vic::complete_graph(4);
    auto k4_hits = vic::detect_forbidden(k4);
    CHECK(count_pattern(k4_hits, ForbiddenPattern::Diamond) == 24);
}

TEST_CASE("hosts outside the degree regime come back empty") {
    CHECK(vic::detect_forbidden(vic::cycle_graph(6)).empty());
    CHECK(vic::detect_forbidden(vic::path_graph(5)).empty());
    CHECK(vic::detect_forbidden(Graph(1, {})).empty());
    // Every vertex of K_5 has degree 4, so no degree-3 pattern vertex fits.
    CHECK(vic::detect_forbidden(vic::complete_graph(5)).empty());
    CHECK_FALSE(vic::first_forbidden(vic::complete_graph(5)).has_value());
    // A lone degree-3 vertex is not enough for any pattern.
    CHECK(vic::detect_forbidden(Graph(4, {{0, 1}, {0, 2}, {0, 3}})).empty());
}

TEST_CASE("matching requires host degree exactly three at pattern 3-vertices") {
    // Pendant on a 3-vertex of the diamond pushes it to degree 4: the host
    // still contains a diamond as a plain subgraph, but no longer in a way
    // the argument covers, so the detector must decline.
    Graph bumped(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {0, 4}});
    CHECK(vic::detect_forbidden(bumped).empty());

    // Pendant on a 2-vertex only raises an unconstrained degree: still found.
    Graph ok(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 4}});
    auto hits = vic::detect_forbidden(ok);
    CHECK(count_pattern(hits, ForbiddenPattern::Diamond) == 4);
    CHECK(count_pattern(hits, ForbiddenPattern::Net) == 0);
    for (const auto& e : hits) CHECK(vic::embedding_ok(ok, e));
}

TEST_CASE("embeddings survive relabeling and larger hosts") {
    vic::SplitMix64 rng(41);
    for (ForbiddenPattern p : kAllPatterns) {
        const Graph& pat = vic::pattern_graph(p);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<int> perm(pat.n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = pat.n - 1; i > 0; --i)
                std::swap(perm[i], perm[static_cast<size_t>(rng.below(i + 1))]);
            Graph host = vic::relabel(pat, perm);
            auto hits = vic::detect_forbidden(host);
            INFO(vic::pattern_name(p) << " trial " << trial);
            CHECK(count_pattern(hits, p) >= 1);
            for (const auto& e : hits) CHECK(vic::embedding_ok(host, e));
        }
    }

    // Growing a tail off a low-degree corner keeps the copy detectable.
    const Graph& net = vic::pattern_graph(ForbiddenPattern::Net);
    auto edges = net.edges;
    edges.push_back({3, 6});
    edges.push_back({6, 7});
    Graph tailed(8, std::move(edges));
    auto hits = vic::detect_forbidden(tailed);
    CHECK(count_pattern(hits, ForbiddenPattern::Net) >= 1);
}

TEST_CASE("a detector hit forces a sixth color on every small subcubic host") {
    int hosts_with_hits = 0;
    for (int n = 4; n <= 8; ++n) {
        auto graphs = vic::enumerate_graphs(n, vic::is_connected, subcubic);
        for (const Graph& g : graphs) {
            auto hits = vic::detect_forbidden(g);
            for (const auto& e : hits) CHECK(vic::embedding_ok(g, e));
            if (hits.empty()) continue;
            ++hosts_with_hits;
            INFO("n=" << n << " edges=" << g.edge_count());
            CHECK(*vic::chi_vi(g).value >= 6);
        }
    }
    // The sweep has to have actually exercised the detector.
    CHECK(hosts_with_hits >= 25);
}

TEST_CASE("a detector hit forces a sixth color at order nine", "[.][slow]") {
    auto graphs = vic::enumerate_graphs(9, vic::is_connected, subcubic);
    for (const Graph& g : graphs) {
        auto hits = vic::detect_forbidden(g);
        if (hits.empty()) continue;
        CHECK(*vic::chi_vi(g).value >= 6);
    }
}

TEST_CASE("classify nails the closed-form examples") {
    auto tight = [](const vic::Classification& c) {
        REQUIRE(c.vi_class.has_value());
        CHECK(c.lo == c.hi);
        return *c.vi_class;
    };

    auto k5 = vic::classify(vic::complete_graph(5));
    CHECK(k5.hi == 7);
    CHECK(tight(k5) == 2);
    bool has_refutation = false;
    for (const auto& cert : k5.certificates)
        if (cert.kind == vic::CertificateKind::ExhaustedSearch && cert.k == 6)
            has_refutation = true;
    CHECK(has_refutation);

    CHECK(tight(vic::classify(vic::path_graph(6))) == 1);
    CHECK(tight(vic::classify(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}))) == 1);
    CHECK(tight(vic::classify(vic::cycle_graph(4))) == 1);
    CHECK(tight(vic::classify(vic::cycle_graph(5))) == 2);
    CHECK(tight(vic::classify(vic::cycle_graph(8))) == 1);
    // A single edge needs four colors at maximum degree one: class two.
    CHECK(tight(vic::classify(vic::complete_graph(2))) == 2);

    // The diamond closes without any exact search: the constructive ceiling
    // is six and the obstruction hit lifts the floor to meet it.
    auto dia = vic::classify(diamond_graph());
    CHECK(tight(dia) == 2);
    CHECK(dia.nodes == 0);
    bool has_embedding = false;
    for (const auto& cert : dia.certificates)
        if (cert.kind == vic::CertificateKind::ForbiddenSubgraph) {
            REQUIRE(cert.embedding.has_value());
            CHECK(vic::embedding_ok(diamond_graph(), *cert.embedding));
            has_embedding = true;
        }
    CHECK(has_embedding);

    CHECK_THROWS_AS(vic::classify(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("classify certificates narrow monotonically and verify") {
    const std::vector<Graph> samples = {vic::complete_graph(5), vic::cycle_graph(5),
                                        diamond_graph(), vic::path_graph(7),
                                        Graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}})};
    for (const Graph& g : samples) {
        auto res = vic::classify(g);
        REQUIRE(!res.certificates.empty());
        int prev_lo = 0, prev_hi = 1 << 20;
        for (const auto& cert : res.certificates) {
            CHECK(cert.lo <= cert.hi);
            CHECK(cert.lo >= prev_lo);
            CHECK(cert.hi <= prev_hi);
            prev_lo = cert.lo;
            prev_hi = cert.hi;
            switch (cert.kind) {
                case vic::CertificateKind::WitnessColoring: {
                    REQUIRE(cert.witness.has_value());
                    auto rep = vic::verify(g, *cert.witness, cert.k);
                    CHECK(rep.valid);
                    CHECK(cert.hi <= cert.k);
                    break;
                }
                case vic::CertificateKind::ForbiddenSubgraph:
                    REQUIRE(cert.embedding.has_value());
                    CHECK(vic::embedding_ok(g, *cert.embedding));
                    CHECK(cert.lo >= 6);
                    break;
                case vic::CertificateKind::ExhaustedSearch:
                    CHECK(cert.lo > cert.k);
                    CHECK(cert.nodes > 0);
                    break;
            }
        }
        CHECK(res.lo == prev_lo);
        CHECK(res.hi == prev_hi);
    }
}

TEST_CASE("classify honors its node budget and stays honest under it") {
    Graph c7 = vic::cycle_graph(7);

    auto skip = vic::classify(c7, 0);
    CHECK(skip.nodes == 0);
    CHECK(skip.lo == 4);
    CHECK(skip.hi == 5);
    CHECK_FALSE(skip.vi_class.has_value());

    auto starved = vic::classify(c7, 1);
    CHECK(starved.lo == 4);
    CHECK(starved.hi == 5);
    CHECK_FALSE(starved.vi_class.has_value());
    CHECK(starved.nodes <= 1);

    auto full = vic::classify(c7);
    CHECK(full.lo == 5);
    CHECK(full.hi == 5);
    REQUIRE(full.vi_class.has_value());
    CHECK(*full.vi_class == 2);
}

TEST_CASE("classify agrees with the exact solver on the small corpus") {
    for (int n = 2; n <= 6; ++n) {
        auto graphs = vic::enumerate_graphs(n, vic::is_connected);
        for (const Graph& g : graphs) {
            if (g.edge_count() == 0) continue;
            int exact = *vic::chi_vi(g).value;
            auto res = vic::classify(g);
            INFO("n=" << n << " edges=" << g.edge_count());
            CHECK(res.lo == exact);
            CHECK(res.hi == exact);
            REQUIRE(res.vi_class.has_value());
            CHECK(*res.vi_class == exact - g.max_degree() - 1);

            auto budgeted = vic::classify(g, 50);
            CHECK(budgeted.lo <= exact);
            CHECK(exact <= budgeted.hi);
        }
    }
}

TEST_CASE("classify keeps outerplanar ceilings within three of the degree") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        vic::GenSpec spec;
        spec.n = 24 + static_cast<int>(seed % 3) * 18;
        spec.delta_max = 4 + static_cast<int>(seed % 5);
        spec.girth_min = seed % 2 == 0 ? 4 : 3;
        spec.two_connected = true;
        spec.seed = seed * 977 + 11;
        Graph g;
        for (int tries = 0;; ++tries) {
            try {
                g = vic::gen_outerplanar(spec);
                break;
            } catch (const vic::Infeasible&) {
                REQUIRE(tries < 8);
                spec.seed = spec.seed * 6364136223846793005ULL + 1442695040888963407ULL;
            }
        }
        auto res = vic::classify(g, 0);
        INFO("seed " << seed << " n=" << g.n << " delta=" << g.max_degree());
        CHECK(res.lo <= res.hi);
        CHECK(res.lo >= g.max_degree() + 2);
        CHECK(res.hi <= g.max_degree() + 3);
    }
}
