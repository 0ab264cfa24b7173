// vic: command-line front end for the vi-simultaneous coloring library.
// Every subcommand is a thin adapter — load input, call one library entry
// point, print the result — and every run drops a one-line provenance
// manifest on stderr (command, input hashes, seed, versions, wall time,
// summary). Exit codes: 0 success, 1 verification failure or mismatch,
// 2 usage, 3 resource limit.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vic/checker.hpp"
#include "vic/classify.hpp"
#include "vic/construct_basic.hpp"
#include "vic/construct_girth.hpp"
#include "vic/construct_outerplanar.hpp"
#include "vic/exact.hpp"
#include "vic/fixtures.hpp"
#include "vic/forbidden.hpp"
#include "vic/generators.hpp"
#include "vic/graph.hpp"
#include "vic/io.hpp"
#include "vic/manifest.hpp"
#include "vic/outerplanar.hpp"
#include "vic/transforms.hpp"

namespace {

using nlohmann::json;
using vic::Graph;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

// Shared output plumbing: human text goes to stdout as the handler runs;
// --json buffers a machine object instead and prints it at the end, with the
// manifest embedded. The manifest line goes to stderr either way.
struct Reporter {
    bool json_mode = false;
    vic::RunManifest manifest;
    vic::WallClock clock;
    json out = json::object();

    int finish(int code, const std::string& summary) {
        manifest.summary = summary;
        manifest.wall_seconds = clock.seconds();
        json mj = manifest.to_json();
        std::cerr << mj.dump() << "\n";
        if (json_mode) {
            out["manifest"] = std::move(mj);
            std::cout << out.dump(2) << "\n";
        }
        return code;
    }

    // Print a human line unless machine output was requested.
    template <typename... Parts>
    void say(Parts&&... parts) {
        if (json_mode) return;
        (std::cout << ... << parts) << "\n";
    }
};

std::string slurp(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GraphInput {
    Graph g;
    std::string label;
    std::string bytes;
};

// A graph argument is a file path, '-' for stdin, or a builtin shorthand
// C<n>/K<n>/P<n> (cycle, complete, path) when no such file exists.
GraphInput load_graph_arg(const std::string& arg) {
    if (arg == "-") {
        std::string bytes = slurp(std::cin);
        std::istringstream in(bytes);
        return {vic::read_graph(in), "stdin", std::move(bytes)};
    }
    if (!std::filesystem::exists(arg) && arg.size() >= 2 &&
        (arg[0] == 'C' || arg[0] == 'K' || arg[0] == 'P') &&
        std::all_of(arg.begin() + 1, arg.end(), [](char c) { return std::isdigit(c); })) {
        int n = std::stoi(arg.substr(1));
        Graph g = arg[0] == 'C'   ? vic::cycle_graph(n)
                  : arg[0] == 'K' ? vic::complete_graph(n)
                                  : vic::path_graph(n);
        std::string bytes = vic::format_edge_list(g);
        return {std::move(g), arg, std::move(bytes)};
    }
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open graph file: " + arg);
    std::string bytes = slurp(in);
    std::istringstream parse(bytes);
    return {vic::read_graph(parse), arg, std::move(bytes)};
}

std::optional<long long> env_node_limit() {
    const char* s = std::getenv("VIC_NODE_LIMIT");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0)
        throw CLI::ValidationError("VIC_NODE_LIMIT must be a positive integer");
    return v;
}

int spread_achieved(const Graph& g, const vic::ViColoring& c) {
    vic::ElementIndex ix(g);
    int worst = 0;
    for (int v = 0; v < g.n; ++v) worst = std::max(worst, vic::spread_at(g, ix, c, v));
    return worst;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
}

json graph_payload(const Graph& g) { return vic::graph_to_json(g); }

// ---------------------------------------------------------------- embed ---

int cmd_embed(Reporter& rep, const std::string& graph_arg) {
    GraphInput in = load_graph_arg(graph_arg);
    rep.manifest.add_input(in.label, in.bytes);
    auto emb = vic::is_outerplanar(in.g);
    rep.out["outerplanar"] = emb.has_value();
    if (!emb) {
        rep.say("not outerplanar");
        return rep.finish(kMismatch, "not outerplanar");
    }
    rep.out["outer_order"] = emb->outer_order;
    rep.out["chords"] = emb->chords;
    rep.out["faces"] = emb->faces;
    if (!rep.json_mode) {
        std::cout << "outerplanar: yes\nouter order:";
        for (int v : emb->outer_order) std::cout << " " << v;
        std::cout << "\nchords:";
        for (auto [a, b] : emb->chords) std::cout << " {" << a << "," << b << "}";
        std::cout << "\ninner faces: " << emb->faces.size() << "\n";
    }
    std::ostringstream sum;
    sum << "outerplanar, n=" << in.g.n << ", chords=" << emb->chords.size();
    return rep.finish(kOk, sum.str());
}

// ---------------------------------------------------------------- color ---

int cmd_color(Reporter& rep, const std::string& graph_arg, int spread, std::string strategy,
              std::optional<int> degeneracy_flag, bool explain, const std::string& out_path) {
    GraphInput in = load_graph_arg(graph_arg);
    rep.manifest.add_input(in.label, in.bytes);
    const Graph& g = in.g;

    if (strategy == "auto")
        strategy = spread == 1 ? "girth" : (vic::is_outerplanar(g) ? "outerplanar" : "degenerate");

    vic::ViColoring coloring;
    int palette = 0;
    bool fallback = false;
    std::vector<std::string> trace;
    if (strategy == "girth") {
        vic::GirthRun run = vic::run_color_girth(g);
        coloring = std::move(run.coloring);
        palette = run.palette;
        fallback = run.fallback;
        trace = std::move(run.trace);
    } else if (strategy == "outerplanar") {
        vic::ConstructRun run = vic::run_color_outerplanar(g);
        coloring = std::move(run.coloring);
        palette = run.palette;
        trace = std::move(run.trace);
    } else {  // degenerate
        int k = degeneracy_flag ? *degeneracy_flag : vic::degeneracy_order(g).first;
        coloring = vic::color_degenerate(g, k);
        palette = g.max_degree() + 2 * k;
        trace.push_back("degeneracy bound: " + std::to_string(k));
    }

    auto report = vic::verify(g, coloring, std::max(palette, 1));
    if (!report.valid) return rep.finish(kMismatch, "internal error: coloring failed verification");
    int achieved = spread_achieved(g, coloring);

    rep.out["strategy"] = strategy;
    rep.out["palette"] = palette;
    rep.out["colors_used"] = report.colors_used;
    rep.out["spread"] = achieved;
    rep.out["requested_spread"] = spread;
    rep.out["fallback"] = fallback;
    rep.out["coloring"] = vic::coloring_to_json(g, coloring, palette);
    if (explain) rep.out["trace"] = trace;

    rep.say("strategy: ", strategy);
    rep.say("palette: ", palette, " (colors used: ", report.colors_used, ")");
    rep.say("spread: ", achieved, (fallback ? "  [fallback engaged]" : ""));
    if (explain)
        for (const auto& line : trace) rep.say("  ", line);
    if (!out_path.empty()) {
        write_text_file(out_path, vic::coloring_to_json(g, coloring, palette).dump(2));
        rep.say("coloring written to ", out_path);
    }

    std::ostringstream sum;
    sum << "strategy=" << strategy << " palette=" << palette << " spread=" << achieved
        << (fallback ? " fallback" : "");
    if (achieved > spread) {
        rep.say("requested spread ", spread, " not achieved");
        return rep.finish(kMismatch, sum.str() + " (requested spread missed)");
    }
    return rep.finish(kOk, sum.str());
}

// ---------------------------------------------------------------- exact ---

int cmd_exact(Reporter& rep, const std::string& graph_arg, std::optional<int> spread,
              std::optional<int> k, std::optional<long long> node_limit,
              const std::string& witness_path) {
    GraphInput in = load_graph_arg(graph_arg);
    rep.manifest.add_input(in.label, in.bytes);
    const Graph& g = in.g;

    auto save_witness = [&](const vic::ViColoring& c, int colors) {
        if (!witness_path.empty()) {
            write_text_file(witness_path, vic::coloring_to_json(g, c, colors).dump(2));
            rep.say("witness written to ", witness_path);
        }
        rep.out["witness"] = vic::coloring_to_json(g, c, colors);
    };

    if (k) {
        vic::SearchOutcome outcome = vic::is_colorable(g, *k, spread, node_limit);
        rep.out["k"] = *k;
        rep.out["nodes"] = outcome.nodes;
        if (outcome.status == vic::SearchStatus::Satisfiable) {
            rep.out["colorable"] = true;
            rep.say("colorable with ", *k, " colors (", outcome.nodes, " nodes)");
            save_witness(*outcome.witness, *k);
            return rep.finish(kOk, "colorable with k=" + std::to_string(*k));
        }
        if (outcome.status == vic::SearchStatus::Exhausted) {
            rep.out["colorable"] = false;
            rep.say("not colorable with ", *k, " colors (", outcome.nodes, " nodes)");
            return rep.finish(kOk, "not colorable with k=" + std::to_string(*k));
        }
        rep.say("undecided: node limit reached after ", outcome.nodes, " nodes");
        return rep.finish(kResource, "node limit reached");
    }

    vic::ExactValue val = vic::chi_vi(g, spread, node_limit);
    rep.out["nodes"] = val.nodes;
    if (!val.value) {
        rep.say("undecided: node limit reached after ", val.nodes, " nodes");
        return rep.finish(kResource, "node limit reached");
    }
    rep.out["value"] = *val.value;
    std::string name = spread ? "chi_vi_" + std::to_string(*spread) : "chi_vi";
    rep.say(name, " = ", *val.value, " (", val.nodes, " nodes)");
    save_witness(*val.witness, *val.value);
    return rep.finish(kOk, name + " = " + std::to_string(*val.value));
}

// --------------------------------------------------------------- verify ---

int cmd_verify(Reporter& rep, const std::string& graph_arg,
               const std::vector<std::string>& coloring_paths, std::optional<int> k_flag,
               std::optional<int> spread, int jobs) {
    GraphInput in = load_graph_arg(graph_arg);
    rep.manifest.add_input(in.label, in.bytes);
    const Graph& g = in.g;

    struct Entry {
        std::string line;
        json record;
        bool ok = false;
    };
    std::vector<Entry> entries(coloring_paths.size());
    std::vector<std::string> files(coloring_paths.size());
    for (std::size_t i = 0; i < coloring_paths.size(); ++i) {
        std::ifstream f(coloring_paths[i]);
        if (!f) throw std::runtime_error("cannot open coloring file: " + coloring_paths[i]);
        files[i] = slurp(f);
        rep.manifest.add_input(coloring_paths[i], files[i]);
    }

    auto check_one = [&](std::size_t i) {
        Entry& e = entries[i];
        e.record["file"] = coloring_paths[i];
        try {
            vic::LoadedColoring loaded = vic::coloring_from_json(g, json::parse(files[i]));
            int k = k_flag ? *k_flag
                           : loaded.k ? *loaded.k
                                      : vic::max_color(loaded.coloring);
            auto report = vic::verify(g, loaded.coloring, k, spread);
            e.ok = report.valid;
            e.record["k"] = k;
            e.record["valid"] = report.valid;
            e.record["colors_used"] = report.colors_used;
            std::ostringstream line;
            line << coloring_paths[i] << ": ";
            if (report.valid) {
                line << "ok (k=" << k << ", colors used " << report.colors_used;
                if (spread) line << ", spread <= " << *spread;
                line << ")";
            } else {
                line << "INVALID";
                json viols = json::array();
                int shown = 0;
                for (const auto& v : report.violations) {
                    viols.push_back({{"a", vic::to_string(v.a)},
                                     {"b", vic::to_string(v.b)},
                                     {"reason", v.reason}});
                    if (shown++ < 3)
                        line << "\n  clash " << vic::to_string(v.a) << " ~ " << vic::to_string(v.b)
                             << " (" << v.reason << ")";
                }
                for (int v : report.spread_over_cap) {
                    viols.push_back({{"spread_at", v}});
                    if (shown++ < 6) line << "\n  spread over cap at vertex " << v;
                }
                e.record["violations"] = std::move(viols);
            }
            e.line = line.str();
        } catch (const std::exception& ex) {
            e.ok = false;
            e.record["valid"] = false;
            e.record["error"] = ex.what();
            e.line = coloring_paths[i] + ": error: " + ex.what();
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1 || entries.size() <= 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) check_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int width = std::min<std::size_t>(jobs, entries.size());
        for (int t = 0; t < width; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < entries.size(); i = next++) check_one(i);
            });
        for (auto& th : pool) th.join();
    }

    int good = 0;
    json results = json::array();
    for (const auto& e : entries) {
        rep.say(e.line);
        results.push_back(e.record);
        good += e.ok;
    }
    rep.out["results"] = std::move(results);
    std::ostringstream sum;
    sum << good << "/" << entries.size() << " valid";
    rep.say(sum.str());
    return rep.finish(good == static_cast<int>(entries.size()) ? kOk : kMismatch, sum.str());
}

// ------------------------------------------------------------- classify ---

int cmd_classify(Reporter& rep, const std::string& graph_arg, std::optional<long long> budget) {
    GraphInput in = load_graph_arg(graph_arg);
    rep.manifest.add_input(in.label, in.bytes);
    vic::Classification res = vic::classify(in.g, budget);

    rep.out["lo"] = res.lo;
    rep.out["hi"] = res.hi;
    rep.out["nodes"] = res.nodes;
    if (res.vi_class) rep.out["class"] = *res.vi_class;
    json certs = json::array();
    for (const auto& cert : res.certificates) {
        json c;
        c["kind"] = vic::certificate_kind_name(cert.kind);
        c["lo"] = cert.lo;
        c["hi"] = cert.hi;
        switch (cert.kind) {
            case vic::CertificateKind::WitnessColoring:
                c["k"] = cert.k;
                rep.say("witness coloring with ", cert.k, " colors -> [", cert.lo, ",", cert.hi,
                        "]");
                break;
            case vic::CertificateKind::ForbiddenSubgraph: {
                c["pattern"] = vic::pattern_name(cert.embedding->pattern);
                c["mapping"] = cert.embedding->mapping;
                rep.say("forbidden subgraph (", vic::pattern_name(cert.embedding->pattern),
                        ") -> [", cert.lo, ",", cert.hi, "]");
                break;
            }
            case vic::CertificateKind::ExhaustedSearch:
                c["k"] = cert.k;
                c["nodes"] = cert.nodes;
                rep.say("exhausted search refutes ", cert.k, " colors after ", cert.nodes,
                        " nodes -> [", cert.lo, ",", cert.hi, "]");
                break;
        }
        certs.push_back(std::move(c));
    }
    rep.out["certificates"] = std::move(certs);

    std::ostringstream sum;
    if (res.vi_class) {
        sum << "chi_vi = " << res.hi << ", class " << *res.vi_class;
        rep.say("chi_vi = ", res.hi, "  (vi-class ", *res.vi_class, ")");
    } else {
        sum << "chi_vi in [" << res.lo << "," << res.hi << "]";
        rep.say("chi_vi in [", res.lo, ",", res.hi, "]  (budget exhausted before tight)");
    }
    return rep.finish(kOk, sum.str());
}

// ------------------------------------------------------------------ gen ---

int cmd_gen(Reporter& rep, const vic::GenSpec& spec, const std::string& out_path,
            const std::string& format) {
    std::ostringstream spec_text;
    spec_text << "n=" << spec.n << " delta=" << spec.delta_max << " girth=" << spec.girth_min
              << " two_connected=" << spec.two_connected << " seed=" << spec.seed;
    rep.manifest.add_input("spec", spec_text.str());
    rep.manifest.seed = spec.seed;

    Graph g = vic::gen_outerplanar(spec);
    std::string serialized =
        format == "edges" ? vic::format_edge_list(g) : graph_payload(g).dump(2);
    rep.out["graph"] = graph_payload(g);
    if (!out_path.empty()) {
        write_text_file(out_path, serialized);
        rep.say("graph written to ", out_path);
    } else if (!rep.json_mode) {
        std::cout << serialized << "\n";
    }
    auto gi = vic::girth(g);
    std::ostringstream sum;
    sum << "n=" << g.n << " m=" << g.edge_count() << " delta=" << g.max_degree() << " girth="
        << (gi ? std::to_string(*gi) : std::string("inf"));
    return rep.finish(kOk, sum.str());
}

// ---------------------------------------------------------------- power ---

int cmd_power(Reporter& rep, const std::string& graph_arg, const std::string& op, int parts,
              int exponent, const std::string& out_path, bool dot) {
    GraphInput in = load_graph_arg(graph_arg);
    rep.manifest.add_input(in.label, in.bytes);

    Graph result;
    if (op == "three-thirds") {
        vic::ThreeThirdsPower tt = vic::three_thirds_power(in.g);
        result = std::move(tt.graph);
        json labels = json::array();
        for (const auto& e : tt.element_of) labels.push_back(vic::to_string(e));
        rep.out["labels"] = std::move(labels);
        if (dot && !rep.json_mode) std::cout << vic::three_thirds_dot(in.g);
    } else if (op == "subdivide") {
        result = vic::subdivide(in.g, parts);
        if (dot && !rep.json_mode) std::cout << vic::graph_dot(result);
    } else {  // power
        result = vic::power(in.g, exponent);
        if (dot && !rep.json_mode) std::cout << vic::graph_dot(result);
    }

    rep.out["op"] = op;
    rep.out["graph"] = graph_payload(result);
    if (!out_path.empty()) {
        write_text_file(out_path, graph_payload(result).dump(2));
        rep.say("graph written to ", out_path);
    } else if (!rep.json_mode && !dot) {
        std::cout << graph_payload(result).dump(2) << "\n";
    }
    std::ostringstream sum;
    sum << op << ": n=" << result.n << " m=" << result.edge_count();
    return rep.finish(kOk, sum.str());
}

// --------------------------------------------------------------- detect ---

int cmd_detect(Reporter& rep, const std::string& graph_arg) {
    GraphInput in = load_graph_arg(graph_arg);
    rep.manifest.add_input(in.label, in.bytes);
    auto hits = vic::detect_forbidden(in.g);

    json arr = json::array();
    std::map<std::string, int> per_pattern;
    for (const auto& e : hits) {
        if (!vic::embedding_ok(in.g, e))
            throw std::logic_error("detect: produced embedding fails its own invariants");
        arr.push_back({{"pattern", vic::pattern_name(e.pattern)}, {"mapping", e.mapping}});
        per_pattern[vic::pattern_name(e.pattern)]++;
        if (!rep.json_mode) {
            std::cout << vic::pattern_name(e.pattern) << ":";
            for (std::size_t p = 0; p < e.mapping.size(); ++p)
                std::cout << " " << p << "->" << e.mapping[p];
            std::cout << "\n";
        }
    }
    rep.out["embeddings"] = std::move(arr);
    rep.out["count"] = hits.size();

    std::ostringstream sum;
    sum << hits.size() << " embeddings";
    if (!per_pattern.empty()) {
        sum << " (";
        bool first = true;
        for (const auto& [name, count] : per_pattern) {
            if (!first) sum << ", ";
            sum << name << " x" << count;
            first = false;
        }
        sum << ")";
    }
    rep.say(sum.str());
    return rep.finish(kOk, sum.str());
}

// ------------------------------------------------------------ reproduce ---

int cmd_reproduce(Reporter& rep) {
    struct Row {
        std::string name, expected, got;
        bool ok;
    };
    std::vector<Row> rows;
    auto add = [&](const std::string& name, const std::string& expected, const std::string& got) {
        rows.push_back({name, expected, got, expected == got});
    };
    auto join = [](const std::vector<int>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(xs[i]);
        }
        return s;
    };

    {
        std::vector<int> got;
        for (int n = 3; n <= 10; ++n) got.push_back(*vic::chi_vi(vic::cycle_graph(n)).value);
        add("chi_vi(C_3..C_10)", "5,4,5,5,5,4,5,5", join(got));
    }
    {
        std::vector<int> got;
        for (int n : {3, 5, 8}) got.push_back(*vic::chi_vi(vic::cycle_graph(n), 1).value);
        add("chi_vi_1(C_3,C_5,C_8)", "6,5,4", join(got));
    }
    {
        std::vector<int> got;
        for (int n = 2; n <= 5; ++n) got.push_back(*vic::chi_vi(vic::complete_graph(n)).value);
        add("chi_vi(K_2..K_5)", "4,5,6,7", join(got));
    }
    {
        std::vector<int> got;
        for (int n = 2; n <= 6; ++n) got.push_back(*vic::chi_vi(vic::path_graph(n)).value);
        add("chi_vi(P_2..P_6)", "4,4,4,4,4", join(got));
    }
    {
        // Grouped by figure: the two triangle colorings belong to one figure.
        std::map<std::string, bool> groups;
        for (const auto& f : vic::fixture_table()) {
            std::string key = f.name;
            if (auto pos = key.find("_spread"); pos != std::string::npos) key = key.substr(0, pos);
            bool good = vic::verify(f.graph, f.coloring, f.colors, f.spread).valid;
            auto [it, fresh] = groups.emplace(key, good);
            if (!fresh) it->second = it->second && good;
        }
        int pass = 0;
        for (const auto& [_, good] : groups) pass += good;
        add("fixtures verify",
            std::to_string(groups.size()) + "/" + std::to_string(groups.size()),
            std::to_string(pass) + "/" + std::to_string(groups.size()));
    }

    std::size_t name_w = 0, exp_w = 0;
    for (const auto& r : rows) {
        name_w = std::max(name_w, r.name.size());
        exp_w = std::max(exp_w, r.expected.size());
    }
    json jrows = json::array();
    int bad = 0;
    for (const auto& r : rows) {
        if (!rep.json_mode) {
            std::cout << r.name << std::string(name_w - r.name.size() + 2, ' ') << r.expected
                      << std::string(exp_w - r.expected.size() + 2, ' ') << r.got
                      << (r.ok ? "  ok" : "  MISMATCH") << "\n";
        }
        jrows.push_back({{"row", r.name}, {"expected", r.expected}, {"got", r.got}, {"ok", r.ok}});
        bad += !r.ok;
    }
    rep.out["rows"] = std::move(jrows);

    std::ostringstream sum;
    sum << (rows.size() - bad) << "/" << rows.size() << " rows match";
    rep.say(sum.str());
    return rep.finish(bad == 0 ? kOk : kMismatch, sum.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vi-simultaneous coloring toolkit"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable JSON on stdout");

    // embed
    auto* embed = app.add_subcommand("embed", "recognize an outerplanar graph and print its embedding");
    std::string embed_graph;
    embed->add_option("graph", embed_graph, "graph file, '-', or C<n>/K<n>/P<n>")->required();
    embed->fallthrough();

    // color
    auto* color = app.add_subcommand("color", "construct a coloring with proven palette bounds");
    std::string color_graph, color_strategy = "auto", color_out;
    int color_spread = 2;
    std::optional<int> color_degeneracy;
    bool color_explain = false;
    color->add_option("graph", color_graph)->required();
    color->add_option("--spread", color_spread, "spread cap to aim for (1 or 2)")
        ->check(CLI::Range(1, 2));
    color->add_option("--strategy", color_strategy, "auto|outerplanar|girth|degenerate")
        ->check(CLI::IsMember({"auto", "outerplanar", "girth", "degenerate"}));
    color->add_option("--degeneracy", color_degeneracy, "degeneracy bound for --strategy degenerate");
    color->add_flag("--explain", color_explain, "print the reduction trace");
    color->add_option("-o,--out", color_out, "write the coloring JSON here");
    color->fallthrough();

    // exact
    auto* exact = app.add_subcommand("exact", "exact chi_vi by branch and bound");
    std::string exact_graph, exact_witness;
    std::optional<int> exact_spread, exact_k;
    std::optional<long long> exact_nodes;
    exact->add_option("graph", exact_graph)->required();
    exact->add_option("--spread", exact_spread, "spread cap")->check(CLI::PositiveNumber);
    exact->add_option("--k", exact_k, "decide k-colorability instead of optimizing")
        ->check(CLI::PositiveNumber);
    exact->add_option("--node-limit", exact_nodes, "search node budget (default: VIC_NODE_LIMIT)");
    exact->add_option("--witness", exact_witness, "write the witness coloring here");
    exact->fallthrough();

    // verify
    auto* verify = app.add_subcommand("verify", "check coloring files against a graph");
    std::string verify_graph;
    std::vector<std::string> verify_colorings;
    std::optional<int> verify_k, verify_spread;
    int verify_jobs = 1;
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("colorings", verify_colorings, "coloring JSON files")->required();
    verify->add_option("--k", verify_k, "palette size to check against (default: file's k)");
    verify->add_option("--spread", verify_spread, "also enforce this spread cap")
        ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", verify_jobs, "parallel verification threads")
        ->check(CLI::PositiveNumber);
    verify->fallthrough();

    // classify
    auto* classify = app.add_subcommand("classify", "bound chi_vi and report the vi-class");
    std::string classify_graph;
    std::optional<long long> classify_budget;
    classify->add_option("graph", classify_graph)->required();
    classify->add_option("--budget", classify_budget,
                         "exact-search node budget (default: VIC_NODE_LIMIT)");
    classify->fallthrough();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a constrained random outerplanar graph");
    vic::GenSpec gen_spec;
    std::string gen_out, gen_format = "json";
    gen->add_option("--n", gen_spec.n, "vertex count")->required();
    gen->add_option("--delta", gen_spec.delta_max, "max degree cap");
    gen->add_option("--girth", gen_spec.girth_min, "min girth");
    gen->add_flag("--two-connected", gen_spec.two_connected, "require 2-connectivity");
    gen->add_option("--seed", gen_spec.seed, "RNG seed");
    gen->add_option("-o,--out", gen_out, "write the graph here");
    gen->add_option("--format", gen_format, "json|edges")
        ->check(CLI::IsMember({"json", "edges"}));
    gen->fallthrough();

    // power
    auto* power = app.add_subcommand("power", "graph transforms: three-thirds power and friends");
    std::string power_graph, power_op = "three-thirds", power_out;
    int power_parts = 3, power_exponent = 3;
    bool power_dot = false;
    power->add_option("graph", power_graph)->required();
    power->add_option("--op", power_op, "three-thirds|subdivide|power")
        ->check(CLI::IsMember({"three-thirds", "subdivide", "power"}));
    power->add_option("--parts", power_parts, "path length for subdivide")
        ->check(CLI::PositiveNumber);
    power->add_option("--exponent", power_exponent, "distance for power")
        ->check(CLI::PositiveNumber);
    power->add_option("-o,--out", power_out, "write the result graph here");
    power->add_flag("--dot", power_dot, "emit DOT instead of JSON");
    power->fallthrough();

    // detect
    auto* detect = app.add_subcommand("detect", "find forbidden-subgraph certificates");
    std::string detect_graph;
    detect->add_option("graph", detect_graph)->required();
    detect->fallthrough();

    // reproduce
    auto* reproduce =
        app.add_subcommand("reproduce", "recompute the headline values and compare");
    reproduce->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsage;
    }

    Reporter rep;
    rep.json_mode = json_mode;
    try {
        std::optional<long long> env_limit = env_node_limit();
        if (embed->parsed()) {
            rep.manifest.command = "embed";
            return cmd_embed(rep, embed_graph);
        }
        if (color->parsed()) {
            rep.manifest.command = "color";
            return cmd_color(rep, color_graph, color_spread, color_strategy, color_degeneracy,
                             color_explain, color_out);
        }
        if (exact->parsed()) {
            rep.manifest.command = "exact";
            auto limit = exact_nodes ? exact_nodes : env_limit;
            if (limit && *limit <= 0) limit.reset();
            return cmd_exact(rep, exact_graph, exact_spread, exact_k, limit, exact_witness);
        }
        if (verify->parsed()) {
            rep.manifest.command = "verify";
            return cmd_verify(rep, verify_graph, verify_colorings, verify_k, verify_spread,
                              verify_jobs);
        }
        if (classify->parsed()) {
            rep.manifest.command = "classify";
            auto budget = classify_budget ? classify_budget : env_limit;
            if (budget && *budget <= 0) budget.reset();
            return cmd_classify(rep, classify_graph, budget);
        }
        if (gen->parsed()) {
            rep.manifest.command = "gen";
            return cmd_gen(rep, gen_spec, gen_out, gen_format);
        }
        if (power->parsed()) {
            rep.manifest.command = "power";
            return cmd_power(rep, power_graph, power_op, power_parts, power_exponent, power_out,
                             power_dot);
        }
        if (detect->parsed()) {
            rep.manifest.command = "detect";
            return cmd_detect(rep, detect_graph);
        }
        if (reproduce->parsed()) {
            rep.manifest.command = "reproduce";
            return cmd_reproduce(rep);
        }
        std::cerr << "vic: no command\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "vic: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "vic: error: " << e.what() << "\n";
        rep.manifest.wall_seconds = rep.clock.seconds();
        rep.manifest.summary = std::string("error: ") + e.what();
        std::cerr << rep.manifest.to_json().dump() << "\n";
        return kMismatch;
    }
}
