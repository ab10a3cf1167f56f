#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cliquecolor/atlas.hpp"
#include "cliquecolor/graph6.hpp"
#include "cliquecolor/recognize.hpp"
#include "cliquecolor/solver.hpp"
#include "cliquecolor/structural.hpp"
#include "cliquecolor/sweep.hpp"
#include "cliquecolor/wagner.hpp"

namespace {

using namespace cliquecolor;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitOddCycle = 3;
constexpr int kExitViolations = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Accepts a one-line graph6 file or a whitespace-separated edge list
// ("u v" per line); vertex count of an edge list is max id + 1.
Graph parse_graph_text(const std::string& text) {
    std::istringstream lines(text);
    std::string first;
    while (std::getline(lines, first)) {
        size_t pos = first.find_first_not_of(" \t\r");
        if (pos != std::string::npos) {
            first = first.substr(pos);
            break;
        }
        first.clear();
    }
    if (first.empty()) throw std::runtime_error("empty graph file");
    if (first.find_first_of(" \t") == std::string::npos) return parse_graph6(first);
    std::istringstream all(text);
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    long long u, v;
    while (all >> u >> v) {
        if (u < 0 || v < 0 || u == v) throw std::runtime_error("bad edge-list pair");
        edges.push_back({int(u), int(v)});
        n = std::max(n, int(std::max(u, v)) + 1);
    }
    if (edges.empty()) throw std::runtime_error("no edges in edge-list file");
    return Graph::from_edge_list(n, edges);
}

Graph read_graph_file(const std::string& path) { return parse_graph_text(read_file(path)); }

CancelToken deadline_token(double seconds) {
    CancelToken token;
    token.has_deadline = true;
    token.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(seconds));
    return token;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

int cmd_chi(const std::string& file, bool strong, int max_k, double timeout) {
    Graph g = read_graph_file(file);
    ColoringConstraint constraint;
    constraint.max_colors = max_k;
    SolveResult r = solve_clique_coloring(g, strong, constraint, deadline_token(timeout));
    if (r.status == SolveStatus::kCancelled) {
        std::cerr << "timed out after " << timeout << " s\n";
        return kExitInfeasible;
    }
    if (r.status != SolveStatus::kFound) {
        std::cerr << "infeasible with max-k = " << max_k << "\n";
        return kExitInfeasible;
    }
    VerifyResult check = strong ? verify_strong_clique_coloring(g, r.coloring)
                                : verify_clique_coloring(g, r.coloring);
    if (!check.ok) throw std::logic_error("witness failed re-verification");
    std::cout << (strong ? "strong chi_c = " : "chi_c = ") << r.k << "\n";
    std::cout << nlohmann::json(r.coloring).dump() << "\n";
    return kExitOk;
}

int cmd_color(const std::string& file, const std::string& method, bool trace,
              double timeout) {
    nlohmann::json out;
    Graph g;
    Coloring coloring;
    bool strong = false;
    if (method == "wagner") {
        strong = true;
        WagnerSequence seq;
        std::string text = read_file(file);
        size_t pos = text.find_first_not_of(" \t\r\n");
        if (pos != std::string::npos && text[pos] == '{') {
            seq = sequence_from_json(nlohmann::json::parse(text));
        } else {
            Graph input = parse_graph_text(text);
            DecomposeResult dec = decompose(input);
            if (!dec.ok) {
                std::cerr << "input is not K3,3-minor-free; torso: "
                          << encode_graph6(dec.torso) << "\n";
                return kExitInfeasible;
            }
            seq = dec.seq;
        }
        StructuralResult result = strong_three_color(seq);
        g = compose(seq).graph;
        coloring = result.coloring;
        if (trace) out["trace"] = result.trace.to_json();
    } else if (method == "exact") {
        g = read_graph_file(file);
        SolveResult r = solve_clique_coloring(g, false, {}, deadline_token(timeout));
        if (r.status == SolveStatus::kCancelled) {
            std::cerr << "timed out after " << timeout << " s\n";
            return kExitInfeasible;
        }
        if (r.status != SolveStatus::kFound) return kExitInfeasible;
        coloring = r.coloring;
    } else if (method == "singular") {
        g = read_graph_file(file);
        coloring = two_color_singular(g);
    } else if (method == "clawfree2") {
        g = read_graph_file(file);
        coloring = two_color_claw_free(g);
    } else {
        std::cerr << "unknown method " << method << "\n";
        return kExitUsage;
    }
    VerifyResult check =
        strong ? verify_strong_clique_coloring(g, coloring) : verify_clique_coloring(g, coloring);
    if (!check.ok) throw std::logic_error("coloring failed re-verification");
    out["colors"] = coloring;
    out["k"] = coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end());
    std::cout << out.dump() << "\n";
    return kExitOk;
}

RecognitionReport run_predicate(const std::string& name, const Graph& g) {
    if (name == "claw-free") return is_claw_free(g);
    if (name == "triangle-free") return is_triangle_free(g);
    if (name == "odd-cycle") return is_odd_cycle(g);
    if (name == "planar") return is_planar(g);
    if (name == "k33-subdivision") return find_k33_subdivision(g);
    if (name == "k33-minor-free") return is_k33_minor_free(g);
    if (name == "line-graph") return is_line_graph(g);
    if (name == "prismatic") return is_prismatic(g);
    if (name == "antiprismatic") return is_antiprismatic(g);
    if (name == "singular-vertex") return find_singular_vertex(g);
    if (name == "twins") return find_twins(g);
    throw std::runtime_error("unknown predicate " + name);
}

nlohmann::json report_json(const RecognitionReport& report) {
    nlohmann::json j = {{"predicate", report.predicate}, {"verdict", report.verdict}};
    if (!report.witness.is_null()) j["witness"] = report.witness;
    return j;
}

int cmd_recognize(const std::string& file, bool all, const std::string& predicate) {
    Graph g = read_graph_file(file);
    if (all) {
        nlohmann::json out = nlohmann::json::array();
        for (const char* name :
             {"claw-free", "triangle-free", "odd-cycle", "planar", "k33-minor-free",
              "line-graph", "prismatic", "antiprismatic", "singular-vertex", "twins"})
            out.push_back(report_json(run_predicate(name, g)));
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (predicate.empty()) {
        std::cerr << "need --all or --predicate NAME\n";
        return kExitUsage;
    }
    std::cout << report_json(run_predicate(predicate, g)).dump(2) << "\n";
    return kExitOk;
}

int cmd_generate(int pieces, uint64_t seed, const std::string& out_path) {
    RandomSequenceParams params;
    params.piece_count = pieces;
    WagnerSequence seq = random_sequence(seed, params);
    nlohmann::json j = sequence_to_json(seq);
    j["composed_graph6"] = encode_graph6(compose(seq).graph);
    write_output(out_path, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_decompose(const std::string& file, const std::string& out_path) {
    Graph g = read_graph_file(file);
    DecomposeResult dec = decompose(g);
    if (!dec.ok) {
        nlohmann::json j = {{"ok", false},
                            {"torso_graph6", encode_graph6(dec.torso)},
                            {"torso_vertices", dec.torso_origin}};
        nlohmann::json pairs = nlohmann::json::array();
        for (auto [a, b] : dec.torso_virtual_pairs) pairs.push_back({a, b});
        j["virtual_pairs"] = pairs;
        write_output(out_path, j.dump(2) + "\n");
        return kExitInfeasible;
    }
    nlohmann::json j = sequence_to_json(dec.seq);
    j["ok"] = true;
    j["original_to_composed"] = dec.original_to_composed;
    write_output(out_path, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_sweep(const std::string& family, int n_max, const std::string& atlas_path,
              const std::string& out_csv, double timeout, int threads) {
    static const std::vector<std::string> families = {"k33free-strong3", "clawfree-k33free-2",
                                                      "trianglefree-chi", "alpha-bound"};
    if (std::find(families.begin(), families.end(), family) == families.end()) {
        std::cerr << "unknown family " << family << "\n";
        return kExitUsage;
    }
    SweepOptions options;
    options.family = family;
    options.n_max = n_max;
    options.timeout_seconds = timeout;
    options.threads = threads;
    if (!atlas_path.empty()) {
        options.graphs = parse_graph6_file(read_file(atlas_path));
    } else {
        if (n_max > 8) {
            std::cerr << "internal atlas covers n <= 8; pass --atlas for larger sweeps\n";
            return kExitUsage;
        }
        for (int n = 1; n <= n_max; ++n)
            for (Graph& g : connected_graph_atlas(n)) options.graphs.push_back(std::move(g));
    }
    SweepReport report = run_sweep(options);
    if (!out_csv.empty()) write_output(out_csv, sweep_csv(report));
    std::cout << "family " << report.family << ": examined " << report.examined << ", violations "
              << report.violations.size() << ", timeouts " << report.timeouts.size()
              << ", elapsed " << report.elapsed_seconds << " s\n";
    for (const SweepViolation& v : report.violations)
        std::cout << "violation " << v.graph6 << ": " << v.detail << "\n";
    if (!report.violations.empty()) return kExitViolations;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique-coloring toolkit for K3,3-minor-free graphs"};
    app.require_subcommand(1);

    std::string file, predicate, method = "exact", family, atlas_path, out_path;
    bool strong = false, trace = false, all = false;
    int max_k = 0, pieces = 4, n_max = 7, threads = 0;
    double timeout = 10.0;
    uint64_t seed = 0;

    CLI::App* chi = app.add_subcommand("chi", "exact clique chromatic number");
    chi->add_option("file", file)->required();
    chi->add_flag("--strong", strong, "forbid monochromatic triangles too");
    chi->add_option("--max-k", max_k, "give up above this color count");
    chi->add_option("--timeout", timeout, "per-solve timeout in seconds");

    CLI::App* color = app.add_subcommand("color", "produce a verified coloring");
    color->add_option("file", file)->required();
    color->add_option("--method", method, "exact | wagner | singular | clawfree2");
    color->add_flag("--trace", trace, "include the per-piece trace (wagner)");
    color->add_option("--timeout", timeout, "per-solve timeout in seconds");

    CLI::App* recognize = app.add_subcommand("recognize", "class membership with witnesses");
    recognize->add_option("file", file)->required();
    recognize->add_flag("--all", all, "run every predicate");
    recognize->add_option("--predicate", predicate, "single predicate name");

    CLI::App* generate = app.add_subcommand("generate", "random composition sequence");
    generate->add_option("--pieces", pieces, "number of pieces");
    generate->add_option("--seed", seed, "random seed");
    generate->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* decomp = app.add_subcommand("decompose", "recover a composition sequence");
    decomp->add_option("file", file)->required();
    decomp->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "atlas verification sweep");
    sweep->add_option("--family", family,
                      "k33free-strong3 | clawfree-k33free-2 | trianglefree-chi | alpha-bound")
        ->required();
    sweep->add_option("--n-max", n_max, "largest vertex count");
    sweep->add_option("--atlas", atlas_path, "graph6 file (default: internal atlas)");
    sweep->add_option("--out", out_path, "CSV output path");
    sweep->add_option("--timeout", timeout, "per-graph timeout in seconds");
    sweep->add_option("--threads", threads, "worker count (default CLIQUECOLOR_THREADS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (chi->parsed()) return cmd_chi(file, strong, max_k, timeout);
        if (color->parsed()) return cmd_color(file, method, trace, timeout);
        if (recognize->parsed()) return cmd_recognize(file, all, predicate);
        if (generate->parsed()) return cmd_generate(pieces, seed, out_path);
        if (decomp->parsed()) return cmd_decompose(file, out_path);
        if (sweep->parsed()) return cmd_sweep(family, n_max, atlas_path, out_path, timeout, threads);
    } catch (const cliquecolor::OddCycleException& e) {
        std::cerr << e.what() << "\n";
        return kExitOddCycle;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
