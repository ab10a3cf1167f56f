#include "cliquecolor/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cliquecolor/cliques.hpp"
#include "cliquecolor/graph6.hpp"
#include "cliquecolor/recognize.hpp"
#include "cliquecolor/solver.hpp"
#include "cliquecolor/vertex_coloring.hpp"

namespace cliquecolor {

namespace {

const std::set<std::string> kFamilies{"k33free-strong3", "clawfree-k33free-2",
                                      "trianglefree-chi", "alpha-bound"};

int pool_size(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CLIQUECOLOR_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
}

// chi computations honor the per-graph deadline; predicates and alpha are
// polynomial-ish at atlas scale and run unguarded.
void examine(const std::string& family, const Graph& g, SweepRow& row, double timeout_seconds) {
    auto start = std::chrono::steady_clock::now();
    CancelToken cancel;
    cancel.has_deadline = true;
    cancel.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(timeout_seconds));
    row.graph6 = encode_graph6(g);
    row.n = g.n();
    row.claw_free = is_claw_free(g).verdict;
    row.triangle_free = is_triangle_free(g).verdict;
    row.k33_minor_free = is_k33_minor_free(g).verdict;
    row.odd_cycle = is_odd_cycle(g).verdict;
    row.alpha = independence_number(g).alpha;
    SolveResult chi = solve_clique_coloring(g, false, {}, cancel);
    SolveResult strong = solve_clique_coloring(g, true, {}, cancel);
    auto stop_clock = [&] {
        row.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    };
    if (chi.status == SolveStatus::kCancelled || strong.status == SolveStatus::kCancelled) {
        row.status = "timeout";
        stop_clock();
        return;
    }
    if (chi.status != SolveStatus::kFound || strong.status != SolveStatus::kFound) {
        row.status = "violation";
        row.detail = "solver found no coloring at k = n";
        stop_clock();
        return;
    }
    row.chi_c = chi.k;
    row.strong_chi_c = strong.k;
    row.status = "ok";

    if (family == "k33free-strong3") {
        row.in_family = row.k33_minor_free;
        if (row.in_family && row.strong_chi_c > 3) {
            row.status = "violation";
            row.detail = "strong_chi_c = " + std::to_string(row.strong_chi_c) + " > 3";
        }
    } else if (family == "clawfree-k33free-2") {
        bool big_odd_cycle = row.odd_cycle && g.n() > 3;
        row.in_family = row.claw_free && row.k33_minor_free && !big_odd_cycle;
        if (row.in_family && row.chi_c > 2) {
            row.status = "violation";
            row.detail = "chi_c = " + std::to_string(row.chi_c) + " > 2";
        } else if (row.claw_free && row.k33_minor_free && big_odd_cycle) {
            if (row.chi_c != 3) {
                row.status = "violation";
                row.detail = "odd cycle expected chi_c = 3, got " + std::to_string(row.chi_c);
            } else {
                row.status = "exempt";
                row.detail = "odd-cycle-exception";
            }
        }
    } else if (family == "trianglefree-chi") {
        row.in_family = row.triangle_free;
        if (row.in_family) {
            int chrom = chromatic_number(g).chi;
            if (row.chi_c != chrom) {
                row.status = "violation";
                row.detail = "chi_c = " + std::to_string(row.chi_c) +
                             " != chi = " + std::to_string(chrom);
            }
        }
    } else if (family == "alpha-bound") {
        bool is_c5 = row.odd_cycle && g.n() == 5;
        row.in_family = row.alpha >= 2 && !is_c5;
        if (row.in_family && row.chi_c > row.alpha) {
            row.status = "violation";
            row.detail = "chi_c = " + std::to_string(row.chi_c) + " > alpha = " +
                         std::to_string(row.alpha);
        } else if (is_c5) {
            if (row.chi_c != 3) {
                row.status = "violation";
                row.detail = "C5 expected chi_c = 3, got " + std::to_string(row.chi_c);
            } else {
                row.status = "exempt";
                row.detail = "c5-exception";
            }
        }
    }
    stop_clock();
}

}  // namespace

SweepReport run_sweep(const SweepOptions& options) {
    if (!kFamilies.count(options.family))
        throw std::invalid_argument("run_sweep: unknown family " + options.family);
    auto sweep_start = std::chrono::steady_clock::now();
    SweepReport report;
    report.family = options.family;
    report.n_max = options.n_max;
    std::vector<const Graph*> selected;
    for (const Graph& g : options.graphs)
        if (g.n() <= options.n_max) selected.push_back(&g);
    report.rows.resize(selected.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= selected.size()) return;
            examine(options.family, *selected[i], report.rows[i], options.timeout_seconds);
        }
    };
    int threads = pool_size(options.threads);
    if (size_t(threads) > selected.size()) threads = int(selected.size());
    if (threads < 1) threads = 1;
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const SweepRow& a, const SweepRow& b) { return a.graph6 < b.graph6; });
    report.examined = static_cast<long long>(report.rows.size());
    for (const SweepRow& row : report.rows) {
        if (row.status == "violation")
            report.violations.push_back({row.graph6, options.family, row.detail});
        else if (row.status == "timeout")
            report.timeouts.push_back(row.graph6);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();
    return report;
}

std::string sweep_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "graph6,n,in_family,claw_free,triangle_free,k33_minor_free,odd_cycle,"
           "chi_c,strong_chi_c,alpha,status,detail,elapsed_ms\n";
    for (const SweepRow& row : report.rows) {
        out << row.graph6 << ',' << row.n << ',' << int(row.in_family) << ','
            << int(row.claw_free) << ',' << int(row.triangle_free) << ','
            << int(row.k33_minor_free) << ',' << int(row.odd_cycle) << ',' << row.chi_c << ','
            << row.strong_chi_c << ',' << row.alpha << ',' << row.status << ',' << row.detail
            << ',';
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", row.elapsed_ms);
        out << buf << '\n';
    }
    return out.str();
}

}  // namespace cliquecolor
