#pragma once

#include <string>
#include <vector>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// Atlas sweep families:
//   k33free-strong3     every K3,3-minor-free graph has strong chi_c <= 3
//   clawfree-k33free-2  claw-free + K3,3-minor-free and not an odd cycle of
//                       order > 3 implies chi_c <= 2; such odd cycles must
//                       have chi_c = 3 exactly
//   trianglefree-chi    triangle-free implies chi_c equals the chromatic
//                       number
//   alpha-bound         alpha >= 2 and not C5 implies chi_c <= alpha; C5
//                       must have chi_c = 3
struct SweepOptions {
    std::string family;
    int n_max = 7;
    std::vector<Graph> graphs;    // input atlas; the CLI fills this
    double timeout_seconds = 10;  // per graph
    int threads = 0;              // 0 = CLIQUECOLOR_THREADS, else hardware
};

struct SweepRow {
    std::string graph6;
    int n = 0;
    bool in_family = false;
    bool claw_free = false;
    bool triangle_free = false;
    bool k33_minor_free = false;
    bool odd_cycle = false;
    int chi_c = -1;         // -1 when timed out
    int strong_chi_c = -1;
    int alpha = -1;
    std::string status;     // ok | timeout | violation | exempt
    std::string detail;
    double elapsed_ms = 0;
};

struct SweepViolation {
    std::string graph6;
    std::string predicate;
    std::string detail;
};

struct SweepReport {
    std::string family;
    int n_max = 0;
    long long examined = 0;
    std::vector<SweepRow> rows;              // sorted by graph6 string
    std::vector<SweepViolation> violations;  // empty on success
    std::vector<std::string> timeouts;       // graph6 of timed-out graphs
    double elapsed_seconds = 0;
};

// Runs the family check over options.graphs with a bounded worker pool.
// Throws std::invalid_argument for an unknown family name.
SweepReport run_sweep(const SweepOptions& options);

// Deterministic CSV (rows sorted by graph6; the trailing elapsed_ms column
// is the only nondeterministic one).
std::string sweep_csv(const SweepReport& report);

}  // namespace cliquecolor
