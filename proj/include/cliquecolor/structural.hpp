#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cliquecolor/graph.hpp"
#include "cliquecolor/wagner.hpp"

namespace cliquecolor {

// One induction step of the structural strong-3-coloring.  case_label is the
// branch taken: base-planar, base-K5, glue-0sum, glue-1sum, glue-K5,
// glue-edge-distinct-maximal, glue-edge-distinct-triangle,
// glue-equal-contract-no-triangle, glue-equal-contract-triangle, or
// glue-nonadjacent-distinct.  renaming maps color c to renaming[c-1]
// (identity when no renaming happened).  note records a fallback, e.g. when
// the forced outer triangle had to be relaxed to the anchors alone.
struct TraceStep {
    int piece = 0;
    std::string case_label;
    std::array<int, 3> renaming{1, 2, 3};
    std::string note;
};

struct ColoringTrace {
    std::vector<TraceStep> steps;
    nlohmann::json to_json() const;
};

struct StructuralResult {
    Coloring coloring;  // indexed by compose(seq) vertex ids
    ColoringTrace trace;
};

// Strong 3-clique-coloring of compose(seq), built piece by piece along the
// sequence.  Before coloring, the sequence is normalized so that an edge
// glue whose identified edge is absent from the final graph becomes a
// NonadjacentPair glue with the virtual edge stripped from every piece that
// carried it; prefixes of the normalized sequence are induced subgraphs of
// the final graph, which is what the per-step maximality reasoning needs.
// Throws std::invalid_argument when validate(seq) fails and std::logic_error
// if a guaranteed extension step turns out infeasible.
StructuralResult strong_three_color(const WagnerSequence& seq);

// Explicit 2-clique-coloring for graphs with a singular vertex (a vertex
// whose non-neighbors are pairwise adjacent).  Requires the graph to have no
// K3,3 minor and independence number at most 3; alpha <= 2 delegates to the
// exact solver, alpha = 3 runs the explicit construction.  Throws
// std::invalid_argument when a precondition fails (the message says which)
// and std::logic_error if the guaranteed construction fails to verify.
Coloring two_color_singular(const Graph& g);

// Claw-free K3,3-minor-free graphs are 2-clique-colorable except odd cycles
// of order > 3, which need 3 colors.
class OddCycleException : public std::runtime_error {
public:
    explicit OddCycleException(int n)
        : std::runtime_error("odd cycle of order " + std::to_string(n) +
                             " has clique chromatic number 3") {}
};

// 2-clique-coloring for claw-free inputs with no K3,3 minor.  Throws
// OddCycleException on odd cycles of order > 3, std::invalid_argument when
// the input is not claw-free or has a K3,3 minor, and std::logic_error if
// the guaranteed 2-coloring search fails.
Coloring two_color_claw_free(const Graph& g);

}  // namespace cliquecolor
