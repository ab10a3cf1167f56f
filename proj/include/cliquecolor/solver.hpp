#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <map>

#include "cliquecolor/cliques.hpp"
#include "cliquecolor/graph.hpp"

namespace cliquecolor {

struct VerifyResult {
    bool ok = true;
    VertexSet violation;  // first monochromatic hyperedge in canonical order
};

// Checks that every maximal clique of size >= 2 receives two colors.  Throws
// std::invalid_argument on length mismatch or colors outside 1..n.
VerifyResult verify_clique_coloring(const Graph& g, const Coloring& c);

// Additionally rejects monochromatic triangles (checked after the maximal
// cliques, in lexicographic order).
VerifyResult verify_strong_clique_coloring(const Graph& g, const Coloring& c);

struct ColoringConstraint {
    std::map<int, int> fixed;  // vertex -> color, colors start at 1
    int max_colors = 0;        // 0 = unbounded
};

struct CancelToken {
    std::atomic<bool>* flag = nullptr;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    bool cancelled() const {
        if (flag && flag->load(std::memory_order_relaxed)) return true;
        if (has_deadline && std::chrono::steady_clock::now() >= deadline) return true;
        return false;
    }
};

enum class SolveStatus { kFound, kInfeasible, kCancelled };

struct SolveResult {
    SolveStatus status = SolveStatus::kInfeasible;
    int k = 0;
    Coloring coloring;
};

// Exact minimum clique coloring by iterative deepening on k, branching in
// ascending vertex order and lowest color first, so the witness returned for
// the minimal k is the lexicographically smallest one.  strong adds triangle
// hyperedges.  With a constraint, the fixed colors are honored and k never
// exceeds max_colors; kInfeasible then means no extension exists within the
// bound.
SolveResult solve_clique_coloring(const Graph& g, bool strong,
                                  const ColoringConstraint& constraint = {},
                                  const CancelToken& cancel = {});

// Low-level entry: color so that every listed hyperedge (size >= 2, vertices
// sorted) receives two colors, using exactly the budget k and honoring fixed
// colors.  The structural pipeline uses this for glue steps whose hyperedge
// set is not literally the clique hypergraph.
SolveResult solve_hyperedge_coloring(const Graph& g, std::vector<VertexSet> hyperedges,
                                     int k, const std::map<int, int>& fixed,
                                     const CancelToken& cancel = {});

struct ChiResult {
    int chi = 0;
    Coloring coloring;
};

ChiResult clique_chromatic_number(const Graph& g, const CancelToken& cancel = {});
ChiResult strong_clique_chromatic_number(const Graph& g, const CancelToken& cancel = {});

// Strong 3-coloring of a planar graph with the colors of one triangle fixed.
// The fixed colors must lie in 1..3 and must not be all equal.  Throws
// std::invalid_argument on bad input (not a triangle, colors out of range,
// monochromatic triangle, nonplanar graph) and std::logic_error if no
// extension exists.
Coloring extend_fixed_triangle(const Graph& g, const std::array<int, 3>& triangle,
                               const std::array<int, 3>& colors);

}  // namespace cliquecolor
