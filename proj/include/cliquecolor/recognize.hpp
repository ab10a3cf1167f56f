#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// Uniform result for the class predicates.  Witness layout depends on the
// predicate; every witness can be re-verified against the graph by direct
// adjacency checks (tests do).  Null when there is nothing to show.
struct RecognitionReport {
    std::string predicate;
    bool verdict = false;
    nlohmann::json witness;
};

// Claw = induced K1,3.  Witness on false: {"center", "leaves"}.
RecognitionReport is_claw_free(const Graph& g);

// Witness on false: {"triangle"}.
RecognitionReport is_triangle_free(const Graph& g);

// True iff g is connected, 2-regular and n is odd (n = 3 included).
RecognitionReport is_odd_cycle(const Graph& g);

// Witness on true: {"rotation"} (a combinatorial embedding satisfying
// Euler's formula); on false: a classified Kuratowski subdivision
// {"pattern", "branch", "paths"}.
RecognitionReport is_planar(const Graph& g);

// Exact backtracking search; throws std::invalid_argument when n exceeds the
// supported size (use is_k33_minor_free instead).  Witness on true:
// {"parts", "paths"}: the 3+3 branch vertices and the nine paths.
RecognitionReport find_k33_subdivision(const Graph& g);

// Verdict from the Wagner decomposition.  Witness on false: the offending
// 3-connected torso {"torso", "torso_graph6", "virtual_pairs"} plus, when
// the whole graph is small enough, a direct subdivision {"parts", "paths"}.
RecognitionReport is_k33_minor_free(const Graph& g);

// Induced-subgraph search over the nine forbidden graphs.  Witness on
// false: {"forbidden_index", "embedding"} with embedding[i] = host vertex
// playing pattern vertex i.
RecognitionReport is_line_graph(const Graph& g);

// Prismatic: every vertex outside any triangle has exactly one neighbor in
// it.  Witness on false: {"triangle", "vertex", "neighbor_count"}.
RecognitionReport is_prismatic(const Graph& g);
RecognitionReport is_antiprismatic(const Graph& g);

// First vertex (ascending) whose non-neighbors are pairwise adjacent.
// Witness on true: {"vertex"}.
RecognitionReport find_singular_vertex(const Graph& g);

// First adjacent pair u < v with N(u)\{v} = N(v)\{u}.  Witness on true:
// {"pair"}.
RecognitionReport find_twins(const Graph& g);

// Injective adjacency- and nonadjacency-preserving embedding of pattern
// into host, or empty if none.  Deterministic first-found, ascending.
std::vector<int> find_induced_embedding(const Graph& host, const Graph& pattern);

}  // namespace cliquecolor
