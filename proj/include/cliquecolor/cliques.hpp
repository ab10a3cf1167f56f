#pragma once

#include <array>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// Hyperedges are the maximal cliques of size >= 2, each sorted ascending,
// the list sorted lexicographically.  This is the hypergraph H(G) whose
// proper vertex colorings are exactly the clique colorings of G.
struct CliqueHypergraph {
    std::vector<VertexSet> edges;
};

// All maximal cliques (Bron-Kerbosch with a greatest-candidate-degree
// pivot), singletons included, canonically sorted as above.
std::vector<VertexSet> maximal_cliques(const Graph& g);

CliqueHypergraph clique_hypergraph(const Graph& g);

// Ascending triples (u < v < w), list in lexicographic order.
std::vector<std::array<int, 3>> triangles(const Graph& g);

// Exact independence number with witness, by max-clique branch and bound on
// the complement with a greedy-coloring upper bound.  Sized for n <= ~40.
struct IndependenceResult {
    int alpha = 0;
    VertexSet witness;
};
IndependenceResult independence_number(const Graph& g);

}  // namespace cliquecolor
