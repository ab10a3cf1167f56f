#pragma once

#include <string>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// A subdivision embedding: branch[i] hosts pattern vertex i, and for each
// pattern edge there is one host path (endpoints included).  Paths are
// pairwise internally disjoint and avoid all branch vertices internally.
struct SubdivisionWitness {
    bool found = false;
    std::string pattern;                  // "K5" or "K3,3"
    std::vector<int> branch;
    std::vector<std::vector<int>> paths;  // aligned with pattern edge order
};

// Backtracking search in ascending vertex order; first witness found is
// deterministic.  Intended for hosts up to n ~ 14.
SubdivisionWitness search_k33_subdivision(const Graph& g);
SubdivisionWitness search_k5_subdivision(const Graph& g);

bool verify_subdivision(const Graph& g, const SubdivisionWitness& w);

// Classifies an edge subset that is promised to contain a Kuratowski
// subgraph: sheds pendant stubs, smooths all degree-2 vertices and matches
// the skeleton against K5/K3,3; if extra edges keep the skeleton from
// matching exactly, falls back to a subdivision search on the subgraph the
// edges span.  found=false only if no subdivision exists in that subgraph.
SubdivisionWitness classify_kuratowski_edges(const Graph& g,
                                             const std::vector<std::pair<int, int>>& edges);

}  // namespace cliquecolor
