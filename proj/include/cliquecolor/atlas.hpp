#pragma once

#include <cstdint>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// Canonical code: the lexicographically smallest upper-triangle bit string
// (graph6 bit order) over all vertex orderings compatible with the
// (degree, sorted neighbor degrees) partition, minimized by branch and bound
// with prefix pruning.  Works for n <= 11 (55 bits); throws beyond.
uint64_t canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Rebuilds the graph a canonical code describes.
Graph graph_from_code(int n, uint64_t code);

// All graphs on n vertices up to isomorphism, by extending the (n-1)-vertex
// atlas one vertex at a time and deduplicating canonical codes.  Results are
// cached; order is ascending by canonical code.  Intended for n <= 8.
const std::vector<Graph>& graph_atlas(int n);

std::vector<Graph> connected_graph_atlas(int n);

}  // namespace cliquecolor
