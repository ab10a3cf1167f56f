#pragma once

#include <string>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// Combinatorial embedding: rotation[v] is the cyclic order of neighbors
// around v.  Kuratowski edges are reported when the graph is nonplanar.
struct PlanarityResult {
    bool planar = false;
    std::vector<std::vector<int>> rotation;
    std::vector<std::pair<int, int>> kuratowski_edges;
};

PlanarityResult planarity_test(const Graph& g);

// Checks V - E + F = 2 on every component with at least one edge by tracing
// face orbits of the dart permutation induced by the rotation system.
bool rotation_satisfies_euler(const Graph& g, const std::vector<std::vector<int>>& rotation);

}  // namespace cliquecolor
