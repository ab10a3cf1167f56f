#pragma once

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
// Hub is vertex 0, leaves 1..n.
Graph star_graph(int leaves);
Graph petersen_graph();
Graph icosahedron_graph();

// The nine Beineke graphs: the minimal graphs that occur as an induced
// subgraph of no line graph.  A graph is a line graph exactly when it
// contains none of these.  Order: ascending (n, m).
const std::vector<Graph>& forbidden_line_subgraphs();

// Four nine-vertex antiprismatic graphs, given by their complements: a
// triangle v,u,w (ids 0,1,2) with attached pairs (3,4), (5,6), (7,8), the
// pairs joined crosswise in two patterns, with and without the edge {7,8}.
// Each is a claw-free planar graph whose complement is prismatic.
std::vector<Graph> antiprismatic_gadgets();

}  // namespace cliquecolor
