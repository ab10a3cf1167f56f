#pragma once

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

struct ProperColoringResult {
    int chi = 0;
    Coloring coloring;
};

// Exact chromatic number by iterative deepening, ascending vertex order,
// lowest color first.  Deliberately shares no machinery with the clique
// coloring solver; it only ever looks at single edges.
ProperColoringResult chromatic_number(const Graph& g);

bool is_proper_coloring(const Graph& g, const Coloring& c);

}  // namespace cliquecolor
