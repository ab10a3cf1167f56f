#pragma once

#include <string>
#include <vector>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

// Canonical graph6 serialization (offset-63 bytes, upper-triangle bits in
// column order x(0,1) x(0,2) x(1,2) x(0,3) ...).  parse_graph6 accepts an
// optional ">>graph6<<" prefix and rejects malformed bytes, bad lengths and
// nonzero padding.  Orders above 258047 are out of scope.
std::string encode_graph6(const Graph& g);
Graph parse_graph6(const std::string& line);

// Plain text convenience format: first line "n m", then m lines "u v".
Graph parse_edge_list_text(const std::string& text);
std::string encode_edge_list_text(const Graph& g);

// One graph6 string per nonempty line.
std::vector<Graph> parse_graph6_file(const std::string& text);

}  // namespace cliquecolor
