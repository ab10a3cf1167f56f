#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cliquecolor {

// Vertices are dense ints 0..n-1.  A VertexSet is kept sorted ascending.
using VertexSet = std::vector<int>;

// coloring[v] is the color of vertex v; colors are 1-based.
using Coloring = std::vector<int>;

// Simple undirected graph, immutable once constructed.  Neighbor lists are
// sorted ascending; adjacency is mirrored in packed bit rows so membership
// tests are O(1).  Loops and parallel edges are rejected/merged on input.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // All edges as (u, v) with u < v, lexicographically ascending.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    int n_ = 0;
    long long m_ = 0;
    size_t words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;

    void add_edge_unchecked(int u, int v);
    void finish();
    friend Graph graph_from_adjacency(int n, const std::vector<std::vector<int>>& adj);
};

struct Induced {
    Graph graph;
    VertexSet origin;  // origin[i] = source-graph id of induced vertex i
};

// verts must be within range; duplicates are merged, order is normalized.
Induced induced_subgraph(const Graph& g, VertexSet verts);

// Simple contraction G.e of an existing edge uv: the merged vertex lands on
// the slot of min(u,v), the slot of max(u,v) disappears and higher ids shift
// down by one.  identify_vertices is the same merge without requiring the
// edge (used for gluing analyses); contract_edge throws if uv is not an edge.
Graph contract_edge(const Graph& g, int u, int v);
Graph identify_vertices(const Graph& g, int u, int v);

Graph complement(const Graph& g);

// Components as sorted vertex sets, ascending by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// DFS lowpoint block-cut decomposition.  Blocks are the vertex sets of the
// biconnected components (an isolated vertex forms a singleton block so that
// the blocks cover V); each block is sorted, the list is sorted
// lexicographically, and cut_vertices is sorted ascending.
struct BlockCut {
    std::vector<int> cut_vertices;
    std::vector<VertexSet> blocks;
};
BlockCut cut_vertices_and_blocks(const Graph& g);

}  // namespace cliquecolor
