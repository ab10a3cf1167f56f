#include "cliquecolor/graph.hpp"

#include <algorithm>
#include <string>

namespace cliquecolor {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    n_ = n;
    words_ = static_cast<size_t>((n + 63) / 64);
    adj_.assign(n, {});
    bits_.assign(static_cast<size_t>(n) * words_, 0);
}

void Graph::add_edge_unchecked(int u, int v) {
    uint64_t& wu = bits_[static_cast<size_t>(u) * words_ + (v >> 6)];
    if ((wu >> (v & 63)) & 1u) return;  // duplicate input edge
    wu |= uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
}

void Graph::finish() {
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range 0.." + std::to_string(n - 1));
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        g.add_edge_unchecked(u, v);
    }
    g.finish();
    return g;
}

Graph graph_from_adjacency(int n, const std::vector<std::vector<int>>& adj) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) g.add_edge_unchecked(u, v);
    g.finish();
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Induced induced_subgraph(const Graph& g, VertexSet verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return Induced{Graph::from_edge_list(static_cast<int>(verts.size()), edges), std::move(verts)};
}

static Graph merge_pair(const Graph& g, int u, int v) {
    int a = std::min(u, v), b = std::max(u, v);
    // old id w -> new id: b vanishes, ids above b shift down, b maps onto a.
    auto remap = [&](int w) { return w == b ? a : (w > b ? w - 1 : w); };
    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : g.edges()) {
        int nx = remap(x), ny = remap(y);
        if (nx != ny) edges.emplace_back(nx, ny);
    }
    return Graph::from_edge_list(g.n() - 1, edges);
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw std::invalid_argument("contract_edge: bad vertex pair");
    if (!g.adjacent(u, v)) throw std::invalid_argument("contract_edge: uv is not an edge");
    return merge_pair(g, u, v);
}

Graph identify_vertices(const Graph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw std::invalid_argument("identify_vertices: bad vertex pair");
    return merge_pair(g, u, v);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edge_list(g.n(), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

namespace {

// Iterative Hopcroft-Tarjan; pushes edges and pops a block at each
// articulation return.
struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low, parent;
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> estack;
    std::vector<VertexSet> blocks;
    int counter = 0;

    explicit BlockFinder(const Graph& gg)
        : g(gg), num(gg.n(), -1), low(gg.n(), 0), parent(gg.n(), -1), is_cut(gg.n(), 0) {}

    void pop_block(int u, int v) {
        VertexSet blk;
        std::pair<int, int> e;
        do {
            e = estack.back();
            estack.pop_back();
            blk.push_back(e.first);
            blk.push_back(e.second);
        } while (e != std::make_pair(u, v));
        std::sort(blk.begin(), blk.end());
        blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
        blocks.push_back(std::move(blk));
    }

    void run(int root) {
        struct Frame {
            int v;
            size_t i;
        };
        std::vector<Frame> st{{root, 0}};
        num[root] = low[root] = counter++;
        int root_children = 0;
        while (!st.empty()) {
            auto& [v, i] = st.back();
            if (i < g.neighbors(v).size()) {
                int w = g.neighbors(v)[i++];
                if (num[w] == -1) {
                    estack.emplace_back(v, w);
                    parent[w] = v;
                    num[w] = low[w] = counter++;
                    if (v == root) ++root_children;
                    st.push_back({w, 0});
                } else if (w != parent[v] && num[w] < num[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                st.pop_back();
                if (st.empty()) break;
                int p = st.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= num[p]) {
                    pop_block(p, v);
                    if (p != root) is_cut[p] = 1;
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
};

}  // namespace

BlockCut cut_vertices_and_blocks(const Graph& g) {
    BlockFinder bf(g);
    for (int v = 0; v < g.n(); ++v) {
        if (bf.num[v] != -1) continue;
        if (g.degree(v) == 0) {
            bf.num[v] = bf.counter++;
            bf.blocks.push_back({v});
            continue;
        }
        bf.run(v);
    }
    BlockCut out;
    for (int v = 0; v < g.n(); ++v)
        if (bf.is_cut[v]) out.cut_vertices.push_back(v);
    std::sort(bf.blocks.begin(), bf.blocks.end());
    out.blocks = std::move(bf.blocks);
    return out;
}

}  // namespace cliquecolor
