#include "cliquecolor/atlas.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cliquecolor {

namespace {

// Isomorphism-invariant vertex key used to restrict candidate orderings.
using VertexKey = std::pair<int, std::vector<int>>;

std::vector<VertexKey> vertex_keys(const Graph& g) {
    std::vector<VertexKey> keys(g.n());
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> nd;
        nd.reserve(g.degree(v));
        for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        keys[v] = {g.degree(v), std::move(nd)};
    }
    return keys;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> key_of;        // vertex -> key class index
    std::vector<int> class_at;      // position -> required key class
    std::vector<int> perm;          // position -> vertex
    std::vector<char> used;
    std::vector<uint64_t> chunk;    // chunk[k] = bits of column k under perm
    uint64_t best = 0;
    std::vector<uint64_t> best_chunk;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()) {}

    void run() {
        auto keys = vertex_keys(g);
        std::vector<VertexKey> distinct(keys.begin(), keys.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        key_of.resize(n);
        for (int v = 0; v < n; ++v)
            key_of[v] = int(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
                            distinct.begin());
        class_at.clear();
        for (size_t c = 0; c < distinct.size(); ++c)
            for (int v = 0; v < n; ++v)
                if (key_of[v] == int(c)) class_at.push_back(int(c));
        perm.assign(n, -1);
        used.assign(n, 0);
        chunk.assign(n, 0);
        best_chunk.assign(n, 0);
        place(0, /*tight=*/true);
    }

    // tight: the prefix equals the best known prefix, so pruning applies.
    void place(int pos, bool tight) {
        if (pos == n) {
            uint64_t code = 0;
            int shift = 0;
            for (int k = 1; k < n; ++k) shift += k;
            int off = shift;
            for (int k = 1; k < n; ++k) {
                off -= k;
                code |= chunk[k] << off;
            }
            if (!have_best || code < best) {
                best = code;
                best_chunk = chunk;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || key_of[v] != class_at[pos]) continue;
            uint64_t bits = 0;
            for (int i = 0; i < pos; ++i)
                bits = (bits << 1) | uint64_t(g.adjacent(perm[i], v) ? 1 : 0);
            bool child_tight = tight;
            if (tight && have_best) {
                if (bits > best_chunk[pos]) continue;
                if (bits < best_chunk[pos]) child_tight = false;
            }
            perm[pos] = v;
            used[v] = 1;
            chunk[pos] = bits;
            place(pos + 1, child_tight);
            used[v] = 0;
        }
    }
};

std::recursive_mutex atlas_mutex;

}  // namespace

uint64_t canonical_code(const Graph& g) {
    if (g.n() > 11) throw std::invalid_argument("canonical_code: supports n <= 11");
    if (g.n() <= 1) return 0;
    CanonSearch s(g);
    s.run();
    return s.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

Graph graph_from_code(int n, uint64_t code) {
    std::vector<std::pair<int, int>> edges;
    int total = n * (n - 1) / 2;
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            ++idx;
            if ((code >> (total - idx)) & 1) edges.push_back({i, j});
        }
    return Graph::from_edge_list(n, edges);
}

const std::vector<Graph>& graph_atlas(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("graph_atlas: supports 1 <= n <= 8");
    std::lock_guard<std::recursive_mutex> lock(atlas_mutex);
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph(1));
    } else {
        const std::vector<Graph>& prev = graph_atlas(n - 1);
        std::map<uint64_t, Graph> seen;
        for (const Graph& g : prev) {
            std::vector<std::pair<int, int>> base = g.edges();
            for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<std::pair<int, int>> edges = base;
                for (int v = 0; v < n - 1; ++v)
                    if ((mask >> v) & 1) edges.push_back({v, n - 1});
                Graph h = Graph::from_edge_list(n, edges);
                uint64_t code = canonical_code(h);
                seen.emplace(code, std::move(h));
            }
        }
        out.reserve(seen.size());
        for (auto& kv : seen) out.push_back(std::move(kv.second));
    }
    auto res = cache.emplace(n, std::move(out));
    return res.first->second;
}

std::vector<Graph> connected_graph_atlas(int n) {
    std::vector<Graph> out;
    for (const Graph& g : graph_atlas(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

}  // namespace cliquecolor
