#include "cliquecolor/solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "cliquecolor/planarity.hpp"

namespace cliquecolor {

namespace {

void check_coloring_shape(const Graph& g, const Coloring& c) {
    if (int(c.size()) != g.n())
        throw std::invalid_argument("coloring length " + std::to_string(c.size()) +
                                    " does not match vertex count " + std::to_string(g.n()));
    for (int v = 0; v < g.n(); ++v)
        if (c[v] < 1 || c[v] > g.n())
            throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                        std::to_string(c[v]) +
                                        "; colors must lie in 1..n");
}

bool monochromatic(const VertexSet& verts, const Coloring& c) {
    for (size_t i = 1; i < verts.size(); ++i)
        if (c[verts[i]] != c[verts[0]]) return false;
    return true;
}

// Hyperedges for the search: maximal cliques of size >= 2, plus all triangles
// when strong, deduplicated and sorted.
std::vector<VertexSet> search_hyperedges(const Graph& g, bool strong) {
    std::vector<VertexSet> edges = clique_hypergraph(g).edges;
    if (strong) {
        std::set<VertexSet> seen(edges.begin(), edges.end());
        for (const auto& t : triangles(g)) {
            VertexSet e{t[0], t[1], t[2]};
            if (seen.insert(e).second) edges.push_back(e);
        }
        std::sort(edges.begin(), edges.end());
    }
    return edges;
}

struct ColorSearch {
    const Graph& g;
    std::vector<VertexSet> edges;
    const CancelToken& cancel;
    int k = 0;
    std::vector<int> color;          // 0 = unassigned
    std::vector<char> is_fixed;
    std::vector<std::vector<int>> edges_of;  // vertex -> hyperedge indices
    std::vector<uint64_t> forbid;            // per vertex, bit c-1 = color c banned
    long long nodes = 0;
    bool cancelled = false;
    bool symmetry_cap = true;

    ColorSearch(const Graph& graph, std::vector<VertexSet> hyperedges,
                const CancelToken& token)
        : g(graph), edges(std::move(hyperedges)), cancel(token) {
        edges_of.resize(g.n());
        for (size_t e = 0; e < edges.size(); ++e)
            for (int v : edges[e]) edges_of[v].push_back(int(e));
    }

    bool assign_rest(int v, int used_max) {
        // checkpoint on the first node so an already-expired deadline never
        // starts a search, then every 4096 nodes
        if (++nodes % 4096 == 1 && cancel.cancelled()) {
            cancelled = true;
            return false;
        }
        while (v < g.n() && is_fixed[v]) {
            if (!check_vertex(v)) return false;
            v = next_vertex(v);
        }
        if (v >= g.n()) return true;
        int cap = symmetry_cap ? std::min(k, used_max + 1) : k;
        for (int c = 1; c <= cap; ++c) {
            if ((forbid[v] >> (c - 1)) & 1) continue;
            color[v] = c;
            if (check_vertex(v)) {
                std::vector<std::pair<int, uint64_t>> undo;
                if (forward_forbid(v, undo)) {
                    if (assign_rest(next_vertex(v), std::max(used_max, c))) return true;
                }
                for (auto& [u, bits] : undo) forbid[u] &= ~bits;
            }
            color[v] = 0;
            if (cancelled) return false;
        }
        return false;
    }

    int next_vertex(int v) const { return v + 1; }

    // A hyperedge is violated only once all its vertices are colored; with
    // ascending assignment that happens when its maximum vertex is set.
    bool check_vertex(int v) const {
        for (int e : edges_of[v]) {
            const VertexSet& verts = edges[e];
            if (verts.back() != v) continue;
            int first = color[verts[0]];
            bool mono = true;
            for (int u : verts)
                if (color[u] != first) {
                    mono = false;
                    break;
                }
            if (mono) return false;
        }
        return true;
    }

    // After coloring v, any hyperedge whose vertices are all colored except
    // one and monochromatic so far bans that color on the hole.
    bool forward_forbid(int v, std::vector<std::pair<int, uint64_t>>& undo) {
        for (int e : edges_of[v]) {
            const VertexSet& verts = edges[e];
            int hole = -1;
            int same = color[v];
            bool mono = true;
            for (int u : verts) {
                if (color[u] == 0) {
                    if (hole >= 0) {
                        hole = -2;
                        break;
                    }
                    hole = u;
                } else if (color[u] != same) {
                    mono = false;
                    break;
                }
            }
            if (hole < 0 || !mono) continue;
            uint64_t bit = uint64_t(1) << (same - 1);
            if (forbid[hole] & bit) continue;
            forbid[hole] |= bit;
            undo.push_back({hole, bit});
        }
        return true;
    }

    SolveStatus run(int colors, const ColoringConstraint& constraint, Coloring& out) {
        k = colors;
        if (k > 64) return SolveStatus::kInfeasible;
        color.assign(g.n(), 0);
        is_fixed.assign(g.n(), 0);
        forbid.assign(g.n(), 0);
        for (const auto& [v, c] : constraint.fixed) {
            if (c > k) return SolveStatus::kInfeasible;
            color[v] = c;
            is_fixed[v] = 1;
        }
        symmetry_cap = constraint.fixed.empty();
        if (assign_rest(0, 0)) {
            out = color;
            return SolveStatus::kFound;
        }
        return cancelled ? SolveStatus::kCancelled : SolveStatus::kInfeasible;
    }
};

VerifyResult verify_against(const std::vector<VertexSet>& hyperedges, const Coloring& c) {
    for (const VertexSet& e : hyperedges)
        if (monochromatic(e, c)) return {false, e};
    return {};
}

}  // namespace

VerifyResult verify_clique_coloring(const Graph& g, const Coloring& c) {
    check_coloring_shape(g, c);
    return verify_against(clique_hypergraph(g).edges, c);
}

VerifyResult verify_strong_clique_coloring(const Graph& g, const Coloring& c) {
    check_coloring_shape(g, c);
    VerifyResult r = verify_against(clique_hypergraph(g).edges, c);
    if (!r.ok) return r;
    for (const auto& t : triangles(g)) {
        VertexSet e{t[0], t[1], t[2]};
        if (monochromatic(e, c)) return {false, e};
    }
    return {};
}

SolveResult solve_hyperedge_coloring(const Graph& g, std::vector<VertexSet> hyperedges,
                                     int k, const std::map<int, int>& fixed,
                                     const CancelToken& cancel) {
    for (const VertexSet& e : hyperedges)
        if (e.size() < 2 || !std::is_sorted(e.begin(), e.end()))
            throw std::invalid_argument("hyperedges must be sorted and of size >= 2");
    std::sort(hyperedges.begin(), hyperedges.end());
    hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()), hyperedges.end());
    ColorSearch search(g, std::move(hyperedges), cancel);
    ColoringConstraint constraint;
    constraint.fixed = fixed;
    constraint.max_colors = k;
    Coloring out;
    SolveStatus st = search.run(k, constraint, out);
    return {st, st == SolveStatus::kFound ? k : 0, out};
}

SolveResult solve_clique_coloring(const Graph& g, bool strong,
                                  const ColoringConstraint& constraint,
                                  const CancelToken& cancel) {
    for (const auto& [v, c] : constraint.fixed) {
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("fixed vertex " + std::to_string(v) + " out of range");
        if (c < 1) throw std::invalid_argument("fixed colors start at 1");
        if (constraint.max_colors > 0 && c > constraint.max_colors)
            throw std::invalid_argument("fixed color exceeds max_colors");
    }
    int k_lo = 1;
    for (const auto& [v, c] : constraint.fixed) k_lo = std::max(k_lo, c);
    int k_hi = std::max(g.n(), k_lo);
    if (constraint.max_colors > 0) k_hi = constraint.max_colors;
    ColorSearch search(g, search_hyperedges(g, strong), cancel);
    for (int k = k_lo; k <= k_hi; ++k) {
        Coloring out;
        SolveStatus st = search.run(k, constraint, out);
        if (st == SolveStatus::kFound) return {st, k, out};
        if (st == SolveStatus::kCancelled) return {st, 0, {}};
    }
    return {SolveStatus::kInfeasible, 0, {}};
}

ChiResult clique_chromatic_number(const Graph& g, const CancelToken& cancel) {
    SolveResult r = solve_clique_coloring(g, false, {}, cancel);
    if (r.status == SolveStatus::kCancelled)
        throw std::runtime_error("clique_chromatic_number: cancelled");
    if (r.status != SolveStatus::kFound)
        throw std::logic_error("clique_chromatic_number: no coloring with n colors");
    return {r.k, r.coloring};
}

ChiResult strong_clique_chromatic_number(const Graph& g, const CancelToken& cancel) {
    SolveResult r = solve_clique_coloring(g, true, {}, cancel);
    if (r.status == SolveStatus::kCancelled)
        throw std::runtime_error("strong_clique_chromatic_number: cancelled");
    if (r.status != SolveStatus::kFound)
        throw std::logic_error("strong_clique_chromatic_number: no coloring with n colors");
    return {r.k, r.coloring};
}

Coloring extend_fixed_triangle(const Graph& g, const std::array<int, 3>& triangle,
                               const std::array<int, 3>& colors) {
    for (int i = 0; i < 3; ++i) {
        if (triangle[i] < 0 || triangle[i] >= g.n())
            throw std::invalid_argument("triangle vertex out of range");
        if (colors[i] < 1 || colors[i] > 3)
            throw std::invalid_argument("triangle colors must lie in 1..3");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!g.adjacent(triangle[i], triangle[j]))
                throw std::invalid_argument("fixed vertices do not form a triangle");
    if (colors[0] == colors[1] && colors[1] == colors[2])
        throw std::invalid_argument("fixed triangle colors must not be monochromatic");
    if (!is_connected(g))
        throw std::invalid_argument("extend_fixed_triangle requires a connected graph");
    if (!planarity_test(g).planar)
        throw std::invalid_argument("extend_fixed_triangle requires a planar graph");
    ColoringConstraint constraint;
    constraint.max_colors = 3;
    for (int i = 0; i < 3; ++i) constraint.fixed[triangle[i]] = colors[i];
    SolveResult r = solve_clique_coloring(g, true, constraint, {});
    if (r.status != SolveStatus::kFound)
        throw std::logic_error("extend_fixed_triangle: no strong 3-coloring extends the triangle");
    return r.coloring;
}

}  // namespace cliquecolor
