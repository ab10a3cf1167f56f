#include "cliquecolor/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cliquecolor {

namespace {

struct Pattern {
    std::string name;
    int verts;
    int min_degree;
    std::vector<std::pair<int, int>> edges;
    // precede[i] = pattern vertex whose host id must be smaller than i's
    // (symmetry breaking within interchangeable orbits; -1 = none)
    std::vector<int> precede;
};

const Pattern& k33_pattern() {
    static const Pattern p{"K3,3",
                           6,
                           3,
                           {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}},
                           {-1, 0, 1, 0, 3, 4}};
    return p;
}

const Pattern& k5_pattern() {
    static const Pattern p{
        "K5",
        5,
        4,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
        {-1, 0, 1, 2, 3}};
    return p;
}

struct SubdivisionSearch {
    const Graph& g;
    const Pattern& pat;
    std::vector<int> assign;
    std::vector<char> used;
    std::vector<std::vector<int>> paths;

    SubdivisionSearch(const Graph& gg, const Pattern& pp)
        : g(gg), pat(pp), assign(pp.verts, -1), used(gg.n(), 0) {}

    bool connect(size_t e);

    bool extend(size_t e, std::vector<int>& path, int target) {
        int cur = path.back();
        for (int w : g.neighbors(cur)) {
            if (w == target) {
                path.push_back(w);
                paths.push_back(path);
                if (connect(e + 1)) return true;
                paths.pop_back();
                path.pop_back();
            } else if (!used[w]) {
                used[w] = 1;
                path.push_back(w);
                if (extend(e, path, target)) return true;
                path.pop_back();
                used[w] = 0;
            }
        }
        return false;
    }

    bool place(int k) {
        if (k == pat.verts) return connect(0);
        int lo = pat.precede[k] >= 0 ? assign[pat.precede[k]] + 1 : 0;
        for (int v = lo; v < g.n(); ++v) {
            if (used[v] || g.degree(v) < pat.min_degree) continue;
            assign[k] = v;
            used[v] = 1;
            if (place(k + 1)) return true;
            used[v] = 0;
            assign[k] = -1;
        }
        return false;
    }
};

bool SubdivisionSearch::connect(size_t e) {
    if (e == pat.edges.size()) return true;
    auto [x, y] = pat.edges[e];
    std::vector<int> path{assign[x]};
    return extend(e, path, assign[y]);
}

SubdivisionWitness run_search(const Graph& g, const Pattern& pat) {
    SubdivisionWitness w;
    w.pattern = pat.name;
    int rich = 0;
    for (int v = 0; v < g.n(); ++v) rich += g.degree(v) >= pat.min_degree;
    if (rich < pat.verts || g.edge_count() < static_cast<long long>(pat.edges.size())) return w;
    SubdivisionSearch s(g, pat);
    if (!s.place(0)) return w;
    w.found = true;
    w.branch = s.assign;
    // interior vertices stay flagged in `used` during the whole search, so
    // completed paths are final when place() returns true
    w.paths = s.paths;
    return w;
}

// exact smooth-and-match on an already-pruned edge set: every vertex must have
// degree 2 or the pattern branch degree, and the smoothed skeleton must equal
// K5 or K3,3 on the nose
SubdivisionWitness classify_clean(std::map<int, std::vector<int>> adj) {
    SubdivisionWitness w;
    std::vector<int> branch;
    for (auto& [v, nb] : adj) {
        std::sort(nb.begin(), nb.end());
        if (nb.size() < 2) return w;
        if (nb.size() >= 3) branch.push_back(v);
    }
    std::set<int> branch_set(branch.begin(), branch.end());

    // walk from each branch vertex through degree-2 vertices
    std::map<std::pair<int, int>, std::vector<int>> skel_paths;
    std::set<std::pair<int, int>> walked;  // darts consumed
    for (int b : branch)
        for (int start : adj[b]) {
            if (walked.count({b, start})) continue;
            std::vector<int> path{b};
            int prev = b, cur = start;
            walked.insert({b, start});
            while (!branch_set.count(cur)) {
                path.push_back(cur);
                const auto& nb = adj[cur];
                if (nb.size() != 2) return w;
                int nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
            }
            walked.insert({cur, prev});
            path.push_back(cur);
            int a = path.front(), z = path.back();
            if (a == z) return w;  // loop back to the same branch vertex
            auto key = std::minmax(a, z);
            if (skel_paths.count({key.first, key.second})) return w;  // parallel skeleton edge
            if (a > z) std::reverse(path.begin(), path.end());
            skel_paths[{key.first, key.second}] = std::move(path);
        }

    auto finish = [&](const Pattern& pat, const std::vector<int>& ordered) {
        w.pattern = pat.name;
        w.branch = ordered;
        for (auto [x, y] : pat.edges) {
            int a = ordered[x], z = ordered[y];
            auto key = std::minmax(a, z);
            auto it = skel_paths.find({key.first, key.second});
            if (it == skel_paths.end()) {
                w = SubdivisionWitness{};
                return;
            }
            auto path = it->second;
            if (path.front() != a) std::reverse(path.begin(), path.end());
            w.paths.push_back(std::move(path));
        }
        w.found = true;
    };

    if (branch.size() == 5 && skel_paths.size() == 10) {
        for (int b : branch)
            if (adj[b].size() != 4) return w;
        std::sort(branch.begin(), branch.end());
        finish(k5_pattern(), branch);
        return w;
    }
    if (branch.size() == 6 && skel_paths.size() == 9) {
        for (int b : branch)
            if (adj[b].size() != 3) return w;
        // bipartition: side A = smallest branch vertex plus skeleton non-neighbors
        std::sort(branch.begin(), branch.end());
        int b0 = branch[0];
        std::vector<int> side_a{b0}, side_b;
        for (int b : branch) {
            if (b == b0) continue;
            auto key = std::minmax(b0, b);
            (skel_paths.count({key.first, key.second}) ? side_b : side_a).push_back(b);
        }
        if (side_a.size() != 3 || side_b.size() != 3) return w;
        std::vector<int> ordered = side_a;
        ordered.insert(ordered.end(), side_b.begin(), side_b.end());
        finish(k33_pattern(), ordered);
        return w;
    }
    return w;
}

}  // namespace

SubdivisionWitness search_k33_subdivision(const Graph& g) { return run_search(g, k33_pattern()); }
SubdivisionWitness search_k5_subdivision(const Graph& g) { return run_search(g, k5_pattern()); }

bool verify_subdivision(const Graph& g, const SubdivisionWitness& w) {
    if (!w.found) return false;
    const Pattern& pat = w.pattern == "K5" ? k5_pattern() : k33_pattern();
    if (w.pattern != pat.name) return false;
    if (static_cast<int>(w.branch.size()) != pat.verts) return false;
    if (w.paths.size() != pat.edges.size()) return false;
    std::set<int> branch(w.branch.begin(), w.branch.end());
    if (static_cast<int>(branch.size()) != pat.verts) return false;
    for (int v : w.branch)
        if (v < 0 || v >= g.n()) return false;
    std::set<int> interior;
    for (size_t e = 0; e < w.paths.size(); ++e) {
        const auto& path = w.paths[e];
        if (path.size() < 2) return false;
        if (path.front() != w.branch[pat.edges[e].first]) return false;
        if (path.back() != w.branch[pat.edges[e].second]) return false;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.adjacent(path[i], path[i + 1])) return false;
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            int v = path[i];
            if (branch.count(v)) return false;
            if (!interior.insert(v).second) return false;  // reused interior
        }
    }
    return true;
}

SubdivisionWitness classify_kuratowski_edges(const Graph& g,
                                             const std::vector<std::pair<int, int>>& edges) {
    SubdivisionWitness w;
    std::map<int, std::set<int>> nb;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v || !g.adjacent(u, v)) return w;
        nb[u].insert(v);
        nb[v].insert(u);
    }
    // Boyer-Myrvold extraction can carry pendant stubs beyond the subdivision
    for (bool again = true; again;) {
        again = false;
        for (auto it = nb.begin(); it != nb.end();) {
            if (it->second.size() <= 1) {
                for (int u : it->second) nb[u].erase(it->first);
                it = nb.erase(it);
                again = true;
            } else {
                ++it;
            }
        }
    }
    if (nb.empty()) return w;

    std::map<int, std::vector<int>> adj;
    for (auto& [v, s] : nb) adj[v].assign(s.begin(), s.end());
    w = classify_clean(adj);
    if (w.found) return w;

    // leftover chords or fused branch vertices: search the spanned subgraph,
    // which is nonplanar and therefore still holds a subdivision
    std::vector<std::pair<int, int>> pruned;
    for (auto& [v, s] : nb)
        for (int u : s)
            if (v < u) pruned.push_back({v, u});
    Graph k = Graph::from_edge_list(g.n(), pruned);
    w = search_k33_subdivision(k);
    if (!w.found) w = search_k5_subdivision(k);
    return w;
}

}  // namespace cliquecolor
