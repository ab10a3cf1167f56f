#include "cliquecolor/cliques.hpp"

#include <algorithm>

namespace cliquecolor {

namespace {

VertexSet intersect_neighbors(const VertexSet& s, const Graph& g, int v) {
    VertexSet out;
    out.reserve(s.size());
    for (int x : s)
        if (g.adjacent(x, v)) out.push_back(x);
    return out;
}

struct BronKerbosch {
    const Graph& g;
    std::vector<VertexSet> found;

    void expand(VertexSet& r, VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            found.push_back(r);
            return;
        }
        // pivot: most candidates covered, ties to the smallest id
        int pivot = -1, best = -1;
        for (const VertexSet* side : {&p, &x})
            for (int u : *side) {
                int cnt = 0;
                for (int w : p) cnt += g.adjacent(u, w);
                if (cnt > best) best = cnt, pivot = u;
            }
        VertexSet branch;
        for (int v : p)
            if (!g.adjacent(pivot, v)) branch.push_back(v);
        for (int v : branch) {
            r.push_back(v);
            expand(r, intersect_neighbors(p, g, v), intersect_neighbors(x, g, v));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    BronKerbosch bk{g, {}};
    VertexSet r, p(g.n());
    for (int v = 0; v < g.n(); ++v) p[v] = v;
    bk.expand(r, std::move(p), {});
    for (auto& c : bk.found) std::sort(c.begin(), c.end());
    std::sort(bk.found.begin(), bk.found.end());
    return bk.found;
}

CliqueHypergraph clique_hypergraph(const Graph& g) {
    CliqueHypergraph h;
    for (auto& c : maximal_cliques(g))
        if (c.size() >= 2) h.edges.push_back(c);
    return h;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(u)) {
                if (w <= v) continue;
                if (g.adjacent(v, w)) out.push_back({u, v, w});
            }
        }
    return out;
}

namespace {

// Tomita-style max clique on the complement.  Candidates are greedily
// colored; the class index bounds how much the clique can still grow.
struct MaxClique {
    const Graph& gc;  // complement of the input
    VertexSet best;

    void expand(VertexSet& r, const VertexSet& candidates) {
        if (candidates.empty()) {
            if (r.size() > best.size()) best = r;
            return;
        }
        std::vector<VertexSet> classes;
        for (int v : candidates) {
            bool placed = false;
            for (auto& cls : classes) {
                bool clash = false;
                for (int u : cls)
                    if (gc.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        std::vector<std::pair<int, int>> order;  // (bound, vertex), bound = class index + 1
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) order.emplace_back(static_cast<int>(c) + 1, v);
        for (size_t i = order.size(); i-- > 0;) {
            auto [bound, v] = order[i];
            if (r.size() + bound <= best.size()) return;
            r.push_back(v);
            VertexSet next;
            for (size_t j = 0; j < i; ++j)
                if (gc.adjacent(order[j].second, v)) next.push_back(order[j].second);
            expand(r, next);
            r.pop_back();
        }
    }
};

}  // namespace

IndependenceResult independence_number(const Graph& g) {
    if (g.n() == 0) return {0, {}};
    Graph gc = complement(g);
    MaxClique mc{gc, {}};
    VertexSet r, all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    mc.expand(r, all);
    std::sort(mc.best.begin(), mc.best.end());
    return {static_cast<int>(mc.best.size()), mc.best};
}

}  // namespace cliquecolor
