#include "cliquecolor/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>

namespace cliquecolor {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

}  // namespace

PlanarityResult planarity_test(const Graph& g) {
    PlanarityResult res;
    const int n = g.n();
    if (n == 0) {
        res.planar = true;
        return res;
    }
    BoostGraph bg(static_cast<size_t>(n));
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    int ei = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it)
        boost::put(boost::edge_index, bg, *it, ei++);

    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(static_cast<size_t>(n));
    std::vector<Edge> kuratowski;
    res.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = &embedding[0],
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    if (res.planar) {
        res.rotation.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            for (const Edge& e : embedding[static_cast<size_t>(v)]) {
                int a = static_cast<int>(boost::source(e, bg));
                int b = static_cast<int>(boost::target(e, bg));
                res.rotation[static_cast<size_t>(v)].push_back(a == v ? b : a);
            }
    } else {
        for (const Edge& e : kuratowski) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            res.kuratowski_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(res.kuratowski_edges.begin(), res.kuratowski_edges.end());
        res.kuratowski_edges.erase(
            std::unique(res.kuratowski_edges.begin(), res.kuratowski_edges.end()),
            res.kuratowski_edges.end());
    }
    return res;
}

bool rotation_satisfies_euler(const Graph& g, const std::vector<std::vector<int>>& rotation) {
    if (rotation.size() != static_cast<size_t>(g.n())) return false;
    // rotation lists must hold exactly the neighbors of each vertex
    for (int v = 0; v < g.n(); ++v) {
        auto sorted = rotation[static_cast<size_t>(v)];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v)) return false;
    }
    // position of u within rotation[v], for the dart successor rule
    std::map<std::pair<int, int>, int> pos;
    for (int v = 0; v < g.n(); ++v)
        for (size_t i = 0; i < rotation[static_cast<size_t>(v)].size(); ++i)
            pos[{v, rotation[static_cast<size_t>(v)][i]}] = static_cast<int>(i);

    std::map<std::pair<int, int>, char> dart_seen;
    for (auto [u, v] : g.edges()) {
        dart_seen[{u, v}] = 0;
        dart_seen[{v, u}] = 0;
    }
    // faces traced per component; then check Euler for each component with edges
    std::vector<long long> faces_of_comp;
    auto comps = connected_components(g);
    std::vector<int> comp_of(g.n(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    faces_of_comp.assign(comps.size(), 0);

    for (auto& [dart, seen] : dart_seen) {
        if (seen) continue;
        auto [su, sv] = dart;
        int u = su, v = sv;
        ++faces_of_comp[static_cast<size_t>(comp_of[u])];
        while (!dart_seen[{u, v}]) {
            dart_seen[{u, v}] = 1;
            // next dart of the same face: rotate past u around v
            const auto& rot = rotation[static_cast<size_t>(v)];
            int i = pos[{v, u}];
            int w = rot[(static_cast<size_t>(i) + 1) % rot.size()];
            u = v;
            v = w;
        }
    }
    for (size_t c = 0; c < comps.size(); ++c) {
        long long vc = static_cast<long long>(comps[c].size());
        long long ec = 0;
        for (int v : comps[c]) ec += g.degree(v);
        ec /= 2;
        if (ec == 0) continue;
        if (vc - ec + faces_of_comp[c] != 2) return false;
    }
    return true;
}

}  // namespace cliquecolor
