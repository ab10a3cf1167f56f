#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cliquecolor/atlas.hpp"
#include "cliquecolor/cliques.hpp"
#include "cliquecolor/fixtures.hpp"
#include "cliquecolor/graph.hpp"

using namespace cliquecolor;

// Independent oracle: scan all 2^n vertex subsets, keep the complete ones
// that no extra vertex extends, and return them in the canonical order the
// library promises (each set ascending, list lexicographic).
static std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
    const int n = g.n();
    std::vector<VertexSet> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        bool complete = true;
        for (size_t i = 0; i < s.size() && complete; ++i)
            for (size_t j = i + 1; j < s.size() && complete; ++j)
                if (!g.adjacent(s[i], s[j])) complete = false;
        if (!complete) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w) {
            if (mask >> w & 1) continue;
            bool joins = true;
            for (int v : s)
                if (!g.adjacent(v, w)) {
                    joins = false;
                    break;
                }
            if (joins) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

static Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph::from_edge_list(n, edges);
}

TEST_CASE("maximal clique examples") {
    auto c5 = maximal_cliques(cycle_graph(5));
    CHECK(c5.size() == 5);
    for (const VertexSet& q : c5) CHECK(q.size() == 2);

    auto k5 = maximal_cliques(complete_graph(5));
    REQUIRE(k5.size() == 1);
    CHECK(k5[0] == VertexSet{0, 1, 2, 3, 4});

    auto claw = maximal_cliques(star_graph(3));
    CHECK(claw.size() == 3);
    for (const VertexSet& q : claw) {
        CHECK(q.size() == 2);
        CHECK(q[0] == 0);
    }

    auto lonely = maximal_cliques(Graph(1));
    REQUIRE(lonely.size() == 1);
    CHECK(lonely[0] == VertexSet{0});
}

TEST_CASE("maximal cliques match the subset oracle exhaustively to n = 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : graph_atlas(n)) CHECK(maximal_cliques(g) == brute_maximal_cliques(g));
}

TEST_CASE("maximal cliques match the subset oracle on random graphs to n = 10") {
    std::mt19937 rng(20260817);
    std::uniform_int_distribution<int> pick_n(1, 10);
    std::uniform_real_distribution<double> pick_p(0.05, 0.95);
    for (int trial = 0; trial < 2000; ++trial) {
        Graph g = random_graph(rng, pick_n(rng), pick_p(rng));
        CHECK(maximal_cliques(g) == brute_maximal_cliques(g));
    }
}

TEST_CASE("clique hypergraph examples") {
    CHECK(clique_hypergraph(Graph(1)).edges.empty());

    auto k2 = clique_hypergraph(complete_graph(2));
    REQUIRE(k2.edges.size() == 1);
    CHECK(k2.edges[0] == VertexSet{0, 1});

    // triangle-free graphs: H(G) = G
    for (const Graph& g : graph_atlas(6)) {
        if (!triangles(g).empty()) continue;
        std::vector<VertexSet> expect;
        for (auto [u, v] : g.edges()) expect.push_back({u, v});
        std::sort(expect.begin(), expect.end());
        CHECK(clique_hypergraph(g).edges == expect);
    }
}

TEST_CASE("every edge lies in a hyperedge") {
    for (const Graph& g : graph_atlas(6)) {
        CliqueHypergraph h = clique_hypergraph(g);
        for (auto [u, v] : g.edges()) {
            bool covered = false;
            for (const VertexSet& e : h.edges)
                if (std::binary_search(e.begin(), e.end(), u) &&
                    std::binary_search(e.begin(), e.end(), v)) {
                    covered = true;
                    break;
                }
            CHECK(covered);
        }
    }
}

TEST_CASE("triangle examples") {
    CHECK(triangles(complete_graph(4)).size() == 4);
    CHECK(triangles(cycle_graph(6)).empty());
    CHECK(triangles(complete_graph(5)).size() == 10);

    auto t = triangles(complete_graph(3));
    REQUIRE(t.size() == 1);
    CHECK(t[0] == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("triangles are ascending and lexicographic") {
    for (const Graph& g : graph_atlas(6)) {
        auto ts = triangles(g);
        for (const auto& t : ts) {
            CHECK(t[0] < t[1]);
            CHECK(t[1] < t[2]);
            CHECK(g.adjacent(t[0], t[1]));
            CHECK(g.adjacent(t[0], t[2]));
            CHECK(g.adjacent(t[1], t[2]));
        }
        CHECK(std::is_sorted(ts.begin(), ts.end()));
    }
}

TEST_CASE("independence number examples") {
    CHECK(independence_number(cycle_graph(5)).alpha == 2);
    CHECK(independence_number(complete_graph(5)).alpha == 1);
    CHECK(independence_number(complete_bipartite(3, 3)).alpha == 3);
    CHECK(independence_number(petersen_graph()).alpha == 4);
}

TEST_CASE("independence witness is independent and alpha matches the complement hypergraph") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : graph_atlas(n)) {
            IndependenceResult r = independence_number(g);
            CHECK(static_cast<int>(r.witness.size()) == r.alpha);
            for (size_t i = 0; i < r.witness.size(); ++i)
                for (size_t j = i + 1; j < r.witness.size(); ++j)
                    CHECK_FALSE(g.adjacent(r.witness[i], r.witness[j]));

            // independent sets of g are cliques of the complement
            CliqueHypergraph co = clique_hypergraph(complement(g));
            size_t biggest = 0;
            for (const VertexSet& e : co.edges) biggest = std::max(biggest, e.size());
            if (co.edges.empty())
                CHECK(r.alpha == (g.n() > 0 ? 1 : 0));  // complement edgeless: g complete
            else
                CHECK(r.alpha == static_cast<int>(biggest));
        }
}
