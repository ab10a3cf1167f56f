#include "cliquecolor/fixtures.hpp"

#include <stdexcept>

namespace cliquecolor {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph::from_edge_list(a + b, edges);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph petersen_graph() {
    return Graph::from_edge_list(
        10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
             {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

Graph icosahedron_graph() {
    return Graph::from_edge_list(
        12, {{0, 1}, {0, 5}, {0, 7},  {0, 8},  {0, 11}, {1, 2},  {1, 5},  {1, 6},
             {1, 8}, {2, 3}, {2, 6},  {2, 8},  {2, 9},  {3, 4},  {3, 6},  {3, 9},
             {3, 10}, {4, 5}, {4, 6}, {4, 10}, {4, 11}, {5, 6},  {5, 11}, {7, 8},
             {7, 9}, {7, 10}, {7, 11}, {8, 9}, {9, 10}, {10, 11}});
}

const std::vector<Graph>& forbidden_line_subgraphs() {
    static const std::vector<Graph> nine = [] {
        std::vector<Graph> v;
        // claw K1,3
        v.push_back(Graph::from_edge_list(4, {{0, 3}, {1, 3}, {2, 3}}));
        // K2,3 ({0,1} vs {2,3,4}) plus the edge {2,4}
        v.push_back(Graph::from_edge_list(
            5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}}));
        // K5 minus the edge {0,2}
        v.push_back(Graph::from_edge_list(5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                              {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
        v.push_back(Graph::from_edge_list(
            6, {{0, 1}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {4, 5}}));
        v.push_back(Graph::from_edge_list(
            6, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}));
        v.push_back(Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                              {1, 5}, {2, 3}, {2, 5}, {4, 5}}));
        v.push_back(Graph::from_edge_list(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2},
                                              {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
        // wheel: hub 5 joined to the cycle 0-1-2-3-4
        v.push_back(Graph::from_edge_list(6, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5},
                                              {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}));
        v.push_back(Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3},
                                              {1, 4}, {1, 5}, {2, 5}, {3, 4}, {3, 5},
                                              {4, 5}}));
        return v;
    }();
    return nine;
}

std::vector<Graph> antiprismatic_gadgets() {
    std::vector<Graph> out;
    std::vector<std::pair<int, int>> common = {
        {0, 1}, {0, 2}, {1, 2},          // triangle v,u,w
        {0, 3}, {0, 4},                  // v to v1,v2
        {1, 5}, {1, 6},                  // u to u1,u2
        {2, 7}, {2, 8},                  // w to w1,w2
        {3, 4}, {5, 6},                  // pair edges
        {3, 5}, {4, 6}};                 // crosswise u1-v1, u2-v2
    std::vector<std::pair<int, int>> wire_a = {{7, 5}, {7, 4}, {8, 6}, {8, 3}};
    std::vector<std::pair<int, int>> wire_b = {{7, 6}, {7, 3}, {8, 5}, {8, 4}};
    for (const auto& wiring : {wire_a, wire_b}) {
        for (bool pair_edge : {false, true}) {
            std::vector<std::pair<int, int>> edges = common;
            edges.insert(edges.end(), wiring.begin(), wiring.end());
            if (pair_edge) edges.push_back({7, 8});
            out.push_back(complement(Graph::from_edge_list(9, edges)));
        }
    }
    return out;
}

}  // namespace cliquecolor
