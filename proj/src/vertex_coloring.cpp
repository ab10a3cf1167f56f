#include "cliquecolor/vertex_coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliquecolor {

namespace {

bool color_rest(const Graph& g, int v, int k, int used_max, std::vector<int>& color) {
    if (v == g.n()) return true;
    int cap = std::min(k, used_max + 1);
    for (int c = 1; c <= cap; ++c) {
        bool clash = false;
        for (int w : g.neighbors(v))
            if (w < v && color[w] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        color[v] = c;
        if (color_rest(g, v + 1, k, std::max(used_max, c), color)) return true;
        color[v] = 0;
    }
    return false;
}

}  // namespace

ProperColoringResult chromatic_number(const Graph& g) {
    if (g.n() == 0) return {0, {}};
    std::vector<int> color(g.n(), 0);
    for (int k = 1; k <= g.n(); ++k) {
        std::fill(color.begin(), color.end(), 0);
        if (color_rest(g, 0, k, 0, color)) return {k, color};
    }
    throw std::logic_error("chromatic_number: n colors always suffice");
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (int(c.size()) != g.n()) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

}  // namespace cliquecolor
