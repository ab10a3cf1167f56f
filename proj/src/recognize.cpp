#include "cliquecolor/recognize.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliquecolor/fixtures.hpp"
#include "cliquecolor/graph6.hpp"
#include "cliquecolor/planarity.hpp"
#include "cliquecolor/subdivision.hpp"
#include "cliquecolor/wagner.hpp"

namespace cliquecolor {

RecognitionReport is_claw_free(const Graph& g) {
    RecognitionReport report{"claw_free", true, nullptr};
    for (int v = 0; v < g.n(); ++v) {
        const std::vector<int>& nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (size_t k = j + 1; k < nb.size(); ++k) {
                    if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
                    report.verdict = false;
                    report.witness = {{"center", v}, {"leaves", {nb[i], nb[j], nb[k]}}};
                    return report;
                }
            }
    }
    return report;
}

RecognitionReport is_triangle_free(const Graph& g) {
    RecognitionReport report{"triangle_free", true, nullptr};
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.adjacent(u, v)) continue;
            for (int w = v + 1; w < g.n(); ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w)) {
                    report.verdict = false;
                    report.witness = {{"triangle", {u, v, w}}};
                    return report;
                }
        }
    return report;
}

RecognitionReport is_odd_cycle(const Graph& g) {
    RecognitionReport report{"odd_cycle", false, nullptr};
    if (g.n() < 3 || g.n() % 2 == 0) return report;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) return report;
    report.verdict = connected_components(g).size() == 1;
    return report;
}

RecognitionReport is_planar(const Graph& g) {
    RecognitionReport report{"planar", false, nullptr};
    PlanarityResult pr = planarity_test(g);
    report.verdict = pr.planar;
    if (pr.planar) {
        if (!rotation_satisfies_euler(g, pr.rotation))
            throw std::logic_error("is_planar: rotation system fails Euler check");
        report.witness = {{"rotation", pr.rotation}};
    } else {
        SubdivisionWitness w = classify_kuratowski_edges(g, pr.kuratowski_edges);
        if (!w.found)
            throw std::logic_error("is_planar: unclassifiable Kuratowski edge set");
        report.witness = {{"pattern", w.pattern}, {"branch", w.branch}, {"paths", w.paths}};
    }
    return report;
}

RecognitionReport find_k33_subdivision(const Graph& g) {
    if (g.n() > 16)
        throw std::invalid_argument(
            "find_k33_subdivision: size limit exceeded (use is_k33_minor_free)");
    RecognitionReport report{"k33_subdivision", false, nullptr};
    SubdivisionWitness w = search_k33_subdivision(g);
    report.verdict = w.found;
    if (w.found) {
        report.witness = {{"parts",
                           {{w.branch[0], w.branch[1], w.branch[2]},
                            {w.branch[3], w.branch[4], w.branch[5]}}},
                          {"paths", w.paths}};
    }
    return report;
}

RecognitionReport is_k33_minor_free(const Graph& g) {
    RecognitionReport report{"k33_minor_free", true, nullptr};
    if (g.n() == 0) return report;
    DecomposeResult dec = decompose(g);
    report.verdict = dec.ok;
    if (!dec.ok) {
        nlohmann::json virtual_pairs = nlohmann::json::array();
        for (auto [a, b] : dec.torso_virtual_pairs) virtual_pairs.push_back({a, b});
        report.witness = {{"torso", dec.torso_origin},
                          {"torso_graph6", encode_graph6(dec.torso)},
                          {"virtual_pairs", virtual_pairs}};
        if (g.n() <= 16) {
            SubdivisionWitness w = search_k33_subdivision(g);
            if (!w.found)
                throw std::logic_error(
                    "is_k33_minor_free: decomposition failed yet no subdivision exists");
            report.witness["parts"] = {{w.branch[0], w.branch[1], w.branch[2]},
                                       {w.branch[3], w.branch[4], w.branch[5]}};
            report.witness["paths"] = w.paths;
        }
    }
    return report;
}

RecognitionReport is_line_graph(const Graph& g) {
    RecognitionReport report{"line_graph", true, nullptr};
    const std::vector<Graph>& forbidden = forbidden_line_subgraphs();
    for (size_t idx = 0; idx < forbidden.size(); ++idx) {
        std::vector<int> emb = find_induced_embedding(g, forbidden[idx]);
        if (!emb.empty()) {
            report.verdict = false;
            report.witness = {{"forbidden_index", idx}, {"embedding", emb}};
            return report;
        }
    }
    return report;
}

namespace {

RecognitionReport prismatic_check(const Graph& g, std::string predicate, bool in_complement) {
    RecognitionReport report{std::move(predicate), true, nullptr};
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.adjacent(u, v)) continue;
            for (int w = v + 1; w < g.n(); ++w) {
                if (!g.adjacent(u, w) || !g.adjacent(v, w)) continue;
                for (int x = 0; x < g.n(); ++x) {
                    if (x == u || x == v || x == w) continue;
                    int count = int(g.adjacent(x, u)) + int(g.adjacent(x, v)) +
                                int(g.adjacent(x, w));
                    if (count != 1) {
                        report.verdict = false;
                        report.witness = {{"triangle", {u, v, w}},
                                          {"vertex", x},
                                          {"neighbor_count", count}};
                        if (in_complement) report.witness["in_complement"] = true;
                        return report;
                    }
                }
            }
        }
    return report;
}

}  // namespace

RecognitionReport is_prismatic(const Graph& g) {
    return prismatic_check(g, "prismatic", false);
}

RecognitionReport is_antiprismatic(const Graph& g) {
    return prismatic_check(complement(g), "antiprismatic", true);
}

RecognitionReport find_singular_vertex(const Graph& g) {
    RecognitionReport report{"singular_vertex", false, nullptr};
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> non;
        for (int u = 0; u < g.n(); ++u)
            if (u != v && !g.adjacent(u, v)) non.push_back(u);
        bool clique = true;
        for (size_t i = 0; i < non.size() && clique; ++i)
            for (size_t j = i + 1; j < non.size() && clique; ++j)
                if (!g.adjacent(non[i], non[j])) clique = false;
        if (clique) {
            report.verdict = true;
            report.witness = {{"vertex", v}};
            return report;
        }
    }
    return report;
}

RecognitionReport find_twins(const Graph& g) {
    RecognitionReport report{"twins", false, nullptr};
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.adjacent(u, v)) continue;
            bool same = true;
            for (int w = 0; w < g.n() && same; ++w) {
                if (w == u || w == v) continue;
                if (g.adjacent(u, w) != g.adjacent(v, w)) same = false;
            }
            if (same) {
                report.verdict = true;
                report.witness = {{"pair", {u, v}}};
                return report;
            }
        }
    return report;
}

namespace {

bool embed_from(const Graph& host, const Graph& pattern, std::vector<int>& image,
                std::vector<bool>& used, int next) {
    if (next == pattern.n()) return true;
    for (int cand = 0; cand < host.n(); ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (host.adjacent(image[prev], cand) != pattern.adjacent(prev, next)) ok = false;
        if (!ok) continue;
        image[next] = cand;
        used[cand] = true;
        if (embed_from(host, pattern, image, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

std::vector<int> find_induced_embedding(const Graph& host, const Graph& pattern) {
    if (pattern.n() > host.n()) return {};
    std::vector<int> image(pattern.n(), -1);
    std::vector<bool> used(host.n(), false);
    if (embed_from(host, pattern, image, used, 0)) return image;
    return {};
}

}  // namespace cliquecolor
