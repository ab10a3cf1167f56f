#include "cliquecolor/wagner.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "cliquecolor/fixtures.hpp"
#include "cliquecolor/graph6.hpp"
#include "cliquecolor/planarity.hpp"
#include "cliquecolor/recognize.hpp"

namespace cliquecolor {

namespace {

std::pair<int, int> ordered(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

bool graph_is_k5(const Graph& g) { return g.n() == 5 && g.edge_count() == 10; }

std::string at_piece(size_t i, const std::string& msg) {
    return "piece " + std::to_string(i) + ": " + msg;
}

// One pass over the sequence shared by compose and validate.  In collect
// mode glue violations are recorded and the glue degrades to Disjoint so the
// walk can continue; otherwise the first violation throws.
struct ComposeWalk {
    const WagnerSequence& seq;
    std::vector<std::string>* errors;  // collect mode when non-null

    int n = 0;
    std::set<std::pair<int, int>> edges;
    std::vector<std::vector<int>> piece_maps;

    bool fail(size_t i, const std::string& msg) {
        if (!errors) throw std::invalid_argument(at_piece(i, msg));
        errors->push_back(at_piece(i, msg));
        return false;
    }

    bool host_adjacent(int a, int b) const { return edges.count(ordered(a, b)) > 0; }

    void run() {
        if (seq.pieces.empty()) {
            fail(0, "sequence is empty");
            return;
        }
        if (seq.glues.size() != seq.pieces.size()) {
            fail(0, "piece and glue counts differ");
            return;
        }
        for (size_t i = 0; i < seq.pieces.size(); ++i) {
            const Graph& piece = seq.pieces[i].graph;
            GlueSpec glue = seq.glues[i];
            if (i == 0 && glue.mode != GlueSpec::Mode::kDisjoint) {
                fail(i, "first glue must be Disjoint");
                glue.mode = GlueSpec::Mode::kDisjoint;
            }
            std::vector<int> map(piece.n(), -1);
            bool ok = true;
            switch (glue.mode) {
                case GlueSpec::Mode::kDisjoint:
                    break;
                case GlueSpec::Mode::kOneVertex: {
                    if (glue.host_v < 0 || glue.host_v >= n)
                        ok = fail(i, "OneVertex host id out of range");
                    else if (glue.piece_v < 0 || glue.piece_v >= piece.n())
                        ok = fail(i, "OneVertex piece id out of range");
                    if (ok) map[glue.piece_v] = glue.host_v;
                    break;
                }
                case GlueSpec::Mode::kEdge:
                case GlueSpec::Mode::kNonadjacentPair: {
                    bool edge_mode = glue.mode == GlueSpec::Mode::kEdge;
                    auto [h1, h2] = glue.host_pair;
                    auto [p1, p2] = glue.piece_pair;
                    if (h1 < 0 || h1 >= n || h2 < 0 || h2 >= n || h1 == h2)
                        ok = fail(i, "host pair out of range or degenerate");
                    else if (p1 < 0 || p1 >= piece.n() || p2 < 0 || p2 >= piece.n() || p1 == p2)
                        ok = fail(i, "piece pair out of range or degenerate");
                    else if (edge_mode && !host_adjacent(h1, h2))
                        ok = fail(i, "Edge glue host pair is not an edge");
                    else if (edge_mode && !piece.adjacent(p1, p2))
                        ok = fail(i, "Edge glue piece pair is not an edge");
                    else if (!edge_mode && host_adjacent(h1, h2))
                        ok = fail(i, "NonadjacentPair host pair is adjacent");
                    else if (!edge_mode && piece.adjacent(p1, p2))
                        ok = fail(i, "NonadjacentPair piece pair is adjacent");
                    if (ok) {
                        map[p1] = h1;
                        map[p2] = h2;
                    }
                    break;
                }
            }
            for (int l = 0; l < piece.n(); ++l)
                if (map[l] < 0) map[l] = n++;
            for (auto [a, b] : piece.edges()) edges.insert(ordered(map[a], map[b]));
            if (ok && glue.mode == GlueSpec::Mode::kEdge && !glue.keep_edge)
                edges.erase(ordered(glue.host_pair.first, glue.host_pair.second));
            piece_maps.push_back(std::move(map));
        }
    }

    Graph graph() const {
        return Graph::from_edge_list(n, {edges.begin(), edges.end()});
    }
};

}  // namespace

ComposeResult compose(const WagnerSequence& seq) {
    ComposeWalk walk{seq, nullptr};
    walk.run();
    return {walk.graph(), walk.piece_maps};
}

std::vector<std::string> validate(const WagnerSequence& seq) {
    std::vector<std::string> errors;
    for (size_t i = 0; i < seq.pieces.size(); ++i) {
        const WagnerPiece& piece = seq.pieces[i];
        if (piece.kind == PieceKind::kPlanar) {
            if (!planarity_test(piece.graph).planar)
                errors.push_back(at_piece(i, "not planar"));
        } else if (!graph_is_k5(piece.graph)) {
            errors.push_back(at_piece(i, "not K5"));
        }
    }
    ComposeWalk walk{seq, &errors};
    walk.run();
    return errors;
}

namespace {

int draw_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool draw_chance(std::mt19937_64& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

Graph random_planar_piece(std::mt19937_64& rng, int lo, int hi) {
    int n = draw_int(rng, lo, hi);
    if (n <= 2) return complete_graph(n);
    std::set<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        int fi = draw_int(rng, 0, int(faces.size()) - 1);
        auto [a, b, c] = faces[fi];
        edges.insert(ordered(a, v));
        edges.insert(ordered(b, v));
        edges.insert(ordered(c, v));
        faces[fi] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }
    std::vector<std::pair<int, int>> kept;
    for (const auto& e : edges)
        if (!draw_chance(rng, 0.25)) kept.push_back(e);
    return Graph::from_edge_list(n, kept);
}

std::vector<std::pair<int, int>> non_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) out.push_back({u, v});
    return out;
}

}  // namespace

WagnerSequence random_sequence(uint64_t seed, const RandomSequenceParams& params) {
    if (params.piece_count < 1)
        throw std::invalid_argument("random_sequence: piece_count must be >= 1");
    if (params.planar_min < 1 || params.planar_max < params.planar_min)
        throw std::invalid_argument("random_sequence: bad planar size range");
    std::mt19937_64 rng(seed);
    WagnerSequence seq;
    for (int i = 0; i < params.piece_count; ++i) {
        WagnerPiece piece;
        if (draw_chance(rng, params.k5_weight)) {
            piece = {PieceKind::kK5, complete_graph(5)};
        } else {
            piece = {PieceKind::kPlanar,
                     random_planar_piece(rng, params.planar_min, params.planar_max)};
        }
        GlueSpec glue;
        if (i > 0) {
            Graph host = compose(seq).graph;
            std::vector<std::pair<int, int>> host_edges = host.edges();
            std::vector<std::pair<int, int>> piece_edges = piece.graph.edges();
            std::vector<std::pair<int, int>> host_non = non_edges(host);
            std::vector<std::pair<int, int>> piece_non = non_edges(piece.graph);
            std::vector<GlueSpec::Mode> modes;
            std::vector<double> weights;
            auto offer = [&](GlueSpec::Mode m, double w, bool usable) {
                if (w > 0 && usable) {
                    modes.push_back(m);
                    weights.push_back(w);
                }
            };
            offer(GlueSpec::Mode::kDisjoint, params.w_disjoint, true);
            offer(GlueSpec::Mode::kOneVertex, params.w_one_vertex, true);
            offer(GlueSpec::Mode::kEdge, params.w_edge,
                  !host_edges.empty() && !piece_edges.empty());
            offer(GlueSpec::Mode::kNonadjacentPair, params.w_nonadjacent,
                  !host_non.empty() && !piece_non.empty());
            GlueSpec::Mode mode = GlueSpec::Mode::kDisjoint;
            if (!modes.empty()) {
                std::discrete_distribution<int> pick(weights.begin(), weights.end());
                mode = modes[pick(rng)];
            }
            glue.mode = mode;
            if (mode == GlueSpec::Mode::kOneVertex) {
                glue.host_v = draw_int(rng, 0, host.n() - 1);
                glue.piece_v = draw_int(rng, 0, piece.graph.n() - 1);
            } else if (mode == GlueSpec::Mode::kEdge) {
                glue.host_pair = host_edges[draw_int(rng, 0, int(host_edges.size()) - 1)];
                glue.piece_pair = piece_edges[draw_int(rng, 0, int(piece_edges.size()) - 1)];
                if (draw_chance(rng, 0.5))
                    std::swap(glue.piece_pair.first, glue.piece_pair.second);
                glue.keep_edge = true;
            } else if (mode == GlueSpec::Mode::kNonadjacentPair) {
                // This mode can create a K3,3 minor; rejection-sample anchors.
                bool accepted = false;
                for (int attempt = 0; attempt < 50 && !accepted; ++attempt) {
                    glue.host_pair = host_non[draw_int(rng, 0, int(host_non.size()) - 1)];
                    glue.piece_pair = piece_non[draw_int(rng, 0, int(piece_non.size()) - 1)];
                    if (draw_chance(rng, 0.5))
                        std::swap(glue.piece_pair.first, glue.piece_pair.second);
                    WagnerSequence trial = seq;
                    trial.pieces.push_back(piece);
                    trial.glues.push_back(glue);
                    accepted = is_k33_minor_free(compose(trial).graph).verdict;
                }
                if (!accepted) glue = GlueSpec{};
            }
        }
        seq.pieces.push_back(std::move(piece));
        seq.glues.push_back(glue);
    }
    return seq;
}

namespace {

struct Decomposer {
    const Graph& g;
    WagnerSequence seq;
    std::vector<std::vector<int>> piece_origin;
    std::vector<int> composed_of;                       // original -> composed
    int composed_n = 0;
    std::vector<std::pair<int, int>> glue_orig_pair;    // per glue; (-1,-1) if none
    bool failed = false;
    Graph fail_torso;
    std::vector<int> fail_origin;

    explicit Decomposer(const Graph& graph) : g(graph), composed_of(graph.n(), -1) {}

    struct Attach {
        GlueSpec::Mode mode = GlueSpec::Mode::kDisjoint;
        int vertex = -1;                 // original id, kOneVertex
        std::pair<int, int> pair{-1, -1};  // original ids, kEdge
    };

    static bool contains(const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    }

    bool holds_anchors(const std::vector<int>& origin, const Attach& a) const {
        switch (a.mode) {
            case GlueSpec::Mode::kDisjoint:
                return true;
            case GlueSpec::Mode::kOneVertex:
                return contains(origin, a.vertex);
            default:
                return contains(origin, a.pair.first) && contains(origin, a.pair.second);
        }
    }

    void emit_leaf(Graph piece, std::vector<int> origin, PieceKind kind, const Attach& a) {
        auto local = [&](int orig) {
            for (size_t i = 0; i < origin.size(); ++i)
                if (origin[i] == orig) return int(i);
            throw std::logic_error("decompose: attach anchor missing from its piece");
        };
        GlueSpec glue;
        glue.mode = a.mode;
        std::pair<int, int> orig_pair{-1, -1};
        if (a.mode == GlueSpec::Mode::kOneVertex) {
            glue.host_v = composed_of[a.vertex];
            glue.piece_v = local(a.vertex);
        } else if (a.mode == GlueSpec::Mode::kEdge) {
            glue.host_pair = {composed_of[a.pair.first], composed_of[a.pair.second]};
            glue.piece_pair = {local(a.pair.first), local(a.pair.second)};
            glue.keep_edge = true;  // finalized by the keep_edge pass
            orig_pair = a.pair;
        }
        for (size_t l = 0; l < origin.size(); ++l)
            if (composed_of[origin[l]] < 0) composed_of[origin[l]] = composed_n++;
        seq.pieces.push_back({kind, std::move(piece)});
        seq.glues.push_back(glue);
        piece_origin.push_back(std::move(origin));
        glue_orig_pair.push_back(orig_pair);
    }

    // Induced side over W-local vertex set, with the edge {a,b} forced in
    // when present (a,b < 0 skips).  Returns side graph plus origin list.
    std::pair<Graph, std::vector<int>> make_side(const Graph& W, const std::vector<int>& origin,
                                                 VertexSet side_local, int a, int b) const {
        std::sort(side_local.begin(), side_local.end());
        Induced ind = induced_subgraph(W, side_local);
        Graph side = ind.graph;
        if (a >= 0) {
            int la = int(std::lower_bound(side_local.begin(), side_local.end(), a) -
                         side_local.begin());
            int lb = int(std::lower_bound(side_local.begin(), side_local.end(), b) -
                         side_local.begin());
            if (!side.adjacent(la, lb)) {
                auto edges = side.edges();
                edges.push_back({la, lb});
                side = Graph::from_edge_list(side.n(), edges);
            }
        }
        std::vector<int> side_origin(side_local.size());
        for (size_t i = 0; i < side_local.size(); ++i) side_origin[i] = origin[side_local[i]];
        return {std::move(side), std::move(side_origin)};
    }

    void decomp(const Graph& W, const std::vector<int>& origin, const Attach& attach) {
        if (failed) return;
        std::vector<VertexSet> comps = connected_components(W);
        if (comps.size() > 1) {
            // Only reachable for disconnected input; splits never disconnect.
            std::vector<std::pair<Graph, std::vector<int>>> sides;
            for (const VertexSet& comp : comps) sides.push_back(make_side(W, origin, comp, -1, -1));
            size_t trunk = 0;
            for (size_t i = 0; i < sides.size(); ++i)
                if (holds_anchors(sides[i].second, attach)) {
                    trunk = i;
                    break;
                }
            decomp(sides[trunk].first, sides[trunk].second, attach);
            for (size_t i = 0; i < sides.size(); ++i)
                if (i != trunk) decomp(sides[i].first, sides[i].second, Attach{});
            return;
        }
        if (planarity_test(W).planar) {
            emit_leaf(W, origin, PieceKind::kPlanar, attach);
            return;
        }
        if (graph_is_k5(W)) {
            emit_leaf(W, origin, PieceKind::kK5, attach);
            return;
        }
        BlockCut bc = cut_vertices_and_blocks(W);
        if (!bc.cut_vertices.empty()) {
            int c = *std::min_element(bc.cut_vertices.begin(), bc.cut_vertices.end());
            Graph rest = vertex_deleted(W, c);
            std::vector<VertexSet> parts = connected_components(rest);
            std::vector<std::pair<Graph, std::vector<int>>> sides;
            for (VertexSet part : parts) {
                for (int& x : part)
                    if (x >= c) ++x;  // undo the deletion renumbering
                part.push_back(c);
                sides.push_back(make_side(W, origin, part, -1, -1));
            }
            split_sides(std::move(sides), attach,
                        Attach{GlueSpec::Mode::kOneVertex, origin[c], {-1, -1}});
            return;
        }
        for (int u = 0; u < W.n(); ++u) {
            for (int v = u + 1; v < W.n(); ++v) {
                Graph rest = pair_deleted(W, u, v);
                std::vector<VertexSet> parts = connected_components(rest);
                if (parts.size() < 2) continue;
                std::vector<std::pair<Graph, std::vector<int>>> sides;
                for (VertexSet part : parts) {
                    for (int& x : part) {
                        if (x >= u) ++x;
                        if (x >= v) ++x;
                    }
                    part.push_back(u);
                    part.push_back(v);
                    sides.push_back(make_side(W, origin, part, u, v));
                }
                split_sides(std::move(sides), attach,
                            Attach{GlueSpec::Mode::kEdge, -1, {origin[u], origin[v]}});
                return;
            }
        }
        failed = true;
        fail_torso = W;
        fail_origin = origin;
    }

    // Recurse into the trunk side with the inherited attachment, then the
    // remaining sides with the split's own glue.
    void split_sides(std::vector<std::pair<Graph, std::vector<int>>> sides, const Attach& attach,
                     const Attach& side_attach) {
        size_t trunk = 0;
        bool found = false;
        for (size_t i = 0; i < sides.size() && !found; ++i)
            if (holds_anchors(sides[i].second, attach)) {
                trunk = i;
                found = true;
            }
        if (!found) throw std::logic_error("decompose: no side holds the attach anchors");
        decomp(sides[trunk].first, sides[trunk].second, attach);
        for (size_t i = 0; i < sides.size(); ++i)
            if (i != trunk) decomp(sides[i].first, sides[i].second, side_attach);
    }

    static Graph vertex_deleted(const Graph& g, int c) {
        VertexSet keep;
        for (int v = 0; v < g.n(); ++v)
            if (v != c) keep.push_back(v);
        return induced_subgraph(g, keep).graph;
    }

    static Graph pair_deleted(const Graph& g, int u, int v) {
        VertexSet keep;
        for (int w = 0; w < g.n(); ++w)
            if (w != u && w != v) keep.push_back(w);
        return induced_subgraph(g, keep).graph;
    }
};

}  // namespace

DecomposeResult decompose(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("decompose: empty graph");
    if (g.n() > 256) throw std::invalid_argument("decompose: size limit exceeded (n > 256)");
    Decomposer dec(g);
    std::vector<int> identity(g.n());
    for (int v = 0; v < g.n(); ++v) identity[v] = v;
    dec.decomp(g, identity, Decomposer::Attach{});
    DecomposeResult result;
    if (dec.failed) {
        result.ok = false;
        result.torso = dec.fail_torso;
        result.torso_origin = dec.fail_origin;
        for (auto [a, b] : dec.fail_torso.edges())
            if (!g.adjacent(dec.fail_origin[a], dec.fail_origin[b]))
                result.torso_virtual_pairs.push_back({a, b});
        return result;
    }
    // keep_edge pass: every glue on a given identified pair keeps the edge
    // except the last one, which records membership in E(g).
    std::map<std::pair<int, int>, std::vector<size_t>> by_pair;
    for (size_t i = 0; i < dec.seq.glues.size(); ++i)
        if (dec.glue_orig_pair[i] != std::make_pair(-1, -1))
            by_pair[ordered(dec.seq.glues[i].host_pair.first, dec.seq.glues[i].host_pair.second)]
                .push_back(i);
    for (const auto& [pair, indices] : by_pair) {
        size_t last = indices.back();
        auto [ou, ov] = dec.glue_orig_pair[last];
        dec.seq.glues[last].keep_edge = g.adjacent(ou, ov);
    }
    // Round-trip check: the composition must reproduce g exactly under the
    // recorded vertex correspondence.
    ComposeResult composed = compose(dec.seq);
    if (composed.graph.n() != g.n())
        throw std::logic_error("decompose: round trip changed the vertex count");
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y)
            if (composed.graph.adjacent(dec.composed_of[x], dec.composed_of[y]) !=
                g.adjacent(x, y))
                throw std::logic_error("decompose: round trip changed an adjacency");
    result.ok = true;
    result.seq = std::move(dec.seq);
    result.piece_origin = std::move(dec.piece_origin);
    result.original_to_composed = std::move(dec.composed_of);
    return result;
}

nlohmann::json sequence_to_json(const WagnerSequence& seq) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const WagnerPiece& p : seq.pieces) {
        if (p.kind == PieceKind::kK5)
            pieces.push_back({{"kind", "k5"}});
        else
            pieces.push_back({{"kind", "planar"}, {"graph6", encode_graph6(p.graph)}});
    }
    nlohmann::json glues = nlohmann::json::array();
    for (const GlueSpec& glue : seq.glues) {
        switch (glue.mode) {
            case GlueSpec::Mode::kDisjoint:
                glues.push_back({{"mode", "disjoint"}});
                break;
            case GlueSpec::Mode::kOneVertex:
                glues.push_back({{"mode", "one_vertex"},
                                 {"anchors",
                                  {{"host", glue.host_v}, {"piece", glue.piece_v}}}});
                break;
            case GlueSpec::Mode::kEdge:
                glues.push_back(
                    {{"mode", "edge"},
                     {"anchors",
                      {{"host", {glue.host_pair.first, glue.host_pair.second}},
                       {"piece", {glue.piece_pair.first, glue.piece_pair.second}}}},
                     {"keep_edge", glue.keep_edge}});
                break;
            case GlueSpec::Mode::kNonadjacentPair:
                glues.push_back(
                    {{"mode", "nonadjacent_pair"},
                     {"anchors",
                      {{"host", {glue.host_pair.first, glue.host_pair.second}},
                       {"piece", {glue.piece_pair.first, glue.piece_pair.second}}}}});
                break;
        }
    }
    return {{"pieces", pieces}, {"glues", glues}};
}

WagnerSequence sequence_from_json(const nlohmann::json& j) {
    WagnerSequence seq;
    for (const auto& p : j.at("pieces")) {
        std::string kind = p.at("kind").get<std::string>();
        if (kind == "k5") {
            seq.pieces.push_back({PieceKind::kK5, complete_graph(5)});
        } else if (kind == "planar") {
            seq.pieces.push_back(
                {PieceKind::kPlanar, parse_graph6(p.at("graph6").get<std::string>())});
        } else {
            throw std::invalid_argument("unknown piece kind: " + kind);
        }
    }
    for (const auto& gj : j.at("glues")) {
        GlueSpec glue;
        std::string mode = gj.at("mode").get<std::string>();
        if (mode == "disjoint") {
            glue.mode = GlueSpec::Mode::kDisjoint;
        } else if (mode == "one_vertex") {
            glue.mode = GlueSpec::Mode::kOneVertex;
            glue.host_v = gj.at("anchors").at("host").get<int>();
            glue.piece_v = gj.at("anchors").at("piece").get<int>();
        } else if (mode == "edge" || mode == "nonadjacent_pair") {
            glue.mode = mode == "edge" ? GlueSpec::Mode::kEdge : GlueSpec::Mode::kNonadjacentPair;
            const auto& anchors = gj.at("anchors");
            glue.host_pair = {anchors.at("host").at(0).get<int>(),
                              anchors.at("host").at(1).get<int>()};
            glue.piece_pair = {anchors.at("piece").at(0).get<int>(),
                               anchors.at("piece").at(1).get<int>()};
            if (glue.mode == GlueSpec::Mode::kEdge)
                glue.keep_edge = gj.value("keep_edge", true);
        } else {
            throw std::invalid_argument("unknown glue mode: " + mode);
        }
        seq.glues.push_back(glue);
    }
    return seq;
}

}  // namespace cliquecolor
