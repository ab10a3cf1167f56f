#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cliquecolor/atlas.hpp"
#include "cliquecolor/fixtures.hpp"
#include "cliquecolor/graph.hpp"
#include "cliquecolor/graph6.hpp"
#include "cliquecolor/recognize.hpp"
#include "cliquecolor/subdivision.hpp"
#include "cliquecolor/wagner.hpp"

using namespace cliquecolor;

static WagnerPiece planar_piece(const Graph& g) { return {PieceKind::kPlanar, g}; }
static WagnerPiece k5_piece() { return {PieceKind::kK5, complete_graph(5)}; }

static GlueSpec one_vertex(int host, int piece) {
    GlueSpec s;
    s.mode = GlueSpec::Mode::kOneVertex;
    s.host_v = host;
    s.piece_v = piece;
    return s;
}

static GlueSpec edge_glue(std::pair<int, int> host, std::pair<int, int> piece, bool keep) {
    GlueSpec s;
    s.mode = GlueSpec::Mode::kEdge;
    s.host_pair = host;
    s.piece_pair = piece;
    s.keep_edge = keep;
    return s;
}

static WagnerSequence two_k5_edge(bool keep) {
    WagnerSequence seq;
    seq.pieces = {k5_piece(), k5_piece()};
    seq.glues = {GlueSpec{}, edge_glue({0, 1}, {0, 1}, keep)};
    return seq;
}

// Adjacency equality of g and h under the vertex map g -> h.
static bool same_graph_under(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
    return true;
}

TEST_CASE("compose examples") {
    WagnerSequence disjoint;
    disjoint.pieces = {planar_piece(complete_graph(3)), planar_piece(complete_graph(3))};
    disjoint.glues = {GlueSpec{}, GlueSpec{}};
    ComposeResult d = compose(disjoint);
    CHECK(d.graph.n() == 6);
    CHECK(d.graph.edge_count() == 6);
    CHECK(connected_components(d.graph).size() == 2);

    WagnerSequence onev;
    onev.pieces = {k5_piece(), planar_piece(complete_graph(3))};
    onev.glues = {GlueSpec{}, one_vertex(0, 0)};
    ComposeResult o = compose(onev);
    CHECK(o.graph.n() == 7);
    CHECK(o.graph.edge_count() == 13);

    ComposeResult e = compose(two_k5_edge(true));
    CHECK(e.graph.n() == 8);
    CHECK(e.graph.edge_count() == 19);
    CHECK_FALSE(search_k33_subdivision(e.graph).found);
    CHECK(validate(two_k5_edge(true)).empty());
}

TEST_CASE("compose piece maps") {
    ComposeResult e = compose(two_k5_edge(true));
    REQUIRE(e.piece_maps.size() == 2);
    CHECK(e.piece_maps[0] == std::vector<int>{0, 1, 2, 3, 4});
    // anchors 0,1 land on host 0,1; the rest extend in ascending local order
    CHECK(e.piece_maps[1] == std::vector<int>{0, 1, 5, 6, 7});
}

TEST_CASE("dropping the identified edge") {
    ComposeResult e = compose(two_k5_edge(false));
    CHECK(e.graph.n() == 8);
    CHECK(e.graph.edge_count() == 18);
    CHECK_FALSE(e.graph.adjacent(0, 1));
}

TEST_CASE("nonadjacent pair glue") {
    WagnerSequence seq;
    seq.pieces = {planar_piece(cycle_graph(4)), planar_piece(cycle_graph(4))};
    GlueSpec glue;
    glue.mode = GlueSpec::Mode::kNonadjacentPair;
    glue.host_pair = {0, 2};
    glue.piece_pair = {0, 2};
    seq.glues = {GlueSpec{}, glue};
    ComposeResult r = compose(seq);
    CHECK(r.graph.n() == 6);
    CHECK(r.graph.edge_count() == 8);
    CHECK_FALSE(r.graph.adjacent(0, 2));
}

TEST_CASE("compose rejects bad glues with the piece index") {
    WagnerSequence seq;
    seq.pieces = {planar_piece(cycle_graph(4)), planar_piece(cycle_graph(4))};
    seq.glues = {GlueSpec{}, edge_glue({0, 2}, {0, 1}, true)};  // host pair not an edge
    CHECK_THROWS_WITH_AS(compose(seq), "piece 1: Edge glue host pair is not an edge",
                         std::invalid_argument);

    WagnerSequence first;
    first.pieces = {planar_piece(cycle_graph(4))};
    first.glues = {one_vertex(0, 0)};
    CHECK_THROWS_WITH_AS(compose(first), "piece 0: first glue must be Disjoint",
                         std::invalid_argument);

    WagnerSequence range;
    range.pieces = {planar_piece(cycle_graph(4)), planar_piece(cycle_graph(4))};
    range.glues = {GlueSpec{}, one_vertex(9, 0)};
    CHECK_THROWS_AS(compose(range), std::invalid_argument);

    WagnerSequence nonadj;
    nonadj.pieces = {planar_piece(cycle_graph(4)), planar_piece(cycle_graph(4))};
    GlueSpec glue;
    glue.mode = GlueSpec::Mode::kNonadjacentPair;
    glue.host_pair = {0, 1};  // adjacent in C4
    glue.piece_pair = {0, 2};
    nonadj.glues = {GlueSpec{}, glue};
    CHECK_THROWS_WITH_AS(compose(nonadj), "piece 1: NonadjacentPair host pair is adjacent",
                         std::invalid_argument);
}

TEST_CASE("validate reports payload and shape problems") {
    WagnerSequence bad;
    bad.pieces = {planar_piece(complete_bipartite(3, 3))};
    bad.glues = {GlueSpec{}};
    auto errors = validate(bad);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0] == "piece 0: not planar");

    auto empty_errors = validate(WagnerSequence{});
    REQUIRE(empty_errors.size() == 1);
    CHECK(empty_errors[0] == "piece 0: sequence is empty");

    WagnerSequence fake_k5;
    fake_k5.pieces = {{PieceKind::kK5, cycle_graph(5)}};
    fake_k5.glues = {GlueSpec{}};
    auto k5_errors = validate(fake_k5);
    REQUIRE(k5_errors.size() == 1);
    CHECK(k5_errors[0] == "piece 0: not K5");

    CHECK(validate(two_k5_edge(true)).empty());
    CHECK(validate(two_k5_edge(false)).empty());
}

TEST_CASE("validate collects every problem instead of stopping at the first") {
    WagnerSequence seq;
    seq.pieces = {planar_piece(complete_bipartite(3, 3)), planar_piece(cycle_graph(4))};
    seq.glues = {GlueSpec{}, edge_glue({0, 2}, {0, 1}, true)};
    auto errors = validate(seq);
    CHECK(errors.size() == 2);
}

TEST_CASE("random sequences are deterministic under the seed") {
    RandomSequenceParams params;
    params.piece_count = 5;
    params.planar_max = 9;
    std::string a = sequence_to_json(random_sequence(42, params)).dump();
    std::string b = sequence_to_json(random_sequence(42, params)).dump();
    CHECK(a == b);
    std::string c = sequence_to_json(random_sequence(43, params)).dump();
    CHECK(a != c);
}

TEST_CASE("random sequence composed of one forced K5") {
    RandomSequenceParams params;
    params.piece_count = 1;
    params.k5_weight = 1.0;
    WagnerSequence seq = random_sequence(1, params);
    REQUIRE(seq.pieces.size() == 1);
    CHECK(seq.pieces[0].kind == PieceKind::kK5);
    CHECK(compose(seq).graph == complete_graph(5));
}

TEST_CASE("random sequences validate and compose minor-free") {
    RandomSequenceParams params;
    params.piece_count = 4;
    params.planar_max = 8;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        WagnerSequence seq = random_sequence(seed, params);
        CHECK(static_cast<int>(seq.pieces.size()) == params.piece_count);
        CHECK(validate(seq).empty());
        ComposeResult r = compose(seq);
        CHECK(is_k33_minor_free(r.graph).verdict);
    }
}

TEST_CASE("random sequences with nonadjacent glue stay minor-free") {
    RandomSequenceParams params;
    params.piece_count = 4;
    params.planar_max = 7;
    params.w_nonadjacent = 3.0;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        WagnerSequence seq = random_sequence(seed, params);
        CHECK(validate(seq).empty());
        CHECK(is_k33_minor_free(compose(seq).graph).verdict);
    }
}

TEST_CASE("sequence json round trip") {
    WagnerSequence seq = random_sequence(7, {});
    nlohmann::json j = sequence_to_json(seq);
    WagnerSequence back = sequence_from_json(j);
    CHECK(sequence_to_json(back).dump() == j.dump());
    CHECK(compose(back).graph == compose(seq).graph);

    nlohmann::json k5_edge = sequence_to_json(two_k5_edge(false));
    CHECK(k5_edge.at("glues")[1].at("keep_edge") == false);
    CHECK(compose(sequence_from_json(k5_edge)).graph == compose(two_k5_edge(false)).graph);
}

TEST_CASE("decompose single-piece leaves") {
    DecomposeResult planar = decompose(cycle_graph(6));
    REQUIRE(planar.ok);
    REQUIRE(planar.seq.pieces.size() == 1);
    CHECK(planar.seq.pieces[0].kind == PieceKind::kPlanar);
    CHECK(compose(planar.seq).graph == cycle_graph(6));

    DecomposeResult k5 = decompose(complete_graph(5));
    REQUIRE(k5.ok);
    REQUIRE(k5.seq.pieces.size() == 1);
    CHECK(k5.seq.pieces[0].kind == PieceKind::kK5);
}

TEST_CASE("decompose the edge sum of two K5s") {
    Graph g = compose(two_k5_edge(true)).graph;
    DecomposeResult dec = decompose(g);
    REQUIRE(dec.ok);
    REQUIRE(dec.seq.pieces.size() == 2);
    CHECK(dec.seq.pieces[0].kind == PieceKind::kK5);
    CHECK(dec.seq.pieces[1].kind == PieceKind::kK5);
    CHECK(dec.seq.glues[1].mode == GlueSpec::Mode::kEdge);
    CHECK(dec.seq.glues[1].keep_edge);
    CHECK(same_graph_under(g, compose(dec.seq).graph, dec.original_to_composed));
}

TEST_CASE("decompose records a dropped virtual edge") {
    Graph g = compose(two_k5_edge(false)).graph;
    DecomposeResult dec = decompose(g);
    REQUIRE(dec.ok);
    REQUIRE(dec.seq.pieces.size() == 2);
    CHECK(dec.seq.glues[1].mode == GlueSpec::Mode::kEdge);
    CHECK_FALSE(dec.seq.glues[1].keep_edge);
    CHECK(same_graph_under(g, compose(dec.seq).graph, dec.original_to_composed));
}

TEST_CASE("decompose failure witnesses") {
    DecomposeResult k33 = decompose(complete_bipartite(3, 3));
    CHECK_FALSE(k33.ok);
    CHECK(k33.torso.n() == 6);
    bool torso_nonplanar = search_k5_subdivision(k33.torso).found ||
                           search_k33_subdivision(k33.torso).found;
    CHECK(torso_nonplanar);
    CHECK_FALSE(k33.torso == complete_graph(5));
    CHECK(k33.torso_virtual_pairs.empty());

    DecomposeResult pet = decompose(petersen_graph());
    CHECK_FALSE(pet.ok);
    CHECK(pet.torso.n() == 10);
}

TEST_CASE("decompose input validation") {
    CHECK_THROWS_AS(decompose(Graph(0)), std::invalid_argument);
    CHECK_THROWS_AS(decompose(Graph(300)), std::invalid_argument);
}

TEST_CASE("decompose round trip across the connected atlas to n = 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : connected_graph_atlas(n)) {
            bool minor_free = !search_k33_subdivision(g).found;
            DecomposeResult dec = decompose(g);
            CHECK(dec.ok == minor_free);
            if (dec.ok) {
                CHECK(validate(dec.seq).empty());
                CHECK(same_graph_under(g, compose(dec.seq).graph, dec.original_to_composed));
                for (const GlueSpec& glue : dec.seq.glues)
                    CHECK(glue.mode != GlueSpec::Mode::kNonadjacentPair);
            }
        }
}

TEST_CASE("decompose handles disconnected input") {
    Graph g = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {5, 6}});
    DecomposeResult dec = decompose(g);
    REQUIRE(dec.ok);
    int disjoint = 0;
    for (const GlueSpec& glue : dec.seq.glues)
        disjoint += glue.mode == GlueSpec::Mode::kDisjoint;
    CHECK(disjoint >= 3);  // one per component at least
    CHECK(same_graph_under(g, compose(dec.seq).graph, dec.original_to_composed));
}
