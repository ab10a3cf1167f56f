#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "cliquecolor/graph.hpp"

namespace cliquecolor {

enum class PieceKind { kPlanar, kK5 };

// A building block of a Wagner sequence.  The graph payload is always
// present; for kK5 it must be K5 itself on vertices 0..4.
struct WagnerPiece {
    PieceKind kind = PieceKind::kPlanar;
    Graph graph;
};

// How a piece attaches to the composition of everything before it.  Host
// ids index the composed prefix, piece ids the piece's own vertices.
struct GlueSpec {
    enum class Mode { kDisjoint, kOneVertex, kEdge, kNonadjacentPair };
    Mode mode = Mode::kDisjoint;
    int host_v = -1;
    int piece_v = -1;
    std::pair<int, int> host_pair{-1, -1};
    std::pair<int, int> piece_pair{-1, -1};
    // kEdge only: whether the identified edge survives the glue step.
    bool keep_edge = true;
};

struct WagnerSequence {
    std::vector<WagnerPiece> pieces;
    std::vector<GlueSpec> glues;  // glues[0] is Disjoint; one glue per piece
};

struct ComposeResult {
    Graph graph;
    // piece_maps[i][l] = composed id of piece i's local vertex l.  Anchored
    // locals map onto existing ids; the rest are appended in ascending
    // local order.
    std::vector<std::vector<int>> piece_maps;
};

// Builds the composed graph step by step, enforcing every glue invariant.
// Throws std::invalid_argument with the piece index on the first violation.
ComposeResult compose(const WagnerSequence& seq);

// All violated invariants, one message each; empty means ok.
std::vector<std::string> validate(const WagnerSequence& seq);

struct RandomSequenceParams {
    int piece_count = 4;
    int planar_min = 3;
    int planar_max = 12;
    double k5_weight = 0.2;  // chance a piece is K5 rather than planar
    // Relative weights of glue modes, filtered per step by applicability.
    // Nonadjacent gluing can create a K3,3 minor, so it defaults to off;
    // with a positive weight each candidate anchor set is rejection-sampled
    // against is_k33_minor_free.
    double w_disjoint = 1.0;
    double w_one_vertex = 2.0;
    double w_edge = 5.0;
    double w_nonadjacent = 0.0;
};

// Deterministic under (seed, params).  Planar pieces are random plane
// triangulations with a fraction of edges deleted; Edge glues always keep
// the identified edge.
WagnerSequence random_sequence(uint64_t seed, const RandomSequenceParams& params = {});

struct DecomposeResult {
    bool ok = false;
    WagnerSequence seq;
    // piece_origin[i][l] = original vertex of piece i's local vertex l.
    std::vector<std::vector<int>> piece_origin;
    // original vertex -> vertex of compose(seq).graph (identity-shaped
    // witness that the round trip reproduces g).
    std::vector<int> original_to_composed;
    // On failure: a 3-connected torso (virtual edges included) that is
    // neither planar nor K5.
    Graph torso;
    std::vector<int> torso_origin;
    std::vector<std::pair<int, int>> torso_virtual_pairs;  // torso-local
};

// Recursive split at connected components, cut vertices, then two-vertex
// separations (virtual-edge normal form: both sides receive the edge uv,
// and the final glue on the pair records keep_edge = uv ∈ E(g)).  Leaves
// must be planar or K5.  Never emits NonadjacentPair.
DecomposeResult decompose(const Graph& g);

nlohmann::json sequence_to_json(const WagnerSequence& seq);
WagnerSequence sequence_from_json(const nlohmann::json& j);

}  // namespace cliquecolor
