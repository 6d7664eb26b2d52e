#pragma once

#include <utility>
#include <vector>

#include "permpoly/embedding.h"
#include "permpoly/graph.h"

namespace permpoly {

/// Direction per edge id as (tail, head).
struct Orientation {
    std::vector<std::pair<Vertex, Vertex>> direction;

    Vertex tail(EdgeId e) const { return direction[static_cast<std::size_t>(e)].first; }
    Vertex head(EdgeId e) const { return direction[static_cast<std::size_t>(e)].second; }
    bool along(const Graph& g, Dart d) const { return tail(d.edge) == d.tail(g); }

    friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Every edge directed from its lower to its higher endpoint.
Orientation ascending_orientation(const Graph& g);

/// Validates that `o` orients every edge of `g` exactly once. Throws InvalidInput.
void check_orientation(const Graph& g, const Orientation& o);

/// Number of face-walk darts the orientation agrees with.
int clockwise_count(const Graph& g, const Face& f, const Orientation& o);

/// Every face except the outer one has an odd clockwise count.
bool interior_faces_odd(const Graph& g, const RotationEmbedding& emb, const Orientation& o);

/// Face-parity orientation of a connected plane graph: a BFS tree from
/// vertex 0 is directed low -> high, then each interior face is closed in
/// leaf-to-root order of the dual tree on the remaining edges, rooted at
/// the outer face, with its closing edge set so the face has an odd number
/// of clockwise edges. Applied to a whole graph with cut vertices this can
/// leave evenly oriented cycles; orient_graph runs it per block.
Orientation orient_plane_graph(const Graph& g, const RotationEmbedding& emb);

/// Throws Not2Connected or InvalidEmbedding.
Orientation orient_block(const Graph& b, const RotationEmbedding& emb);
Orientation orient_block(const Graph& b);

/// Per-block orientation of a connected bipartite graph without an even
/// K2,3 subdivision; cut edges go low -> high. Every cycle comes out oddly
/// oriented. Throws ContainsEvenK23, NotPlanarError, NotBipartiteError,
/// Disconnected.
Orientation orient_graph(const Graph& g);
/// Same, using the given plane embedding restricted to each block.
Orientation orient_graph(const Graph& g, const RotationEmbedding& emb);

/// Parity of edges agreeing with one traversal of an even cycle. Throws
/// OddLengthCycle.
bool is_oddly_oriented(const Graph& g, const Orientation& o, const Cycle& c);

/// Brute force over every cycle. Throws TooLargeForOracle.
bool verify_all_cycles_odd(const Graph& g, const Orientation& o, int bound = kCycleOracleBound);

/// Every nice even cycle is oddly oriented. Throws TooLargeForOracle.
bool verify_pfaffian(const Graph& g, const Orientation& o, int bound = kCycleOracleBound);

}  // namespace permpoly
