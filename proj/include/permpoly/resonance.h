#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "permpoly/embedding.h"
#include "permpoly/graph.h"

namespace permpoly {

inline constexpr int kEvenThetaOracleBound = 14;

/// A chord of a cycle, or a component of G - V(C) together with the edges
/// joining it to C.
struct Bridge {
    std::vector<EdgeId> edges;        // ascending
    std::vector<Vertex> attachments;  // vertices of C touched by the bridge, ascending
};

std::vector<Bridge> bridges_of_cycle(const Graph& g, const Cycle& c);

struct EarDecomposition {
    Cycle start_cycle;
    std::vector<std::vector<Vertex>> ears;  // each a path; endpoints already present when it is added
};

enum class ViolationKind {
    NotPlanar,                // the block has no plane embedding
    BridgeAttachmentCount,    // a bridge of a facial cycle has != 2 attachments
    BridgeAttachmentColors,   // a bridge's two attachments share a colour
    BlockAttachmentColors,    // a 2-connected piece of a bridge hangs on same-coloured vertices
};

std::string_view to_string(ViolationKind kind);

/// Why a block contains an even subdivision of K2,3. Vertex and edge ids
/// refer to the graph that was checked.
struct Violation {
    ViolationKind kind;
    std::vector<Vertex> cycle;        // facial cycle whose bridge failed (empty for NotPlanar)
    std::vector<Vertex> attachments;  // offending attachment vertices
    std::vector<EdgeId> edges;        // edges of the offending bridge or block
};

struct BlockCheck {
    bool resonant = false;
    std::optional<Violation> violation;
};

/// Recursive bridge test on a facial cycle of a 2-connected plane bipartite
/// graph: every bridge must attach at exactly two vertices of different
/// colours, and every 2-connected piece H of a bridge must hang on two
/// differently coloured vertices p, q; the test then recurses into H + pq.
/// Throws Not2Connected, NotBipartiteError or NotPlanarError.
BlockCheck is_block_1cr(const Graph& b);
BlockCheck is_block_1cr(const Graph& b, const RotationEmbedding& emb);

bool is_2connected(const Graph& g);

struct BlockVerdict {
    int id = 0;
    std::vector<EdgeId> edges;
    bool verdict = true;
    std::optional<EarDecomposition> ears;  // for resonant blocks with a cycle
    std::optional<Violation> violation;    // in block-local ids mapped back to G
};

struct ResonanceReport {
    bool verdict = true;  // G contains no even subdivision of K2,3
    std::vector<BlockVerdict> blocks;
};

/// Per-block decision. Throws NotBipartiteError or Disconnected.
ResonanceReport contains_no_even_k23(const Graph& g);

/// Bipartite ear decomposition starting at `c`, grown greedily: take the
/// smallest unused edge touching the current subgraph and route it back to
/// the subgraph avoiding its anchor. Throws NotResonant when `b` contains an
/// even K2,3 subdivision.
EarDecomposition ear_decomposition(const Graph& b, const Cycle& c);

/// Brute force: every cycle C leaves only even components in B - V(C).
bool oracle_1cr(const Graph& b, int bound = kCycleOracleBound);

struct EvenTheta {
    Vertex s = -1;
    Vertex t = -1;
    std::array<std::vector<Vertex>, 3> paths;
};

/// Brute force search for three internally disjoint even s-t paths, pairs
/// in increasing order. Throws TooLargeForOracle.
std::optional<EvenTheta> oracle_even_theta(const Graph& g, int bound = kEvenThetaOracleBound);

}  // namespace permpoly
