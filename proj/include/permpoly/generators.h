#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permpoly/embedding.h"
#include "permpoly/graph.h"

namespace permpoly {

enum class Family { Cycle, Path, Theta, G1, G2, HexChain, Cube, CompleteBipartite };

struct FamilySpec {
    Family family;
    std::vector<int> params;
    std::string code;  // hexagon chain turn code
};

/// Parses "cycle", "path", "theta", "G1", "G2", "hex_chain", "cube",
/// "complete_bipartite". Throws InvalidInput.
Family parse_family(std::string_view name);
Graph generate(const FamilySpec& spec);

Graph gen_cycle(int n);
/// Path on n vertices.
Graph gen_path(int n);
Graph gen_complete_bipartite(int a, int b);
/// Complete graph (used for non-bipartite checks).
Graph gen_complete(int n);
/// The 3-cube Q3; vertex ids are the bit patterns.
Graph gen_cube();

/// Two hubs (0 and 1) joined by internally disjoint paths of the given
/// lengths; interiors are numbered consecutively path by path.
/// Throws InvalidLengths.
Graph gen_theta(int l1, int l2, int l3);

/// s >= 2 paths of length three between hubs 0 and 1; path i uses
/// vertices 2+2i and 3+2i.
Graph gen_G1(int s);

/// Star prism K_{1,r} x K_2 with a length-three path added between every
/// pair of matched leaves. Ids: 0 centre of the first star, 1..r its
/// leaves, r+1 centre of the second star, r+2..2r+1 its leaves, then two
/// interior vertices per added path.
Graph gen_G2(int r);

/// Catacondensed hexagonal system on the axial hexagon lattice. `code` has
/// h-2 letters from {L,S,R} (left kink, straight, right kink) for a chain,
/// or is "B" with h = 4 for the branched system (one hexagon fused to three
/// pairwise non-adjacent hexagons). Throws InvalidCode, OverlapDetected.
Graph gen_hex_chain(int h, std::string_view code);

struct EmbeddedGraph {
    Graph graph;
    RotationEmbedding embedding;
};

/// Ten-vertex plane graph with three blocks: a theta(1,3,3) made of the
/// 4-cycles 0-1-2-3 and 2-3-7-8, the 4-cycle 0-4-5-6 hinged at vertex 0,
/// and the pendant edge 8-9 drawn inside the face of 2-3-7-8. A single
/// face-parity pass over the whole graph leaves 2-3-7-8 evenly oriented.
EmbeddedGraph hinged_blocks_fixture();

}  // namespace permpoly
