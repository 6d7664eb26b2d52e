#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "permpoly/bigint.h"
#include "permpoly/errors.h"

namespace permpoly {

using Vertex = int;
using EdgeId = int;

/// Largest order accepted by the brute-force cycle enumerator by default.
inline constexpr int kCycleOracleBound = 20;

struct Edge {
    Vertex u;  // always u < v
    Vertex v;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool has(Vertex w) const { return w == u || w == v; }
};

/// Undirected simple graph with dense vertex ids 0..n-1 and stable edge ids
/// 0..m-1 (position in the construction list). Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : incidence_(static_cast<std::size_t>(n)) {}

    int num_vertices() const { return static_cast<int>(incidence_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }

    /// Incident edge ids of `v`, ascending.
    std::span<const EdgeId> incident(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    /// Neighbours of `v` in ascending vertex order.
    std::vector<Vertex> neighbors(Vertex v) const;

    std::vector<std::pair<Vertex, Vertex>> edge_list() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edge_list() == b.edge_list() && a.num_vertices() == b.num_vertices(); }

private:
    friend Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list);

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// Throws DuplicateEdge, SelfLoop or VertexOutOfRange.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list);
inline Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
    return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
}

/// A subgraph relabelled to dense ids, with maps back to the parent graph.
/// Vertices keep their relative order, edges keep their relative order.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> parent_vertex;
    std::vector<EdgeId> parent_edge;
};

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

bool is_connected(const Graph& g);
/// Component label per vertex, labels assigned in order of smallest vertex.
std::vector<int> component_labels(const Graph& g, int* count = nullptr);

// --- bipartition ----------------------------------------------------------

struct Coloring {
    std::vector<int> side;  // 0 or 1 per vertex

    std::vector<Vertex> part(int s) const;
    bool same_side(Vertex a, Vertex b) const { return side[static_cast<std::size_t>(a)] == side[static_cast<std::size_t>(b)]; }
};

class NotBipartiteError : public Error {
public:
    explicit NotBipartiteError(std::vector<Vertex> odd_cycle);
    const std::vector<Vertex>& odd_cycle() const { return odd_cycle_; }

private:
    std::vector<Vertex> odd_cycle_;
};

/// Two-colours `g`; the smallest vertex of each component gets side 0.
/// Throws NotBipartiteError carrying an odd cycle.
Coloring bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// --- blocks ---------------------------------------------------------------

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;  // each sorted; ordered by smallest edge id
    std::vector<Vertex> cut_vertices;         // ascending
};

/// Throws Disconnected.
BlockDecomposition blocks(const Graph& g);
std::vector<Vertex> block_vertices(const Graph& g, std::span<const EdgeId> block);

// --- cycles ---------------------------------------------------------------

struct Cycle {
    std::vector<Vertex> vertices;  // cyclic order, no repetition
    std::vector<EdgeId> edges;     // edges[i] joins vertices[i] and vertices[i+1 mod k]

    int length() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Validates the vertex sequence against `g` and fills in edge ids.
Cycle make_cycle(const Graph& g, std::vector<Vertex> vertices);

/// Rotates/reflects so the lowest vertex is first and the second vertex is
/// smaller than the last one.
Cycle canonical_cycle(const Graph& g, const Cycle& c);

/// Every simple cycle exactly once, canonical form, sorted lexicographically.
/// Throws TooLargeForOracle when n exceeds `bound`.
std::vector<Cycle> enumerate_cycles(const Graph& g, int bound = kCycleOracleBound);

// --- matchings ------------------------------------------------------------

/// Exact number of perfect matchings (n <= 64).
BigInt count_perfect_matchings(const Graph& g);
bool has_perfect_matching(const Graph& g);

/// G - V(C) has a perfect matching (the empty graph counts).
bool is_nice_cycle(const Graph& g, const Cycle& c);

/// Every edge lies in some perfect matching (and one exists).
bool is_elementary(const Graph& g);

}  // namespace permpoly
