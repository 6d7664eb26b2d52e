#include "permpoly/graph.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

namespace permpoly {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::NotBipartite: return "NotBipartite";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::TooLargeForOracle: return "TooLargeForOracle";
        case ErrorKind::NotPlanar: return "NotPlanar";
        case ErrorKind::Not2Connected: return "Not2Connected";
        case ErrorKind::NotResonant: return "NotResonant";
        case ErrorKind::ContainsEvenK23: return "ContainsEvenK23";
        case ErrorKind::OddLengthCycle: return "OddLengthCycle";
        case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
        case ErrorKind::UnbalancedParts: return "UnbalancedParts";
        case ErrorKind::HasCycleLengthDivisibleBy4: return "HasCycleLengthDivisibleBy4";
        case ErrorKind::PoleInput: return "PoleInput";
        case ErrorKind::InvalidLengths: return "InvalidLengths";
        case ErrorKind::InvalidCode: return "InvalidCode";
        case ErrorKind::OverlapDetected: return "OverlapDetected";
        case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
    if (n < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    Graph g(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [a, b] : edge_list) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
        if (a == b) throw Error(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(a));
        Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert({e.u, e.v}).second)
            throw Error(ErrorKind::DuplicateEdge, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        const auto id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back(e);
        g.incidence_[static_cast<std::size_t>(e.u)].push_back(id);
        g.incidence_[static_cast<std::size_t>(e.v)].push_back(id);
    }
    return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
    const Vertex x = degree(a) <= degree(b) ? a : b;
    const Vertex y = x == a ? b : a;
    for (EdgeId e : incident(x))
        if (edge(e).other(x) == y) return e;
    return std::nullopt;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(incident(v).size());
    for (EdgeId e : incident(v)) out.push_back(edge(e).other(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<EdgeId> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    for (EdgeId e : sorted) {
        used[static_cast<std::size_t>(g.edge(e).u)] = 1;
        used[static_cast<std::size_t>(g.edge(e).v)] = 1;
    }
    Subgraph out;
    std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), -1);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!used[static_cast<std::size_t>(v)]) continue;
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.parent_vertex.size());
        out.parent_vertex.push_back(v);
    }
    std::vector<std::pair<Vertex, Vertex>> list;
    for (EdgeId e : sorted) {
        list.emplace_back(local[static_cast<std::size_t>(g.edge(e).u)], local[static_cast<std::size_t>(g.edge(e).v)]);
        out.parent_edge.push_back(e);
    }
    out.graph = build_graph(static_cast<int>(out.parent_vertex.size()), list);
    return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Subgraph out;
    for (Vertex v : sorted) {
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.parent_vertex.size());
        out.parent_vertex.push_back(v);
    }
    std::vector<std::pair<Vertex, Vertex>> list;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        const Vertex a = local[static_cast<std::size_t>(ed.u)];
        const Vertex b = local[static_cast<std::size_t>(ed.v)];
        if (a < 0 || b < 0) continue;
        list.emplace_back(a, b);
        out.parent_edge.push_back(e);
    }
    out.graph = build_graph(static_cast<int>(sorted.size()), list);
    return out;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<int> component_labels(const Graph& g, int* count) {
    std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
    int next = 0;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        std::queue<Vertex> q;
        q.push(s);
        label[static_cast<std::size_t>(s)] = next;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.edge(e).other(v);
                if (label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

bool is_connected(const Graph& g) {
    int count = 0;
    component_labels(g, &count);
    return count <= 1;
}

// --- bipartition ----------------------------------------------------------

std::vector<Vertex> Coloring::part(int s) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < side.size(); ++v)
        if (side[v] == s) out.push_back(static_cast<Vertex>(v));
    return out;
}

NotBipartiteError::NotBipartiteError(std::vector<Vertex> odd_cycle)
    : Error(ErrorKind::NotBipartite, "odd cycle of length " + std::to_string(odd_cycle.size())),
      odd_cycle_(std::move(odd_cycle)) {}

Coloring bipartition(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<int> side(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<int> depth(n, 0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.edge(e).other(v);
                const auto wi = static_cast<std::size_t>(w);
                if (side[wi] < 0) {
                    side[wi] = 1 - side[static_cast<std::size_t>(v)];
                    parent[wi] = v;
                    depth[wi] = depth[static_cast<std::size_t>(v)] + 1;
                    q.push(w);
                } else if (side[wi] == side[static_cast<std::size_t>(v)]) {
                    // Tree paths from both ends meet at their lowest common ancestor.
                    std::vector<Vertex> left{v}, right{w};
                    Vertex a = v, b = w;
                    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) left.push_back(a = parent[static_cast<std::size_t>(a)]);
                    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) right.push_back(b = parent[static_cast<std::size_t>(b)]);
                    while (a != b) {
                        left.push_back(a = parent[static_cast<std::size_t>(a)]);
                        right.push_back(b = parent[static_cast<std::size_t>(b)]);
                    }
                    right.pop_back();
                    std::vector<Vertex> cycle(left.begin(), left.end());
                    cycle.insert(cycle.end(), right.rbegin(), right.rend());
                    throw NotBipartiteError(std::move(cycle));
                }
            }
        }
    }
    return Coloring{std::move(side)};
}

bool is_bipartite(const Graph& g) {
    try {
        bipartition(g);
        return true;
    } catch (const NotBipartiteError&) {
        return false;
    }
}

// --- blocks ---------------------------------------------------------------

BlockDecomposition blocks(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "block decomposition needs a connected graph");
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> stack;
    std::vector<char> is_cut(n, 0);
    BlockDecomposition out;
    int timer = 0;

    std::function<void(Vertex, EdgeId)> dfs = [&](Vertex v, EdgeId via) {
        const auto vi = static_cast<std::size_t>(v);
        disc[vi] = low[vi] = timer++;
        int children = 0;
        for (EdgeId e : g.incident(v)) {
            if (e == via) continue;
            const Vertex w = g.edge(e).other(v);
            const auto wi = static_cast<std::size_t>(w);
            if (disc[wi] < 0) {
                stack.push_back(e);
                ++children;
                dfs(w, e);
                low[vi] = std::min(low[vi], low[wi]);
                if (low[wi] >= disc[vi]) {
                    if (via >= 0 || children > 1) is_cut[vi] = 1;
                    std::vector<EdgeId> block;
                    EdgeId top;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        block.push_back(top);
                    } while (top != e);
                    std::sort(block.begin(), block.end());
                    out.blocks.push_back(std::move(block));
                }
            } else if (disc[wi] < disc[vi]) {
                stack.push_back(e);
                low[vi] = std::min(low[vi], disc[wi]);
            }
        }
        if (via < 0 && children > 1) is_cut[vi] = 1;
    };
    if (n > 0) dfs(0, -1);

    std::sort(out.blocks.begin(), out.blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(static_cast<Vertex>(v));
    return out;
}

std::vector<Vertex> block_vertices(const Graph& g, std::span<const EdgeId> block) {
    std::vector<Vertex> out;
    for (EdgeId e : block) {
        out.push_back(g.edge(e).u);
        out.push_back(g.edge(e).v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace permpoly
