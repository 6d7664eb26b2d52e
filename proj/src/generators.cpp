#include "permpoly/generators.h"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>

namespace permpoly {

Family parse_family(std::string_view name) {
    if (name == "cycle") return Family::Cycle;
    if (name == "path") return Family::Path;
    if (name == "theta") return Family::Theta;
    if (name == "G1") return Family::G1;
    if (name == "G2") return Family::G2;
    if (name == "hex_chain") return Family::HexChain;
    if (name == "cube") return Family::Cube;
    if (name == "complete_bipartite") return Family::CompleteBipartite;
    throw Error(ErrorKind::InvalidInput, "unknown family '" + std::string(name) + "'");
}

namespace {

int param(const FamilySpec& spec, std::size_t i) {
    if (i >= spec.params.size()) throw Error(ErrorKind::InvalidInput, "missing family parameter");
    return spec.params[i];
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::InvalidInput, what);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Cycle: return gen_cycle(param(spec, 0));
        case Family::Path: return gen_path(param(spec, 0));
        case Family::Theta: return gen_theta(param(spec, 0), param(spec, 1), param(spec, 2));
        case Family::G1: return gen_G1(param(spec, 0));
        case Family::G2: return gen_G2(param(spec, 0));
        case Family::HexChain: return gen_hex_chain(param(spec, 0), spec.code);
        case Family::Cube: return gen_cube();
        case Family::CompleteBipartite: return gen_complete_bipartite(param(spec, 0), param(spec, 1));
    }
    throw Error(ErrorKind::InvalidInput, "unknown family");
}

Graph gen_cycle(int n) {
    require(n >= 3, "a cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return build_graph(n, edges);
}

Graph gen_path(int n) {
    require(n >= 1, "a path needs at least 1 vertex");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return build_graph(n, edges);
}

Graph gen_complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete bipartite parts must be non-empty");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return build_graph(a + b, edges);
}

Graph gen_complete(int n) {
    require(n >= 1, "complete graph needs a vertex");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

Graph gen_cube() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit) {
            const Vertex w = v ^ (1 << bit);
            if (v < w) edges.emplace_back(v, w);
        }
    return build_graph(8, edges);
}

Graph gen_theta(int l1, int l2, int l3) {
    const std::array<int, 3> lengths{l1, l2, l3};
    int ones = 0;
    for (int l : lengths) {
        if (l < 1) throw Error(ErrorKind::InvalidLengths, "path lengths must be positive");
        if (l == 1) ++ones;
    }
    if (ones > 1) throw Error(ErrorKind::InvalidLengths, "at most one path may be a single edge");
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex next = 2;
    for (int l : lengths) {
        Vertex prev = 0;
        for (int i = 1; i < l; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return build_graph(next, edges);
}

Graph gen_G1(int s) {
    require(s >= 2, "G1 needs s >= 2");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < s; ++i) {
        const Vertex a = 2 + 2 * i, b = 3 + 2 * i;
        edges.emplace_back(0, a);
        edges.emplace_back(a, b);
        edges.emplace_back(b, 1);
    }
    return build_graph(2 * s + 2, edges);
}

Graph gen_G2(int r) {
    require(r >= 1, "G2 needs r >= 1");
    const Vertex x1 = 0, x2 = r + 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i <= r; ++i) edges.emplace_back(x1, i);
    for (int i = 1; i <= r; ++i) edges.emplace_back(x2, x2 + i);
    edges.emplace_back(x1, x2);
    for (int i = 1; i <= r; ++i) edges.emplace_back(i, x2 + i);
    for (int i = 1; i <= r; ++i) {
        const Vertex p = 2 * r + 2 * i, q = 2 * r + 2 * i + 1;
        edges.emplace_back(i, p);
        edges.emplace_back(p, q);
        edges.emplace_back(q, x2 + i);
    }
    return build_graph(4 * r + 2, edges);
}

namespace {

using Axial = std::pair<int, int>;

// neighbouring hexagon centres in cyclic order
constexpr std::array<Axial, 6> kHexDirections{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

Axial step(Axial c, int dir) {
    return {c.first + kHexDirections[static_cast<std::size_t>(dir)].first,
            c.second + kHexDirections[static_cast<std::size_t>(dir)].second};
}

bool lattice_adjacent(Axial a, Axial b) {
    for (int d = 0; d < 6; ++d)
        if (step(a, d) == b) return true;
    return false;
}

}  // namespace

Graph gen_hex_chain(int h, std::string_view code) {
    if (h < 1) throw Error(ErrorKind::InvalidCode, "need at least one hexagon");
    std::vector<Axial> centres{{0, 0}};
    std::vector<std::pair<int, int>> fused;  // hexagon pairs allowed to share an edge
    if (code == "B") {
        if (h != 4) throw Error(ErrorKind::InvalidCode, "the branched code needs h = 4");
        for (int d : {0, 2, 4}) {
            fused.emplace_back(0, static_cast<int>(centres.size()));
            centres.push_back(step({0, 0}, d));
        }
    } else {
        if (h >= 2 && static_cast<int>(code.size()) != h - 2)
            throw Error(ErrorKind::InvalidCode, "a chain of " + std::to_string(h) + " hexagons needs " + std::to_string(h - 2) + " turn letters");
        if (h < 2 && !code.empty()) throw Error(ErrorKind::InvalidCode, "too many turn letters");
        int dir = 0;
        for (int i = 1; i < h; ++i) {
            if (i >= 2) {
                const char c = code[static_cast<std::size_t>(i - 2)];
                if (c == 'L') dir = (dir + 1) % 6;
                else if (c == 'R') dir = (dir + 5) % 6;
                else if (c != 'S') throw Error(ErrorKind::InvalidCode, std::string("unknown turn letter '") + c + "'");
            }
            centres.push_back(step(centres.back(), dir));
            fused.emplace_back(i - 1, i);
        }
    }
    for (std::size_t i = 0; i < centres.size(); ++i)
        for (std::size_t j = i + 1; j < centres.size(); ++j) {
            if (centres[i] == centres[j]) throw Error(ErrorKind::OverlapDetected, "two hexagons coincide");
            const bool allowed = std::find(fused.begin(), fused.end(), std::pair<int, int>(static_cast<int>(i), static_cast<int>(j))) != fused.end();
            if (lattice_adjacent(centres[i], centres[j]) && !allowed)
                throw Error(ErrorKind::OverlapDetected, "hexagons " + std::to_string(i) + " and " + std::to_string(j) + " touch; system is not catacondensed");
        }

    // corners live on the lattice scaled by three: 3c + d_i + d_(i+1)
    std::map<Axial, Vertex> ids;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::map<std::pair<Vertex, Vertex>, bool> have;
    for (const Axial& c : centres) {
        std::array<Vertex, 6> corner{};
        for (int i = 0; i < 6; ++i) {
            const Axial a = kHexDirections[static_cast<std::size_t>(i)], b = kHexDirections[static_cast<std::size_t>((i + 1) % 6)];
            const Axial p{3 * c.first + a.first + b.first, 3 * c.second + a.second + b.second};
            auto [it, inserted] = ids.try_emplace(p, static_cast<Vertex>(ids.size()));
            corner[static_cast<std::size_t>(i)] = it->second;
        }
        for (int i = 0; i < 6; ++i) {
            Vertex u = corner[static_cast<std::size_t>(i)], v = corner[static_cast<std::size_t>((i + 1) % 6)];
            if (u > v) std::swap(u, v);
            if (have.emplace(std::pair(u, v), true).second) edges.emplace_back(u, v);
        }
    }
    return build_graph(static_cast<int>(ids.size()), edges);
}

EmbeddedGraph hinged_blocks_fixture() {
    Graph g = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}, {3, 7}, {7, 8}, {2, 8}, {8, 9}});
    std::vector<std::vector<EdgeId>> rotation{{0, 3, 4, 7}, {0, 1}, {1, 2, 10}, {2, 3, 8}, {4, 5}, {5, 6}, {6, 7}, {8, 9}, {9, 10, 11}, {11}};
    RotationEmbedding emb = make_embedding(g, std::move(rotation));
    return {std::move(g), std::move(emb)};
}

}  // namespace permpoly
