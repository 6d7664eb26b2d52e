#include "permpoly/orientation.h"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "permpoly/resonance.h"

namespace permpoly {

Orientation ascending_orientation(const Graph& g) {
    Orientation o;
    for (const Edge& e : g.edges()) o.direction.emplace_back(e.u, e.v);
    return o;
}

void check_orientation(const Graph& g, const Orientation& o) {
    if (static_cast<int>(o.direction.size()) != g.num_edges())
        throw Error(ErrorKind::InvalidInput, "orientation must list every edge exactly once");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [t, h] = o.direction[static_cast<std::size_t>(e)];
        const Edge& ed = g.edge(e);
        if (!((t == ed.u && h == ed.v) || (t == ed.v && h == ed.u)))
            throw Error(ErrorKind::InvalidInput, "orientation of edge " + std::to_string(e) + " does not match its endpoints");
    }
}

int clockwise_count(const Graph& g, const Face& f, const Orientation& o) {
    int count = 0;
    for (const Dart& d : f.walk)
        if (o.along(g, d)) ++count;
    return count;
}

bool interior_faces_odd(const Graph& g, const RotationEmbedding& emb, const Orientation& o) {
    for (std::size_t i = 0; i < emb.faces.size(); ++i) {
        if (static_cast<int>(i) == emb.outer_face) continue;
        if (clockwise_count(g, emb.faces[i], o) % 2 == 0) return false;
    }
    return true;
}

Orientation orient_plane_graph(const Graph& g, const RotationEmbedding& emb) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "orientation needs a connected plane graph");
    if (!validate_embedding(g, emb.rotation) || emb.outer_face < 0 || emb.outer_face >= static_cast<int>(emb.faces.size()))
        throw Error(ErrorKind::InvalidEmbedding, "embedding does not match the graph");

    const auto n = static_cast<std::size_t>(g.num_vertices());
    const auto m = static_cast<std::size_t>(g.num_edges());
    Orientation o = ascending_orientation(g);
    std::vector<char> in_tree(m, 0), seen(n, 0);
    std::queue<Vertex> q;
    if (n > 0) {
        q.push(0);
        seen[0] = 1;
    }
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            in_tree[static_cast<std::size_t>(*g.find_edge(v, w))] = 1;
            q.push(w);
        }
    }

    // dual tree on the non-tree edges, rooted at the outer face
    const std::vector<int> face_of = emb.face_of_dart();
    const std::size_t nf = emb.faces.size();
    std::vector<std::vector<std::pair<EdgeId, int>>> dual(nf);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (in_tree[static_cast<std::size_t>(e)]) continue;
        const int f1 = face_of[static_cast<std::size_t>(Dart{e, true}.index())];
        const int f2 = face_of[static_cast<std::size_t>(Dart{e, false}.index())];
        dual[static_cast<std::size_t>(f1)].emplace_back(e, f2);
        dual[static_cast<std::size_t>(f2)].emplace_back(e, f1);
    }
    std::vector<EdgeId> parent_edge(nf, -1);
    std::vector<char> reached(nf, 0);
    std::vector<int> order;
    std::queue<int> fq;
    fq.push(emb.outer_face);
    reached[static_cast<std::size_t>(emb.outer_face)] = 1;
    while (!fq.empty()) {
        const int f = fq.front();
        fq.pop();
        order.push_back(f);
        for (auto [e, other] : dual[static_cast<std::size_t>(f)]) {
            if (reached[static_cast<std::size_t>(other)]) continue;
            reached[static_cast<std::size_t>(other)] = 1;
            parent_edge[static_cast<std::size_t>(other)] = e;
            fq.push(other);
        }
    }
    if (order.size() != nf) throw std::logic_error("dual of the cotree is not spanning");

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int f = *it;
        if (f == emb.outer_face) continue;
        const EdgeId closing = parent_edge[static_cast<std::size_t>(f)];
        int others = 0;
        Dart closing_dart;
        for (const Dart& d : emb.faces[static_cast<std::size_t>(f)].walk) {
            if (d.edge == closing) {
                closing_dart = d;
                continue;
            }
            if (o.along(g, d)) ++others;
        }
        const bool clockwise = others % 2 == 0;
        const Vertex t = clockwise ? closing_dart.tail(g) : closing_dart.head(g);
        o.direction[static_cast<std::size_t>(closing)] = {t, g.edge(closing).other(t)};
    }
    return o;
}

Orientation orient_block(const Graph& b, const RotationEmbedding& emb) {
    if (!is_2connected(b)) throw Error(ErrorKind::Not2Connected, "expected a 2-connected plane graph");
    return orient_plane_graph(b, emb);
}

Orientation orient_block(const Graph& b) {
    if (!is_2connected(b)) throw Error(ErrorKind::Not2Connected, "expected a 2-connected plane graph");
    return orient_plane_graph(b, embed_planar(b));
}

namespace {

Orientation orient_blocks(const Graph& g, const RotationEmbedding* emb) {
    const ResonanceReport report = contains_no_even_k23(g);
    for (const BlockVerdict& bv : report.blocks) {
        if (bv.verdict) continue;
        if (bv.violation && bv.violation->kind == ViolationKind::NotPlanar) throw NotPlanarError(std::nullopt);
        throw Error(ErrorKind::ContainsEvenK23, "block " + std::to_string(bv.id) + " contains an even subdivision of K2,3");
    }
    Orientation o = ascending_orientation(g);
    for (const BlockVerdict& bv : report.blocks) {
        if (bv.edges.size() < 2) continue;
        const Subgraph sub = edge_subgraph(g, bv.edges);
        const Orientation local = emb ? orient_block(sub.graph, restrict_embedding(g, *emb, sub)) : orient_block(sub.graph);
        for (std::size_t i = 0; i < sub.parent_edge.size(); ++i) {
            const auto [t, h] = local.direction[i];
            o.direction[static_cast<std::size_t>(sub.parent_edge[i])] = {sub.parent_vertex[static_cast<std::size_t>(t)],
                                                                         sub.parent_vertex[static_cast<std::size_t>(h)]};
        }
    }
    return o;
}

}  // namespace

Orientation orient_graph(const Graph& g) { return orient_blocks(g, nullptr); }

Orientation orient_graph(const Graph& g, const RotationEmbedding& emb) {
    if (!validate_embedding(g, emb.rotation)) throw Error(ErrorKind::InvalidEmbedding, "embedding does not match the graph");
    return orient_blocks(g, &emb);
}

bool is_oddly_oriented(const Graph& g, const Orientation& o, const Cycle& c) {
    (void)g;
    if (c.length() % 2 != 0) throw Error(ErrorKind::OddLengthCycle, "cycle of length " + std::to_string(c.length()));
    int forward = 0;
    for (int i = 0; i < c.length(); ++i)
        if (o.tail(c.edges[static_cast<std::size_t>(i)]) == c.vertices[static_cast<std::size_t>(i)]) ++forward;
    return forward % 2 == 1;
}

bool verify_all_cycles_odd(const Graph& g, const Orientation& o, int bound) {
    check_orientation(g, o);
    for (const Cycle& c : enumerate_cycles(g, bound))
        if (c.length() % 2 != 0 || !is_oddly_oriented(g, o, c)) return false;
    return true;
}

bool verify_pfaffian(const Graph& g, const Orientation& o, int bound) {
    check_orientation(g, o);
    for (const Cycle& c : enumerate_cycles(g, bound)) {
        if (c.length() % 2 != 0) continue;
        if (is_nice_cycle(g, c) && !is_oddly_oriented(g, o, c)) return false;
    }
    return true;
}

}  // namespace permpoly
