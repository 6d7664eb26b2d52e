#include "permpoly/embedding.h"

#include <algorithm>
#include <iterator>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace permpoly {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(static_cast<std::size_t>(g.num_vertices()));
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        boost::add_edge(static_cast<std::size_t>(g.edge(e).u), static_cast<std::size_t>(g.edge(e).v), e, bg);
    return bg;
}

KuratowskiWitness make_witness(const Graph& g, const std::vector<EdgeId>& edges) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<std::vector<EdgeId>> inc(n);
    for (EdgeId e : edges) {
        inc[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
        inc[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
    }
    KuratowskiWitness w;
    for (std::size_t v = 0; v < n; ++v)
        if (inc[v].size() >= 3) w.branch_vertices.push_back(static_cast<Vertex>(v));
    w.kind = w.branch_vertices.size() == 5 ? KuratowskiKind::K5 : KuratowskiKind::K33;
    for (Vertex b : w.branch_vertices) {
        for (EdgeId first : inc[static_cast<std::size_t>(b)]) {
            std::vector<Vertex> path{b};
            EdgeId via = first;
            Vertex cur = g.edge(first).other(b);
            path.push_back(cur);
            while (inc[static_cast<std::size_t>(cur)].size() == 2) {
                const auto& two = inc[static_cast<std::size_t>(cur)];
                via = two[0] == via ? two[1] : two[0];
                cur = g.edge(via).other(cur);
                path.push_back(cur);
            }
            if (b < cur) w.paths.push_back(std::move(path));
        }
    }
    std::sort(w.paths.begin(), w.paths.end());
    return w;
}

}  // namespace

std::vector<Vertex> Face::vertices(const Graph& g) const {
    std::vector<Vertex> out;
    out.reserve(walk.size());
    for (const Dart& d : walk) out.push_back(d.tail(g));
    return out;
}

std::vector<int> RotationEmbedding::face_of_dart() const {
    int darts = 0;
    for (const Face& f : faces) darts += f.length();
    std::vector<int> out(static_cast<std::size_t>(darts), -1);
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (const Dart& d : faces[i].walk) {
            if (static_cast<std::size_t>(d.index()) >= out.size()) out.resize(static_cast<std::size_t>(d.index()) + 1, -1);
            out[static_cast<std::size_t>(d.index())] = static_cast<int>(i);
        }
    return out;
}

NotPlanarError::NotPlanarError(std::optional<KuratowskiWitness> witness)
    : Error(ErrorKind::NotPlanar, witness ? (witness->kind == KuratowskiKind::K5 ? "contains a K5 subdivision"
                                                                                 : "contains a K3,3 subdivision")
                                          : "graph is not planar"),
      witness_(std::move(witness)) {}

std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<EdgeId>>& rotation) {
    const int n = g.num_vertices();
    if (static_cast<int>(rotation.size()) != n)
        throw Error(ErrorKind::InvalidEmbedding, "rotation system must list every vertex");
    // position of edge e in the rotation of each endpoint
    std::vector<int> pos_u(static_cast<std::size_t>(g.num_edges()), -1), pos_v(static_cast<std::size_t>(g.num_edges()), -1);
    for (Vertex v = 0; v < n; ++v) {
        const auto& rot = rotation[static_cast<std::size_t>(v)];
        if (static_cast<int>(rot.size()) != g.degree(v))
            throw Error(ErrorKind::InvalidEmbedding, "rotation at vertex " + std::to_string(v) + " has wrong size");
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const EdgeId e = rot[i];
            if (e < 0 || e >= g.num_edges() || !g.edge(e).has(v))
                throw Error(ErrorKind::InvalidEmbedding, "rotation at vertex " + std::to_string(v) + " lists a foreign edge");
            auto& slot = g.edge(e).u == v ? pos_u[static_cast<std::size_t>(e)] : pos_v[static_cast<std::size_t>(e)];
            if (slot >= 0) throw Error(ErrorKind::InvalidEmbedding, "rotation repeats an edge");
            slot = static_cast<int>(i);
        }
    }

    std::vector<char> seen(static_cast<std::size_t>(2 * g.num_edges()), 0);
    std::vector<Face> faces;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        for (bool fwd : {true, false}) {
            Dart start{e, fwd};
            if (seen[static_cast<std::size_t>(start.index())]) continue;
            Face face;
            Dart d = start;
            do {
                seen[static_cast<std::size_t>(d.index())] = 1;
                face.walk.push_back(d);
                const Vertex h = d.head(g);
                const auto& rot = rotation[static_cast<std::size_t>(h)];
                const int at = g.edge(d.edge).u == h ? pos_u[static_cast<std::size_t>(d.edge)] : pos_v[static_cast<std::size_t>(d.edge)];
                const EdgeId next = rot[static_cast<std::size_t>((at + 1) % static_cast<int>(rot.size()))];
                d = Dart{next, g.edge(next).u == h};
            } while (!(d == start));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

bool validate_embedding(const Graph& g, const std::vector<std::vector<EdgeId>>& rotation) {
    std::vector<Face> faces;
    try {
        faces = trace_faces(g, rotation);
    } catch (const Error&) {
        return false;
    }
    int components = 0;
    const auto label = component_labels(g, &components);
    std::vector<int> nv(static_cast<std::size_t>(components), 0), ne(nv), nf(nv);
    for (Vertex v = 0; v < g.num_vertices(); ++v) ++nv[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
    for (const Edge& e : g.edges()) ++ne[static_cast<std::size_t>(label[static_cast<std::size_t>(e.u)])];
    for (const Face& f : faces) ++nf[static_cast<std::size_t>(label[static_cast<std::size_t>(f.walk.front().tail(g))])];
    for (std::size_t c = 0; c < nv.size(); ++c) {
        if (ne[c] == 0) continue;  // isolated vertex
        if (nv[c] - ne[c] + nf[c] != 2) return false;
    }
    return true;
}

RotationEmbedding make_embedding(const Graph& g, std::vector<std::vector<EdgeId>> rotation) {
    if (!validate_embedding(g, rotation))
        throw Error(ErrorKind::InvalidEmbedding, "rotation system is not a plane embedding");
    RotationEmbedding emb;
    emb.faces = trace_faces(g, rotation);
    emb.rotation = std::move(rotation);
    int best_len = -1, best_min = 0;
    for (std::size_t i = 0; i < emb.faces.size(); ++i) {
        const auto vs = emb.faces[i].vertices(g);
        const int len = emb.faces[i].length();
        const int mn = *std::min_element(vs.begin(), vs.end());
        if (len > best_len || (len == best_len && mn < best_min)) {
            best_len = len;
            best_min = mn;
            emb.outer_face = static_cast<int>(i);
        }
    }
    return emb;
}

RotationEmbedding embed_planar(const Graph& g) {
    BoostGraph bg = to_boost(g);
    std::vector<std::vector<BoostEdge>> storage(static_cast<std::size_t>(g.num_vertices()));
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
    std::vector<BoostEdge> kuratowski;
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (!planar) {
        std::vector<EdgeId> ids;
        for (const BoostEdge& be : kuratowski) ids.push_back(boost::get(boost::edge_index, bg, be));
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        throw NotPlanarError(make_witness(g, ids));
    }
    std::vector<std::vector<EdgeId>> rotation(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (const BoostEdge& be : storage[static_cast<std::size_t>(v)])
            rotation[static_cast<std::size_t>(v)].push_back(boost::get(boost::edge_index, bg, be));
    return make_embedding(g, std::move(rotation));
}

bool is_planar(const Graph& g) {
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool is_outerplanar_bipartite(const Graph& g) {
    bipartition(g);
    const int n = g.num_vertices();
    auto list = g.edge_list();
    for (Vertex v = 0; v < n; ++v) list.emplace_back(v, n);
    return is_planar(build_graph(n + 1, list));
}

RotationEmbedding restrict_embedding(const Graph& g, const RotationEmbedding& emb, const Subgraph& sub) {
    std::vector<EdgeId> local(static_cast<std::size_t>(g.num_edges()), -1);
    for (std::size_t i = 0; i < sub.parent_edge.size(); ++i)
        local[static_cast<std::size_t>(sub.parent_edge[i])] = static_cast<EdgeId>(i);
    std::vector<std::vector<EdgeId>> rotation(sub.parent_vertex.size());
    for (std::size_t i = 0; i < sub.parent_vertex.size(); ++i)
        for (EdgeId e : emb.rotation[static_cast<std::size_t>(sub.parent_vertex[i])])
            if (local[static_cast<std::size_t>(e)] >= 0) rotation[i].push_back(local[static_cast<std::size_t>(e)]);
    return make_embedding(sub.graph, std::move(rotation));
}

}  // namespace permpoly
