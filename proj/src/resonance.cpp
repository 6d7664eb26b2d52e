#include "permpoly/resonance.h"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>

namespace permpoly {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NotPlanar: return "not_planar";
        case ViolationKind::BridgeAttachmentCount: return "bridge_attachment_count";
        case ViolationKind::BridgeAttachmentColors: return "bridge_attachment_colors";
        case ViolationKind::BlockAttachmentColors: return "block_attachment_colors";
    }
    return "unknown";
}

std::vector<Bridge> bridges_of_cycle(const Graph& g, const Cycle& c) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<char> on_cycle(n, 0), cycle_edge(static_cast<std::size_t>(g.num_edges()), 0);
    for (Vertex v : c.vertices) on_cycle[static_cast<std::size_t>(v)] = 1;
    for (EdgeId e : c.edges) cycle_edge[static_cast<std::size_t>(e)] = 1;

    std::vector<Bridge> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (!cycle_edge[static_cast<std::size_t>(e)] && on_cycle[static_cast<std::size_t>(ed.u)] && on_cycle[static_cast<std::size_t>(ed.v)])
            out.push_back(Bridge{{e}, {ed.u, ed.v}});
    }
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (on_cycle[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        Bridge b;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.edge(e).other(v);
                if (on_cycle[static_cast<std::size_t>(w)]) {
                    b.edges.push_back(e);
                    b.attachments.push_back(w);
                } else {
                    if (v < w) b.edges.push_back(e);
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        q.push(w);
                    }
                }
            }
        }
        std::sort(b.edges.begin(), b.edges.end());
        b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
        std::sort(b.attachments.begin(), b.attachments.end());
        b.attachments.erase(std::unique(b.attachments.begin(), b.attachments.end()), b.attachments.end());
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Bridge& a, const Bridge& b) {
        if (a.attachments != b.attachments) return a.attachments < b.attachments;
        return a.edges < b.edges;
    });
    return out;
}

bool is_2connected(const Graph& g) {
    if (g.num_vertices() < 3 || !is_connected(g)) return false;
    const auto bd = blocks(g);
    return bd.cut_vertices.empty() && bd.blocks.size() == 1;
}

namespace {

// One level of the bridge recursion. Edges may be virtual: a virtual edge
// stands for a path of the checked graph running outside this level, stored
// from the endpoint with the smaller local id to the other one.
struct Level {
    Graph h;
    std::vector<Vertex> orig;
    std::vector<std::vector<Vertex>> virtual_path;
};

class BridgeRecursion {
public:
    BridgeRecursion(const Graph& top, const Coloring& color) : top_(top), color_(color) {}

    std::optional<Violation> check(const Level& lv, const RotationEmbedding& emb) {
        const Face& outer = emb.faces[static_cast<std::size_t>(emb.outer_face)];
        const Cycle c = make_cycle(lv.h, outer.vertices(lv.h));

        const auto bridges = bridges_of_cycle(lv.h, c);
        for (const Bridge& br : bridges) {
            if (br.attachments.size() != 2)
                return violation(lv, ViolationKind::BridgeAttachmentCount, c, br.attachments, br.edges);
            if (same_color(lv, br.attachments[0], br.attachments[1]))
                return violation(lv, ViolationKind::BridgeAttachmentColors, c, br.attachments, br.edges);
        }
        for (const Bridge& br : bridges) {
            if (br.edges.size() < 2) continue;
            if (auto v = check_bridge(lv, c, br)) return v;
        }
        return std::nullopt;
    }

private:
    std::optional<Violation> check_bridge(const Level& lv, const Cycle& c, const Bridge& br) {
        const Subgraph xs = edge_subgraph(lv.h, br.edges);
        const BlockDecomposition bd = blocks(xs.graph);
        std::vector<char> is_cut(static_cast<std::size_t>(xs.graph.num_vertices()), 0);
        for (Vertex v : bd.cut_vertices) is_cut[static_cast<std::size_t>(v)] = 1;

        for (const auto& block : bd.blocks) {
            if (block.size() < 2) continue;
            std::vector<Vertex> connection;  // in lv-local ids
            for (Vertex v : block_vertices(xs.graph, block)) {
                const Vertex p = xs.parent_vertex[static_cast<std::size_t>(v)];
                if (is_cut[static_cast<std::size_t>(v)] || p == br.attachments[0] || p == br.attachments[1])
                    connection.push_back(p);
            }
            if (connection.size() != 2) throw std::logic_error("bridge blocks must form a chain");
            std::vector<EdgeId> lv_edges;
            for (EdgeId e : block) lv_edges.push_back(xs.parent_edge[static_cast<std::size_t>(e)]);
            std::sort(lv_edges.begin(), lv_edges.end());

            const Vertex p = connection[0], q = connection[1];
            if (same_color(lv, p, q))
                return violation(lv, ViolationKind::BlockAttachmentColors, c, connection, lv_edges);

            Level child = make_child(lv, lv_edges, p, q);
            if (auto v = check(child, embed_planar(child.h))) return v;
        }
        return std::nullopt;
    }

    // The block plus a virtual edge pq realised by a p-q path outside it.
    Level make_child(const Level& lv, const std::vector<EdgeId>& lv_edges, Vertex p, Vertex q) {
        const Subgraph cs = edge_subgraph(lv.h, lv_edges);
        Level child;
        child.orig.reserve(cs.parent_vertex.size());
        for (Vertex v : cs.parent_vertex) child.orig.push_back(lv.orig[static_cast<std::size_t>(v)]);
        auto list = cs.graph.edge_list();
        for (EdgeId e : cs.parent_edge) child.virtual_path.push_back(lv.virtual_path[static_cast<std::size_t>(e)]);

        const auto local_of = [&](Vertex v) {
            return static_cast<Vertex>(std::lower_bound(cs.parent_vertex.begin(), cs.parent_vertex.end(), v) - cs.parent_vertex.begin());
        };
        const Vertex lp = local_of(p), lq = local_of(q);
        if (!cs.graph.adjacent(lp, lq)) {
            std::vector<char> in_block(static_cast<std::size_t>(lv.h.num_vertices()), 0), block_edge(static_cast<std::size_t>(lv.h.num_edges()), 0);
            for (Vertex v : cs.parent_vertex) in_block[static_cast<std::size_t>(v)] = 1;
            for (EdgeId e : lv_edges) block_edge[static_cast<std::size_t>(e)] = 1;
            std::vector<Vertex> path = outside_path(lv, in_block, block_edge, std::min(p, q), std::max(p, q));
            list.emplace_back(lp, lq);
            child.virtual_path.push_back(expand(lv, path));
        }
        child.h = build_graph(cs.graph.num_vertices(), list);
        return child;
    }

    static std::vector<Vertex> outside_path(const Level& lv, const std::vector<char>& in_block,
                                            const std::vector<char>& block_edge, Vertex from, Vertex to) {
        std::vector<Vertex> parent(static_cast<std::size_t>(lv.h.num_vertices()), -1);
        std::queue<Vertex> q;
        q.push(from);
        parent[static_cast<std::size_t>(from)] = from;
        while (!q.empty() && parent[static_cast<std::size_t>(to)] < 0) {
            const Vertex v = q.front();
            q.pop();
            for (EdgeId e : lv.h.incident(v)) {
                if (block_edge[static_cast<std::size_t>(e)]) continue;
                const Vertex w = lv.h.edge(e).other(v);
                if (parent[static_cast<std::size_t>(w)] >= 0) continue;
                if (in_block[static_cast<std::size_t>(w)] && w != to) continue;
                parent[static_cast<std::size_t>(w)] = v;
                if (w != to) q.push(w);
            }
        }
        if (parent[static_cast<std::size_t>(to)] < 0) throw std::logic_error("no path around a bridge block");
        std::vector<Vertex> path{to};
        while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    // Local vertex walk -> vertices of the checked graph, virtual edges expanded.
    static std::vector<Vertex> expand(const Level& lv, const std::vector<Vertex>& walk) {
        std::vector<Vertex> out{lv.orig[static_cast<std::size_t>(walk.front())]};
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
            const Vertex a = walk[i], b = walk[i + 1];
            const EdgeId e = *lv.h.find_edge(a, b);
            const auto& vp = lv.virtual_path[static_cast<std::size_t>(e)];
            if (vp.empty()) {
                out.push_back(lv.orig[static_cast<std::size_t>(b)]);
            } else if (a == lv.h.edge(e).u) {
                out.insert(out.end(), vp.begin() + 1, vp.end());
            } else {
                out.insert(out.end(), vp.rbegin() + 1, vp.rend());
            }
        }
        return out;
    }

    std::vector<EdgeId> expand_edges(const Level& lv, const std::vector<EdgeId>& edges) const {
        std::vector<EdgeId> out;
        for (EdgeId e : edges) {
            const auto& vp = lv.virtual_path[static_cast<std::size_t>(e)];
            if (vp.empty()) {
                out.push_back(*top_.find_edge(lv.orig[static_cast<std::size_t>(lv.h.edge(e).u)], lv.orig[static_cast<std::size_t>(lv.h.edge(e).v)]));
            } else {
                for (std::size_t i = 0; i + 1 < vp.size(); ++i) out.push_back(*top_.find_edge(vp[i], vp[i + 1]));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool same_color(const Level& lv, Vertex a, Vertex b) const {
        return color_.same_side(lv.orig[static_cast<std::size_t>(a)], lv.orig[static_cast<std::size_t>(b)]);
    }

    Violation violation(const Level& lv, ViolationKind kind, const Cycle& c, const std::vector<Vertex>& attachments,
                        const std::vector<EdgeId>& edges) const {
        Violation v{kind, {}, {}, expand_edges(lv, edges)};
        std::vector<Vertex> closed = c.vertices;
        closed.push_back(closed.front());
        v.cycle = expand(lv, closed);
        v.cycle.pop_back();
        for (Vertex a : attachments) v.attachments.push_back(lv.orig[static_cast<std::size_t>(a)]);
        return v;
    }

    const Graph& top_;
    const Coloring& color_;
};

EarDecomposition greedy_ears(const Graph& b, const Coloring& color, const Cycle& c) {
    const auto n = static_cast<std::size_t>(b.num_vertices());
    std::vector<char> in_s(n, 0), used(static_cast<std::size_t>(b.num_edges()), 0);
    for (Vertex v : c.vertices) in_s[static_cast<std::size_t>(v)] = 1;
    for (EdgeId e : c.edges) used[static_cast<std::size_t>(e)] = 1;
    std::size_t remaining = static_cast<std::size_t>(b.num_edges()) - c.edges.size();

    EarDecomposition out{c, {}};
    while (remaining > 0) {
        EdgeId pick = -1;
        for (EdgeId e = 0; e < b.num_edges() && pick < 0; ++e)
            if (!used[static_cast<std::size_t>(e)] && (in_s[static_cast<std::size_t>(b.edge(e).u)] || in_s[static_cast<std::size_t>(b.edge(e).v)]))
                pick = e;
        if (pick < 0) throw Error(ErrorKind::Not2Connected, "graph is not connected");
        const Edge& pe = b.edge(pick);
        const Vertex anchor = in_s[static_cast<std::size_t>(pe.u)] ? pe.u : pe.v;
        const Vertex first = pe.other(anchor);

        std::vector<Vertex> ear{anchor, first};
        if (!in_s[static_cast<std::size_t>(first)]) {
            // shortest route from `first` back into the subgraph, avoiding the anchor
            std::vector<Vertex> parent(n, -1);
            parent[static_cast<std::size_t>(first)] = first;
            std::queue<Vertex> q;
            q.push(first);
            Vertex hit = -1;
            while (!q.empty() && hit < 0) {
                const Vertex v = q.front();
                q.pop();
                for (Vertex w : b.neighbors(v)) {
                    if (w == anchor || parent[static_cast<std::size_t>(w)] >= 0) continue;
                    parent[static_cast<std::size_t>(w)] = v;
                    if (in_s[static_cast<std::size_t>(w)]) {
                        hit = w;
                        break;
                    }
                    q.push(w);
                }
            }
            if (hit < 0) throw Error(ErrorKind::Not2Connected, "vertex " + std::to_string(anchor) + " is a cut vertex");
            std::vector<Vertex> tail{hit};
            while (tail.back() != first) tail.push_back(parent[static_cast<std::size_t>(tail.back())]);
            ear.pop_back();
            ear.insert(ear.end(), tail.rbegin(), tail.rend());
        }
        const Vertex end = ear.back();
        if ((ear.size() - 1) % 2 == 0 || color.same_side(anchor, end))
            throw Error(ErrorKind::NotResonant,
                        "even ear between " + std::to_string(anchor) + " and " + std::to_string(end));
        for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
            used[static_cast<std::size_t>(*b.find_edge(ear[i], ear[i + 1]))] = 1;
            --remaining;
            in_s[static_cast<std::size_t>(ear[i + 1])] = 1;
        }
        out.ears.push_back(std::move(ear));
    }
    return out;
}

void require_block(const Graph& b) {
    if (!is_2connected(b)) throw Error(ErrorKind::Not2Connected, "expected a 2-connected graph");
}

}  // namespace

BlockCheck is_block_1cr(const Graph& b, const RotationEmbedding& emb) {
    require_block(b);
    const Coloring color = bipartition(b);
    if (!validate_embedding(b, emb)) throw Error(ErrorKind::InvalidEmbedding, "embedding does not match the block");
    Level top{b, {}, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(b.num_edges()))};
    for (Vertex v = 0; v < b.num_vertices(); ++v) top.orig.push_back(v);
    BridgeRecursion rec(b, color);
    BlockCheck out;
    out.violation = rec.check(top, emb);
    out.resonant = !out.violation.has_value();
    return out;
}

BlockCheck is_block_1cr(const Graph& b) {
    require_block(b);
    bipartition(b);
    return is_block_1cr(b, embed_planar(b));
}

ResonanceReport contains_no_even_k23(const Graph& g) {
    bipartition(g);
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "recognition needs a connected graph");
    ResonanceReport report;
    const BlockDecomposition bd = blocks(g);
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        BlockVerdict bv;
        bv.id = static_cast<int>(i);
        bv.edges = bd.blocks[i];
        if (bv.edges.size() >= 2) {
            const Subgraph sub = edge_subgraph(g, bv.edges);
            std::optional<RotationEmbedding> emb;
            try {
                emb = embed_planar(sub.graph);
            } catch (const NotPlanarError&) {
                bv.violation = Violation{ViolationKind::NotPlanar, {}, {}, bv.edges};
            }
            if (emb) {
                const BlockCheck check = is_block_1cr(sub.graph, *emb);
                if (check.violation) {
                    Violation v = *check.violation;
                    for (Vertex& x : v.cycle) x = sub.parent_vertex[static_cast<std::size_t>(x)];
                    for (Vertex& x : v.attachments) x = sub.parent_vertex[static_cast<std::size_t>(x)];
                    for (EdgeId& e : v.edges) e = sub.parent_edge[static_cast<std::size_t>(e)];
                    bv.violation = std::move(v);
                } else {
                    const Face& outer = emb->faces[static_cast<std::size_t>(emb->outer_face)];
                    EarDecomposition ears = greedy_ears(sub.graph, bipartition(sub.graph), make_cycle(sub.graph, outer.vertices(sub.graph)));
                    std::vector<Vertex> start;
                    for (Vertex v : ears.start_cycle.vertices) start.push_back(sub.parent_vertex[static_cast<std::size_t>(v)]);
                    for (auto& ear : ears.ears)
                        for (Vertex& v : ear) v = sub.parent_vertex[static_cast<std::size_t>(v)];
                    bv.ears = EarDecomposition{make_cycle(g, std::move(start)), std::move(ears.ears)};
                }
            }
            bv.verdict = !bv.violation.has_value();
        }
        report.verdict = report.verdict && bv.verdict;
        report.blocks.push_back(std::move(bv));
    }
    return report;
}

EarDecomposition ear_decomposition(const Graph& b, const Cycle& c) {
    require_block(b);
    const Coloring color = bipartition(b);
    const Cycle checked = make_cycle(b, c.vertices);
    const BlockCheck check = is_block_1cr(b);
    if (!check.resonant) throw Error(ErrorKind::NotResonant, "graph contains an even subdivision of K2,3");
    return greedy_ears(b, color, checked);
}

bool oracle_1cr(const Graph& b, int bound) {
    for (const Cycle& c : enumerate_cycles(b, bound)) {
        const Subgraph rest = remove_vertices(b, c.vertices);
        int count = 0;
        const auto label = component_labels(rest.graph, &count);
        std::vector<int> size(static_cast<std::size_t>(count), 0);
        for (int l : label) ++size[static_cast<std::size_t>(l)];
        for (int s : size)
            if (s % 2 != 0) return false;
    }
    return true;
}

namespace {

struct PathSet {
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::uint64_t> interior;
};

void collect_paths(const Graph& g, Vertex v, Vertex t, std::vector<Vertex>& path, std::uint64_t mask, PathSet& out) {
    for (Vertex w : g.neighbors(v)) {
        if (w == t) {
            if (path.size() >= 2 && path.size() % 2 == 0) {
                out.paths.push_back(path);
                out.paths.back().push_back(t);
                out.interior.push_back(mask);
            }
            continue;
        }
        if (w == path.front() || (mask >> w) & 1U) continue;
        path.push_back(w);
        collect_paths(g, w, t, path, mask | (std::uint64_t{1} << w), out);
        path.pop_back();
    }
}

}  // namespace

std::optional<EvenTheta> oracle_even_theta(const Graph& g, int bound) {
    const int n = g.num_vertices();
    if (n > bound || n > 64)
        throw Error(ErrorKind::TooLargeForOracle,
                    "even theta search limited to n <= " + std::to_string(std::min(bound, 64)) + ", got " + std::to_string(n));
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (g.degree(s) < 3 || g.degree(t) < 3) continue;
            PathSet ps;
            std::vector<Vertex> path{s};
            collect_paths(g, s, t, path, 0, ps);
            if (ps.paths.size() < 3) continue;
            std::vector<std::size_t> order(ps.paths.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (ps.paths[a].size() != ps.paths[b].size()) return ps.paths[a].size() < ps.paths[b].size();
                return ps.paths[a] < ps.paths[b];
            });
            for (std::size_t i = 0; i < order.size(); ++i) {
                const auto mi = ps.interior[order[i]];
                for (std::size_t j = i + 1; j < order.size(); ++j) {
                    const auto mj = ps.interior[order[j]];
                    if (mi & mj) continue;
                    for (std::size_t k = j + 1; k < order.size(); ++k) {
                        if ((mi | mj) & ps.interior[order[k]]) continue;
                        return EvenTheta{s, t, {ps.paths[order[i]], ps.paths[order[j]], ps.paths[order[k]]}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace permpoly
