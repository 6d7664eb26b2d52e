#include <algorithm>
#include <string>

#include "permpoly/graph.h"

namespace permpoly {

Cycle make_cycle(const Graph& g, std::vector<Vertex> vertices) {
    const std::size_t k = vertices.size();
    if (k < 3) throw Error(ErrorKind::InvalidInput, "a cycle needs at least 3 vertices");
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::InvalidInput, "cycle repeats a vertex");
    Cycle c;
    c.vertices = std::move(vertices);
    for (std::size_t i = 0; i < k; ++i) {
        const Vertex a = c.vertices[i], b = c.vertices[(i + 1) % k];
        if (a < 0 || a >= g.num_vertices()) throw Error(ErrorKind::VertexOutOfRange, std::to_string(a));
        auto e = g.find_edge(a, b);
        if (!e) throw Error(ErrorKind::InvalidInput, "cycle uses a non-edge " + std::to_string(a) + "-" + std::to_string(b));
        c.edges.push_back(*e);
    }
    return c;
}

Cycle canonical_cycle(const Graph& g, const Cycle& c) {
    std::vector<Vertex> vs = c.vertices;
    std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
    if (vs[1] > vs.back()) std::reverse(vs.begin() + 1, vs.end());
    return make_cycle(g, std::move(vs));
}

namespace {

struct CycleSearch {
    const Graph& g;
    Vertex start = 0;
    std::vector<Vertex> path;
    std::vector<char> on_path;
    std::vector<std::vector<Vertex>> found;

    void extend(Vertex v) {
        for (Vertex w : g.neighbors(v)) {
            if (w == start) {
                if (path.size() >= 3 && path[1] < path.back()) found.push_back(path);
                continue;
            }
            if (w < start || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            extend(w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, int bound) {
    if (g.num_vertices() > bound)
        throw Error(ErrorKind::TooLargeForOracle,
                    "cycle enumeration limited to n <= " + std::to_string(bound) + ", got " + std::to_string(g.num_vertices()));
    CycleSearch search{g, 0, {}, {}, {}};
    search.on_path.assign(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        search.start = s;
        search.path = {s};
        search.on_path[static_cast<std::size_t>(s)] = 1;
        search.extend(s);
        search.on_path[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(search.found.begin(), search.found.end());
    std::vector<Cycle> out;
    out.reserve(search.found.size());
    for (auto& vs : search.found) out.push_back(make_cycle(g, std::move(vs)));
    return out;
}

}  // namespace permpoly
