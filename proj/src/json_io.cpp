#include "permpoly/json_io.h"

#include <string>
#include <utility>

namespace permpoly {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

GraphInput graph_from_json(const json& j) {
    if (!j.is_object()) bad("graph must be a JSON object");
    if (!j.contains("n")) bad("graph needs \"n\"");
    if (!j.contains("edges") || !j["edges"].is_array()) bad("graph needs an \"edges\" array");
    const int n = as_int(j["n"], "n");
    if (n < 0) bad("n must be nonnegative");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) bad("each edge must be a pair [u,v]");
        edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
    GraphInput in{build_graph(n, edges), std::nullopt};
    if (j.contains("embedding") && !j["embedding"].is_null()) {
        const json& r = j["embedding"];
        if (!r.is_array() || static_cast<int>(r.size()) != n) bad("embedding needs one rotation list per vertex");
        std::vector<std::vector<EdgeId>> rotation;
        for (const json& row : r) {
            if (!row.is_array()) bad("rotation lists must be arrays");
            std::vector<EdgeId> ids;
            for (const json& e : row) ids.push_back(as_int(e, "edge id"));
            rotation.push_back(std::move(ids));
        }
        if (!validate_embedding(in.graph, rotation)) throw Error(ErrorKind::InvalidEmbedding, "embedding fails the face trace or Euler check");
        in.embedding = make_embedding(in.graph, std::move(rotation));
    }
    return in;
}

json graph_to_json(const Graph& g, const RotationEmbedding* emb) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    json j{{"n", g.num_vertices()}, {"edges", edges}};
    if (emb) j["embedding"] = emb->rotation;
    return j;
}

json orientation_to_json(const Orientation& o) {
    json j = json::array();
    for (const auto& [t, h] : o.direction) j.push_back({t, h});
    return j;
}

Orientation orientation_from_json(const Graph& g, const json& j) {
    const json& arr = j.is_object() && j.contains("orientation") ? j["orientation"] : j;
    if (!arr.is_array()) bad("orientation must be an array of [tail, head] pairs");
    Orientation o;
    for (const json& p : arr) {
        if (!p.is_array() || p.size() != 2) bad("orientation entries must be pairs");
        o.direction.emplace_back(as_int(p[0], "tail"), as_int(p[1], "head"));
    }
    check_orientation(g, o);
    return o;
}

std::string polynomial_json_text(const IntPolynomial& p) { return p.to_json(); }

json cycle_to_json(const Cycle& c) { return c.vertices; }

json ears_to_json(const EarDecomposition& d) {
    return {{"type", "ear_decomposition"}, {"start_cycle", d.start_cycle.vertices}, {"ears", d.ears}};
}

json violation_to_json(const Violation& v) {
    return {{"type", "violation"},
            {"kind", std::string(to_string(v.kind))},
            {"cycle", v.cycle},
            {"attachments", v.attachments},
            {"edges", v.edges}};
}

json even_theta_to_json(const EvenTheta& t) {
    json paths = json::array();
    for (const auto& p : t.paths) paths.push_back(p);
    return {{"s", t.s}, {"t", t.t}, {"paths", paths}};
}

json report_to_json(const ResonanceReport& r) {
    json blocks = json::array();
    for (const BlockVerdict& b : r.blocks) {
        json w = nullptr;
        if (b.violation) w = violation_to_json(*b.violation);
        else if (b.ears) w = ears_to_json(*b.ears);
        blocks.push_back({{"id", b.id}, {"edges", b.edges}, {"verdict", b.verdict}, {"witness", w}});
    }
    return {{"verdict", r.verdict}, {"blocks", blocks}};
}

json coloring_to_json(const Coloring& c) {
    return {{"side", c.side}, {"U", c.part(0)}, {"V", c.part(1)}};
}

json kuratowski_to_json(const KuratowskiWitness& w) {
    return {{"kind", w.kind == KuratowskiKind::K5 ? "K5" : "K33"}, {"branch_vertices", w.branch_vertices}, {"paths", w.paths}};
}

json error_to_json(const Error& e) {
    json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (const auto* nb = dynamic_cast<const NotBipartiteError*>(&e)) j["odd_cycle"] = nb->odd_cycle();
    if (const auto* np = dynamic_cast<const NotPlanarError*>(&e); np && np->witness()) j["kuratowski"] = kuratowski_to_json(*np->witness());
    return j;
}

}  // namespace permpoly
