#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "permpoly/embedding.h"
#include "permpoly/generators.h"
#include "permpoly/json_io.h"
#include "permpoly/matrix.h"
#include "permpoly/orientation.h"
#include "permpoly/permanental.h"
#include "permpoly/resonance.h"

namespace permpoly::cli {

namespace {

struct Bounds {
    int cycles = kCycleOracleBound;
    int theta = kEvenThetaOracleBound;
    int perm_poly = kPermPolyOracleBound;
};

Bounds oracle_bounds() {
    Bounds b;
    if (const char* env = std::getenv("PERMPOLY_ORACLE_BOUND")) {
        try {
            const int v = std::stoi(env);
            b = {v, v, v};
        } catch (const std::exception&) {
            throw CLI::ValidationError("PERMPOLY_ORACLE_BOUND", std::string("not an integer: ") + env);
        }
    }
    return b;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& source, std::istream& in) {
    std::string text;
    if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
        text = source;
    } else {
        std::ifstream f(source);
        if (!f) throw UsageError("cannot open '" + source + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

json matching_count_json(const BigInt& m) {
    if (m <= std::numeric_limits<std::uint64_t>::max()) return m.convert_to<std::uint64_t>();
    return m.str();
}

FamilySpec family_spec(const std::string& name, const std::vector<std::string>& params) {
    FamilySpec spec{parse_family(name), {}, {}};
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (spec.family == Family::HexChain && i == 1) {
            spec.code = params[i];
            continue;
        }
        try {
            std::size_t used = 0;
            spec.params.push_back(std::stoi(params[i], &used));
            if (used != params[i].size()) throw std::invalid_argument(params[i]);
        } catch (const std::exception&) {
            throw UsageError("parameter '" + params[i] + "' is not an integer");
        }
    }
    return spec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permanental polynomials of bipartite graphs via Pfaffian orientations", "permpoly"};
    app.require_subcommand(1, 1);

    std::string input, orientation_source, family;
    std::vector<std::string> params;
    bool oracle = false, biadjacency = false, pretty = false;

    auto* generate_cmd = app.add_subcommand("generate", "Emit Graph JSON for a named family");
    generate_cmd->add_option("family", family, "cycle | path | theta | G1 | G2 | hex_chain | cube | complete_bipartite")->required();
    generate_cmd->add_option("params", params, "integer parameters; hex_chain takes h then the turn code");

    auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "Graph JSON: a file path, inline JSON, or - for stdin")->required(); };
    auto* analyze_cmd = app.add_subcommand("analyze", "Bipartition, planarity and the even K2,3 report");
    add_input(analyze_cmd);
    auto* orient_cmd = app.add_subcommand("orient", "Pfaffian orientation built block by block");
    add_input(orient_cmd);
    auto* permpoly_cmd = app.add_subcommand("permpoly", "Permanental polynomial per(xI - A)");
    add_input(permpoly_cmd);
    permpoly_cmd->add_flag("--oracle", oracle, "sum principal subpermanents instead");
    permpoly_cmd->add_flag("--biadjacency", biadjacency, "use det(x^2 I + B^T B)");
    permpoly_cmd->add_flag("--pretty", pretty, "print as a polynomial in x");
    auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial det(xI - A)");
    add_input(charpoly_cmd);
    charpoly_cmd->add_flag("--pretty", pretty, "print as a polynomial in x");
    auto* verify_cmd = app.add_subcommand("verify", "Replay the cycle oracles on a graph and orientation");
    add_input(verify_cmd);
    verify_cmd->add_option("--orientation", orientation_source, "orientation JSON; defaults to the input's \"orientation\" field");
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute force checks: even theta search, cycle resonance, matchings");
    add_input(oracle_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }
    if (oracle && biadjacency) {
        err << json{{"error", "UsageError"}, {"message", "--oracle and --biadjacency are exclusive"}}.dump() << '\n';
        return 2;
    }

    try {
        const Bounds bounds = oracle_bounds();
        if (generate_cmd->parsed()) {
            out << graph_to_json(generate(family_spec(family, params))).dump() << '\n';
            return 0;
        }
        const json doc = read_json(input, in);
        const GraphInput g = graph_from_json(doc);

        if (analyze_cmd->parsed()) {
            json result{{"n", g.graph.num_vertices()}, {"m", g.graph.num_edges()}};
            result["bipartition"] = coloring_to_json(bipartition(g.graph));
            try {
                const RotationEmbedding emb = g.embedding ? *g.embedding : embed_planar(g.graph);
                result["planar"] = true;
                result["embedding"] = emb.rotation;
                result["outer_face"] = emb.faces[static_cast<std::size_t>(emb.outer_face)].vertices(g.graph);
            } catch (const NotPlanarError& e) {
                result["planar"] = false;
                if (e.witness()) result["kuratowski"] = kuratowski_to_json(*e.witness());
            }
            result["outerplanar"] = is_outerplanar_bipartite(g.graph);
            const ResonanceReport report = contains_no_even_k23(g.graph);
            result["verdict"] = report.verdict;
            result["resonance"] = report_to_json(report);
            out << result.dump() << '\n';
            return 0;
        }
        if (orient_cmd->parsed()) {
            const Orientation o = g.embedding ? orient_graph(g.graph, *g.embedding) : orient_graph(g.graph);
            out << orientation_to_json(o).dump() << '\n';
            return 0;
        }
        if (permpoly_cmd->parsed()) {
            IntPolynomial p;
            if (oracle) p = perm_poly_oracle(g.graph, bounds.perm_poly);
            else if (biadjacency) p = perm_poly_biadjacency(g.graph);
            else p = g.embedding ? perm_poly_fast(g.graph, *g.embedding) : perm_poly_fast(g.graph);
            out << (pretty ? p.pretty() : p.to_json()) << '\n';
            return 0;
        }
        if (charpoly_cmd->parsed()) {
            const IntPolynomial p = characteristic_polynomial(g.graph);
            out << (pretty ? p.pretty() : p.to_json()) << '\n';
            return 0;
        }
        if (verify_cmd->parsed()) {
            const Orientation o = orientation_source.empty() ? orientation_from_json(g.graph, doc) : orientation_from_json(g.graph, read_json(orientation_source, in));
            json result;
            result["all_cycles_odd"] = verify_all_cycles_odd(g.graph, o, bounds.cycles);
            result["pfaffian"] = verify_pfaffian(g.graph, o, bounds.cycles);
            const BigInt m = count_perfect_matchings(g.graph);
            const BigInt det = determinant(skew_adjacency_matrix(g.graph, o));
            result["perfect_matchings"] = matching_count_json(m);
            result["det_equals_m_squared"] = det == m * m;
            if (g.embedding) result["interior_faces_odd"] = interior_faces_odd(g.graph, *g.embedding, o);
            if (g.graph.num_vertices() <= bounds.perm_poly)
                result["charpoly_equals_permpoly"] = charpoly(skew_adjacency_matrix(g.graph, o)) == perm_poly_oracle(g.graph, bounds.perm_poly);
            out << result.dump() << '\n';
            return 0;
        }
        if (oracle_cmd->parsed()) {
            json result;
            const auto theta = oracle_even_theta(g.graph, bounds.theta);
            result["even_theta"] = theta ? even_theta_to_json(*theta) : json(nullptr);
            if (is_2connected(g.graph) && is_bipartite(g.graph)) result["one_cycle_resonant"] = oracle_1cr(g.graph, bounds.cycles);
            result["perfect_matchings"] = matching_count_json(count_perfect_matchings(g.graph));
            out << result.dump() << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const Error& e) {
        err << error_to_json(e).dump() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace permpoly::cli
