#pragma once

#include <optional>

#include <json.hpp>

#include "permpoly/embedding.h"
#include "permpoly/errors.h"
#include "permpoly/graph.h"
#include "permpoly/orientation.h"
#include "permpoly/polynomial.h"
#include "permpoly/resonance.h"

namespace permpoly {

using json = nlohmann::json;

struct GraphInput {
    Graph graph;
    std::optional<RotationEmbedding> embedding;
};

/// {"n": int, "edges": [[u,v],...], "embedding": optional rotation lists}.
/// Throws InvalidInput, InvalidEmbedding, or the build_graph errors.
GraphInput graph_from_json(const json& j);
json graph_to_json(const Graph& g, const RotationEmbedding* emb = nullptr);

json orientation_to_json(const Orientation& o);
Orientation orientation_from_json(const Graph& g, const json& j);

/// Integer array indexed by degree. Coefficients beyond 64 bits are emitted
/// as raw JSON numbers, never as strings.
std::string polynomial_json_text(const IntPolynomial& p);

json cycle_to_json(const Cycle& c);
json ears_to_json(const EarDecomposition& d);
json violation_to_json(const Violation& v);
json even_theta_to_json(const EvenTheta& t);
json report_to_json(const ResonanceReport& r);
json coloring_to_json(const Coloring& c);
json kuratowski_to_json(const KuratowskiWitness& w);
json error_to_json(const Error& e);

}  // namespace permpoly
