#pragma once

#include <optional>
#include <vector>

#include "permpoly/graph.h"

namespace permpoly {

/// One side of an edge: `forward` traverses it from edge.u to edge.v.
struct Dart {
    EdgeId edge = -1;
    bool forward = true;

    Vertex tail(const Graph& g) const { return forward ? g.edge(edge).u : g.edge(edge).v; }
    Vertex head(const Graph& g) const { return forward ? g.edge(edge).v : g.edge(edge).u; }
    Dart reversed() const { return {edge, !forward}; }
    int index() const { return 2 * edge + (forward ? 0 : 1); }
    friend bool operator==(const Dart&, const Dart&) = default;
};

/// Closed boundary walk of a face.
struct Face {
    std::vector<Dart> walk;

    int length() const { return static_cast<int>(walk.size()); }
    std::vector<Vertex> vertices(const Graph& g) const;
};

/// Combinatorial plane embedding given by a cyclic order of incident edges
/// at every vertex.
///
/// Faces are traced by leaving each vertex along the edge that follows the
/// arrival edge in the rotation. Every face walk therefore runs in the same
/// sense on the sphere; once `outer_face` is removed the remaining (interior)
/// walks all run in the sense this library calls clockwise. An edge is
/// clockwise on a face when its orientation agrees with the face walk.
struct RotationEmbedding {
    std::vector<std::vector<EdgeId>> rotation;
    std::vector<Face> faces;
    int outer_face = -1;

    /// Face index per dart index (see Dart::index).
    std::vector<int> face_of_dart() const;
};

enum class KuratowskiKind { K5, K33 };

struct KuratowskiWitness {
    KuratowskiKind kind;
    std::vector<Vertex> branch_vertices;
    std::vector<std::vector<Vertex>> paths;
};

class NotPlanarError : public Error {
public:
    explicit NotPlanarError(std::optional<KuratowskiWitness> witness);
    const std::optional<KuratowskiWitness>& witness() const { return witness_; }

private:
    std::optional<KuratowskiWitness> witness_;
};

/// Traces faces for a rotation system. Throws InvalidEmbedding when a
/// rotation is not a permutation of the vertex's incident edges.
std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<EdgeId>>& rotation);

/// Builds a full embedding (faces plus outer face) from a rotation system.
/// The outer face is a longest walk; ties go to the smallest minimum vertex
/// id, then to the lower face index. Throws InvalidEmbedding on a non-planar
/// or malformed rotation.
RotationEmbedding make_embedding(const Graph& g, std::vector<std::vector<EdgeId>> rotation);

/// True iff the rotation references every incident edge exactly once and
/// every component satisfies n - m + f = 2.
bool validate_embedding(const Graph& g, const std::vector<std::vector<EdgeId>>& rotation);
inline bool validate_embedding(const Graph& g, const RotationEmbedding& emb) { return validate_embedding(g, emb.rotation); }

/// Planar embedding (Boyer-Myrvold). Throws NotPlanarError with a
/// Kuratowski witness.
RotationEmbedding embed_planar(const Graph& g);
bool is_planar(const Graph& g);

/// Outerplanarity through the apex reduction. Throws NotBipartiteError.
bool is_outerplanar_bipartite(const Graph& g);

/// Restriction of a plane embedding of `g` to the subgraph `sub`.
RotationEmbedding restrict_embedding(const Graph& g, const RotationEmbedding& emb, const Subgraph& sub);

}  // namespace permpoly
