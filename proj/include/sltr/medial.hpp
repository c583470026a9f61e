#pragma once

#include <vector>

#include "sltr/plane_graph.hpp"

namespace sltr {

/// What a face of the medial graph stands for in the primal graph.
struct FaceOrigin {
  enum class Kind { Vertex, Face };
  Kind kind;
  int id;  // vertex id or face id of the primal graph

  friend bool operator==(const FaceOrigin&, const FaceOrigin&) = default;
};

/// Rotation of G with a pendant vertex n+i attached to suspension i,
/// placed in the outer angle of the suspension (the half-edges).
RotationSystem with_half_edges(const SuspendedGraph& g);

/// Medial graph H of a suspended graph G.
///
/// H-vertex e < |E(G)| stands for edge e of G; H-vertices |E(G)| + i are the
/// half-edges pointing from suspension i into the outer face and are the
/// suspensions of H. H-edges are the angles of G (including the angles the
/// half-edges create at the suspensions).
struct MedialGraph {
  SuspendedGraph graph;
  std::vector<FaceOrigin> face_origin;  // indexed by face of H
  int primal_edges = 0;

  bool is_half_edge(VertexId h) const { return h >= primal_edges; }
  /// H-face that stands for primal vertex v / primal face f.
  FaceId face_of_vertex(VertexId v) const;
  FaceId face_of_face(FaceId f) const;
};

MedialGraph medial_graph(const SuspendedGraph& g);

/// Three degree-two vertices on the outer face, every other vertex of
/// degree four. The triangle C3 satisfies the profile.
bool check_almost_4_regular(const PlaneGraph& g);
bool check_almost_4_regular(const SuspendedGraph& g);

/// Recovers the primal graph from an almost 4-regular graph: its vertices
/// are the white faces of the face 2-coloring (the class holding the three
/// degree-two vertices), its edges the degree-four vertices.
///
/// Throws NotAlmost4Regular or FacesNotBipartite.
struct InverseMedial {
  SuspendedGraph graph;
  /// Face of h standing for each vertex of the recovered graph.
  std::vector<FaceId> white_face;
};
InverseMedial invert_medial(const SuspendedGraph& h);

/// Orientation-preserving isomorphism of embedded graphs that maps outer
/// face to outer face. Returns the vertex map a -> b when one exists.
std::vector<VertexId> find_embedding_isomorphism(const PlaneGraph& a, const PlaneGraph& b);
bool embeddings_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

}  // namespace sltr
