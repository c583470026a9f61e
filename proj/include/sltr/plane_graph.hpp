#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sltr {

using VertexId = int;
using EdgeId = int;
using FaceId = int;
using DartId = int;

inline constexpr int kNone = -1;

/// Per-vertex counterclockwise neighbor lists.
using RotationSystem = std::vector<std::vector<VertexId>>;

struct Dart {
  VertexId tail;
  VertexId head;
  EdgeId edge;
};

/// Combinatorial plane embedding given by a rotation system.
///
/// Edges are numbered by the lexicographic order of their (min, max)
/// endpoint pairs. Edge e owns darts 2e (min -> max) and 2e+1 (max -> min).
/// Faces are traced with the rule "after u -> v continue with v -> w where w
/// precedes u in the counterclockwise rotation at v", so bounded faces are
/// walked counterclockwise and the outer face clockwise. Faces are numbered
/// in order of their smallest dart.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Throws InconsistentRotation, Disconnected or NonPlanarRotation.
  static PlaneGraph from_rotation(RotationSystem rotation, std::pair<VertexId, VertexId> outer_hint);

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const RotationSystem& rotation() const { return rotation_; }
  std::span<const VertexId> neighbors(VertexId v) const { return rotation_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

  std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }

  Dart dart_info(DartId d) const;
  /// Dart u -> v; requires the edge to exist.
  DartId dart(VertexId u, VertexId v) const;
  static DartId reverse(DartId d) { return d ^ 1; }
  DartId next_in_face(DartId d) const { return next_[d]; }
  FaceId face_of(DartId d) const { return face_of_[d]; }

  const std::vector<DartId>& face_darts(FaceId f) const { return faces_[f]; }
  std::vector<VertexId> face_vertices(FaceId f) const;
  int face_size(FaceId f) const { return static_cast<int>(faces_[f].size()); }
  FaceId outer_face() const { return outer_face_; }

  /// Position of u in the rotation of v.
  int rotation_index(VertexId v, VertexId u) const;
  /// Face holding the angle at v between rot[v][i] and rot[v][i+1].
  FaceId angle_face(VertexId v, int i) const;
  /// Faces around v, one per angle, in rotation order.
  std::vector<FaceId> faces_around(VertexId v) const;
  bool vertex_on_face(VertexId v, FaceId f) const;

  /// Lexicographically smallest rotation of the face's vertex sequence.
  std::vector<VertexId> canonical_face_walk(FaceId f) const;
  std::optional<FaceId> find_face(std::span<const VertexId> walk) const;

 private:
  RotationSystem rotation_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<DartId> next_;
  std::vector<FaceId> face_of_;
  std::vector<std::vector<DartId>> faces_;
  FaceId outer_face_ = kNone;
};

/// Plane graph with three designated outer corners.
struct SuspendedGraph {
  PlaneGraph graph;
  std::array<VertexId, 3> suspensions{};

  /// Throws InvalidSuspensions unless the three vertices are distinct and lie
  /// on the outer face.
  static SuspendedGraph make(PlaneGraph graph, std::array<VertexId, 3> suspensions);

  bool is_suspension(VertexId v) const {
    return v == suspensions[0] || v == suspensions[1] || v == suspensions[2];
  }
  /// True when the suspensions appear in the given order along the
  /// (clockwise) outer face walk.
  bool suspensions_clockwise() const;
};

/// Component label per vertex of an undirected adjacency structure, ignoring
/// the vertices flagged in `removed`.
std::vector<int> connected_components(const RotationSystem& adjacency, const std::vector<bool>& removed = {});

}  // namespace sltr
