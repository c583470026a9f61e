#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sltr/faa.hpp"
#include "sltr/geometry.hpp"
#include "sltr/medial.hpp"
#include "sltr/plane_graph.hpp"
#include "sltr/verify.hpp"

namespace sltr {

/// Orientation and 1/2/3 labeling of the edges of a 3-connected plane
/// graph. Labels refer to the suspensions in clockwise order: the half-edge
/// at suspension s_i carries label i.
struct SchnyderWood {
  /// s_1, s_2, s_3 in clockwise order along the outer face.
  std::array<VertexId, 3> suspensions{};
  /// Per dart of G: label of the edge when oriented this way, 0 if not.
  std::vector<int> dart_label;

  /// Head of the outgoing edge of label i at v; kNone for the half-edge of
  /// a suspension, or when v has no such edge.
  VertexId out_neighbor(const PlaneGraph& g, VertexId v, int label) const;
  /// Label of the half-edge at v (1..3), 0 if v is not a suspension.
  int half_edge_label(VertexId v) const;
};

/// Finds a wood by backtracking over the clockwise out-edge triples of the
/// vertices. Throws Not3Connected or BudgetExceeded.
SchnyderWood compute_schnyder_wood(const SuspendedGraph& g, std::uint64_t budget = kDefaultEnumerationBudget);

struct SchnyderReport {
  bool s1 = true, s2 = true, s3 = true, s4 = true;
  std::vector<std::string> violations;
  bool ok() const { return s1 && s2 && s3 && s4; }
};

SchnyderReport verify_schnyder(const SuspendedGraph& g, const SchnyderWood& wood);

/// Every wood of the graph, for oracle checks on small graphs. Throws
/// BudgetExceeded.
std::vector<SchnyderWood> all_schnyder_woods(const SuspendedGraph& g,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

using Coord3 = std::array<double, 3>;

/// Maximal patch of the surface constant in coordinate `color`.
struct Flat {
  int color = 0;  // 1..3
  double level = 0;
  /// Saddles (H-vertices) of the flat in path order, from the end maximal
  /// in coordinate color-1 (left-end) to the end maximal in color+1.
  std::vector<VertexId> path;
  bool bounded = true;
};

struct OrthogonalSurface {
  MedialGraph medial;
  std::vector<Coord3> vertex;  // per vertex of G
  /// Per H-vertex: the join of the endpoint coordinates. Half-edges get
  /// their own coordinate raised above every vertex.
  std::vector<Coord3> saddle;
  /// Per H-edge: color of the flat containing it (1..3).
  std::vector<int> edge_color;
  std::vector<Flat> flats;
  /// H-edges whose color was not fixed by a unique shared saddle
  /// coordinate and came from the position of the angle among the
  /// out-edges of its vertex.
  std::vector<EdgeId> resolved_by_sector;
};

struct SurfaceOptions {
  /// Settle H-edges without a unique shared coordinate by the sector rule
  /// instead of throwing AmbiguousFlatMembership.
  bool resolve_by_sector = true;
};

/// Coordinate i of v counts the bounded faces in the region of v bounded
/// by its paths of labels i-1 and i+1. Throws AmbiguousFlatMembership
/// (see SurfaceOptions) or SurfaceNotRigid when a flat is not a path.
OrthogonalSurface surface_coordinates(const SuspendedGraph& g, const SchnyderWood& wood,
                                      const SurfaceOptions& opt = {});

/// No vertex coordinate triple is dominated by another.
bool is_antichain(const std::vector<Coord3>& pts);

struct RigidityReport {
  bool ok = true;
  int offending_flat = -1;
};

/// Along each bounded flat the saddle path is monotone in the two free
/// coordinates.
RigidityReport check_rigidity(const OrthogonalSurface& s);

/// Each non-suspension H-vertex is flat in the H-face between its two
/// H-edges of equal color. Throws AmbiguousFlatMembership.
FlatAngleAssignment medial_faa(const OrthogonalSurface& s);

/// Tile of a dissection: the triangle of a vertex or of a bounded face of
/// G, or the enclosing triangle (outer face).
struct Tile {
  enum class Kind { Vertex, Face, Enclosing };
  Kind kind;
  int id;  // vertex or face id; kNone for the enclosing triangle

  friend bool operator==(const Tile&, const Tile&) = default;
  friend auto operator<=>(const Tile&, const Tile&) = default;
};

struct DissectionTriangle {
  Tile tile;
  std::array<Point, 3> corners;  // counterclockwise
};

struct TileContact {
  enum class Kind { Point, Side };
  Kind kind;
  Tile a, b;

  friend bool operator==(const TileContact&, const TileContact&) = default;
  friend auto operator<=>(const TileContact&, const TileContact&) = default;
};

struct Dissection {
  std::array<Point, 3> enclosing;  // counterclockwise
  std::vector<DissectionTriangle> triangles;
  std::vector<TileContact> contacts;  // sorted
  // The SLTR of H the dissection was read from.
  SuspendedGraph medial;
  Drawing drawing;
};

/// Wood, surface, medial assignment, SLTR of H, triangles read off the
/// faces of H. Throws on failure of any stage; ConstructionFailure if the
/// SLTR of H does not verify.
Dissection primal_dual_representation(const SuspendedGraph& g);

struct DissectionReport {
  bool count_ok = false;
  bool area_ok = false;
  bool coloring_ok = false;
  bool contacts_ok = false;
  double area_error = 0;  // relative
  std::vector<std::string> violations;
  bool ok() const { return count_ok && area_ok && coloring_ok && contacts_ok; }
};

/// Geometric checks: |V| + |F| - 1 bounded triangles, areas adding up to
/// the enclosing triangle, triangles sharing a side are one primal and one
/// dual, and every listed contact is realized by the coordinates.
DissectionReport check_dissection(const SuspendedGraph& g, const Dissection& d, double tol = kDefaultTolerance);

}  // namespace sltr
