#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sltr/faa.hpp"
#include "sltr/plane_graph.hpp"

namespace sltr {

/// Simple path of the graph. Oriented from its smaller endpoint id.
struct Pseudosegment {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;  // edges[i] joins vertices[i] and vertices[i+1]

  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  bool is_endpoint(VertexId v) const { return v == front() || v == back(); }
  bool is_interior(VertexId v) const;
  bool contains(VertexId v) const;
};

/// An endpoint of one pseudosegment meeting another pseudosegment.
struct Contact {
  int segment;
  VertexId point;
  int other;
  /// True if `point` is interior to `other`, false if it is an endpoint of it.
  bool interior;
  /// For interior contacts: +1 if `segment` leaves `point` to the left of
  /// `other` (in the orientation of `other`), -1 if to the right. 0 otherwise.
  int side;

  friend bool operator==(const Contact&, const Contact&) = default;
  friend auto operator<=>(const Contact&, const Contact&) = default;
};

/// Partition of the edge set into pseudosegments. Segments are sorted by
/// their smallest edge id.
struct PseudosegmentFamily {
  std::vector<Pseudosegment> segments;
  std::vector<int> segment_of_edge;
  std::vector<Contact> contacts;  // sorted

  int size() const { return static_cast<int>(segments.size()); }
};

/// Closure of the relation merging the two edges of each flat angle.
/// Throws ArcClosesCycle or ArcTouchesSelf with the offending class (edge
/// ids) as payload.
PseudosegmentFamily pseudosegments_of(const SuspendedGraph& g, const FlatAngleAssignment& faa);

/// Builds the family from explicit edge classes. Throws InvalidArrangement
/// if the classes do not partition the edges or a class is not a simple path.
PseudosegmentFamily family_from_partition(const PlaneGraph& g, const std::vector<std::vector<EdgeId>>& classes);

/// Violations of the contact family axioms: two pseudosegments sharing more
/// than one point, or a point interior to both.
std::vector<std::string> contact_family_violations(const PseudosegmentFamily& family);

/// Interior vertex -> (previous, next) vertex along its pseudosegment.
/// Sorted by vertex. A vertex interior to two segments appears twice.
std::vector<std::pair<VertexId, std::pair<VertexId, VertexId>>> segment_neighbors(const PseudosegmentFamily& family);

/// Points (vertices) of the subset `subset` (segment indices) meeting
/// conditions F1-F4 / E1-E3. Sorted.
std::vector<VertexId> free_points(const PlaneGraph& g, const PseudosegmentFamily& family,
                                  const std::vector<int>& subset);
std::vector<VertexId> extremal_points(const PlaneGraph& g, const PseudosegmentFamily& family,
                                      const std::vector<int>& subset);

enum class PointKind { Free, Extremal };

struct CpResult {
  bool ok = true;
  std::vector<int> witness;        // smallest failing subset, lexicographically first
  std::vector<VertexId> points;    // its points of the requested kind
  std::uint64_t subsets_checked = 0;
};

/// Every subset of at least two pseudosegments has at least three points of
/// the given kind. With `connected_only` the subsets whose union is
/// disconnected are skipped. Throws BudgetExceeded.
CpResult check_cp(const PlaneGraph& g, const PseudosegmentFamily& family, PointKind kind, bool connected_only = true,
                  std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace sltr
