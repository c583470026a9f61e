#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sltr/faa.hpp"
#include "sltr/plane_graph.hpp"

namespace sltr {

/// Outer boundary walk of a connected subgraph together with everything it
/// encloses.
struct OutlineCycle {
  std::vector<VertexId> walk;  // closed walk, first vertex not repeated
  std::vector<EdgeId> source_edges;
  std::vector<EdgeId> interior_edges;
  std::vector<FaceId> interior_faces;
  std::vector<VertexId> interior_vertices;
  std::vector<VertexId> boundary;  // distinct vertices of the walk, sorted
  bool is_path = false;            // the subgraph is a path and is exempt
};

/// Throws Disconnected if the edges do not form a connected subgraph.
OutlineCycle outline_of(const PlaneGraph& g, const std::vector<EdgeId>& edges);

/// Vertices of the walk that are suspensions (K1), unassigned with an edge
/// outside the interior (K2), or assigned to a face outside the interior
/// and with an edge outside the interior (K3). Sorted.
std::vector<VertexId> convex_corners(const SuspendedGraph& g, const OutlineCycle& gamma,
                                     const FlatAngleAssignment& faa);

enum class CoStarMode {
  /// Outline cycles of all connected subgraphs.
  Full,
  /// Only the simple cycles of the graph.
  SimpleCycles,
};

/// Distinct enclosed regions of a graph, ordered by interior edge count and
/// then lexicographically by interior edge ids. Reusable across all
/// assignments of one graph.
class OutlineCatalog {
 public:
  /// Throws BudgetExceeded when more than `budget` subgraphs are visited or
  /// the graph has more than 256 edges or faces.
  static OutlineCatalog build(const PlaneGraph& g, CoStarMode mode, std::uint64_t budget = kDefaultEnumerationBudget);

  struct Region {
    std::vector<bool> edge_in;
    std::vector<bool> face_in;
    std::vector<EdgeId> edges;
    std::vector<VertexId> boundary;
    bool is_path = false;
  };

  const std::vector<Region>& regions() const { return regions_; }
  CoStarMode mode() const { return mode_; }
  std::uint64_t visited() const { return visited_; }

 private:
  std::vector<Region> regions_;
  CoStarMode mode_ = CoStarMode::Full;
  std::uint64_t visited_ = 0;
};

struct CoStarResult {
  bool ok = true;
  std::optional<OutlineCycle> witness;
  std::vector<VertexId> witness_corners;
  std::size_t regions_checked = 0;
};

CoStarResult check_co_star(const SuspendedGraph& g, const FlatAngleAssignment& faa, CoStarMode mode,
                           std::uint64_t budget = kDefaultEnumerationBudget);
CoStarResult check_co_star(const OutlineCatalog& catalog, const SuspendedGraph& g, const FlatAngleAssignment& faa);

}  // namespace sltr
