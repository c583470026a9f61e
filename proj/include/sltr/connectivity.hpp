#pragma once

#include <vector>

#include "sltr/plane_graph.hpp"

namespace sltr {

enum class ConnectivityAlgorithm {
  /// Remove every vertex pair and test connectivity; O(n^2 (n + m)).
  BruteForcePairs,
};

/// True iff removing any set of at most two vertices leaves the graph
/// connected and the graph has at least four vertices.
bool is_3connected(const RotationSystem& adjacency, ConnectivityAlgorithm algo = ConnectivityAlgorithm::BruteForcePairs);

/// G plus a vertex adjacent to the three suspensions is 3-connected.
bool check_internally_3connected(const SuspendedGraph& g,
                                 ConnectivityAlgorithm algo = ConnectivityAlgorithm::BruteForcePairs);

/// Result of suppressing the non-suspension degree-two vertices.
struct Reduction {
  SuspendedGraph reduced;
  /// Reduced vertex id -> original vertex id.
  std::vector<VertexId> original_id;
  /// Original vertex id -> reduced id, or kNone for suppressed vertices.
  std::vector<VertexId> reduced_id;
  /// For every reduced edge that replaced a path: the original path from
  /// one reduced endpoint to the other, both ends included (original ids).
  std::vector<std::vector<VertexId>> chains;
};

/// Suppresses every non-suspension vertex of degree two, merging its two
/// edges. Throws ReductionCreatesMultiEdge when a suppression would create a
/// parallel edge.
Reduction reduce_degree_two(const SuspendedGraph& g);

}  // namespace sltr
