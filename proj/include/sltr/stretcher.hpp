#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sltr/harmonic.hpp"
#include "sltr/plane_graph.hpp"
#include "sltr/pseudosegments.hpp"
#include "sltr/verify.hpp"

namespace sltr {

/// Embedded graph whose edges are partitioned into pseudosegments forming a
/// contact family. The outer face of the graph is the unbounded region.
struct PseudosegmentArrangement {
  PlaneGraph graph;
  PseudosegmentFamily family;

  /// Throws InvalidArrangement if the classes do not form a contact family.
  static PseudosegmentArrangement make(PlaneGraph graph, const std::vector<std::vector<EdgeId>>& classes);

  /// Per face: number of maximal stretches of one pseudosegment along its
  /// boundary walk (the sides of the region). A free end splits a stretch.
  std::vector<int> region_sides() const;
};

struct StretchCheck {
  bool ok = true;
  std::vector<int> witness;  // segment indices
  std::vector<VertexId> extremal;
};

/// Every subset of at least two pseudosegments has at least three extremal
/// points. Throws BudgetExceeded.
StretchCheck check_stretchable(const PseudosegmentArrangement& a, std::uint64_t budget = kDefaultEnumerationBudget);

struct AugmentOptions {
  /// Add protection and triangulation points in every bounded region, also
  /// in regions that already have three sides.
  bool protect_all = false;
};

struct AugmentedArrangement {
  PseudosegmentArrangement base;
  /// The augmented graph, suspended at the corners of the enclosing
  /// triangle.
  SuspendedGraph graph;
  PseudosegmentFamily family;
  std::array<int, 3> delta{};  // segments of the enclosing triangle
  std::vector<VertexId> protection_points;
  std::vector<VertexId> triangulation_points;
  /// Removal map: base vertex of each augmented vertex (kNone for added
  /// ones) and base segment of each augmented segment (kNone for added).
  std::vector<VertexId> original_vertex;
  std::vector<int> original_segment;
  /// Dart of the base graph on its outer face, as (tail, head).
  std::pair<VertexId, VertexId> base_outer{kNone, kNone};
};

/// Encloses the family in a triangle whose sides pass through its extremal
/// points (in outer walk order, split into three runs), then adds
/// protection points on every side of a region with other than three sides
/// and a triangulation point joined to them. Free ends inside a region
/// serve as protection points of the stretches around them. Throws
/// NotStretchable if the condition fails, ConstructionFailure if the result
/// is not a triangle-faced contact family.
AugmentedArrangement augment(const PseudosegmentArrangement& a, const AugmentOptions& opt = {});

/// Removes everything augment added; combinatorially equal to the base.
PseudosegmentArrangement strip(const AugmentedArrangement& aug);

bool same_arrangement(const PseudosegmentArrangement& a, const PseudosegmentArrangement& b);

struct StretchResult {
  AugmentedArrangement augmented;
  Drawing augmented_drawing;
  VerificationReport report;
  /// Positions of the base vertices.
  std::vector<Point> pos;
  /// Largest distance of a pseudosegment vertex from the line through its
  /// endpoints, relative to the drawing diameter.
  double straightness = 0;
  /// Contacts of the family before and read back from the coordinates.
  std::vector<Contact> contacts_before;
  std::vector<Contact> contacts_after;
  bool internally_3connected = false;
  /// For subsets of at most 12 base segments: each extremal point of the
  /// subset in the augmented family is free, or is the endpoint of three of
  /// its segments (the subset then cannot be collinear).
  bool extremal_are_free = false;
  bool protect_all_used = false;

  bool contacts_preserved() const { return contacts_before == contacts_after; }
};

/// Augment, assign every interior pseudosegment vertex flat, solve the
/// harmonic system, verify, strip. Retries with every region protected if
/// the first augmentation does not verify. Throws NotStretchable (witness
/// as payload) or ConstructionFailure.
StretchResult stretch(const PseudosegmentArrangement& a, const HarmonicWeights& w = {},
                      double tol = kDefaultTolerance);

/// Contacts realized by straight segments at the given positions.
std::vector<Contact> geometric_contacts(const PseudosegmentFamily& family, const std::vector<Point>& pos,
                                        double eps);

}  // namespace sltr
