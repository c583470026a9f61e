#pragma once

#include <array>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "sltr/connectivity.hpp"
#include "sltr/faa.hpp"
#include "sltr/geometry.hpp"
#include "sltr/plane_graph.hpp"
#include "sltr/pseudosegments.hpp"

namespace sltr {

/// Convex-combination weights of the harmonic equations. Missing entries
/// fall back to lambda = 1/2 and lambda_vu = 1/deg(v).
struct HarmonicWeights {
  /// Weight of the first flat neighbor of an assigned vertex, in (0, 1).
  std::map<VertexId, double> lambda;
  /// Weight of neighbor u in the barycenter of unassigned vertex v. Given
  /// either for all neighbors of v or for none; positive, summing to 1.
  std::map<std::pair<VertexId, VertexId>, double> lambda_vu;

  double lambda_of(VertexId v) const;
  double lambda_vu_of(VertexId v, VertexId u, int degree) const;

  /// Throws InvalidAssignment if an entry is out of range or the barycentric
  /// weights of a vertex are incomplete or do not sum to one.
  void validate(const PlaneGraph& g) const;

  /// lambda uniform in [lo, hi] for every vertex; lambda_vu normalized
  /// uniform draws from [lo, hi] for every vertex.
  static HarmonicWeights random(const PlaneGraph& g, std::mt19937_64& rng, double lo = 0.1, double hi = 0.9);
};

using PoleTriangle = std::array<Point, 3>;

/// (0,0), (1,0), (1/2, sqrt(3)/2).
PoleTriangle default_poles();
/// Assigns the corners of `p` to the suspensions so that the drawing keeps
/// the orientation of the embedding: the suspensions s1, s2, s3 appear in
/// the clockwise order of the outer face walk, so the returned triangle is
/// clockwise in that order whenever they do.
PoleTriangle oriented_poles(const SuspendedGraph& g, PoleTriangle p = default_poles());

struct Equation {
  VertexId v = kNone;
  bool flat = false;  // two-term equation of an assigned vertex
  std::vector<std::pair<VertexId, double>> terms;
};

/// x_v = sum of w * x_u over the terms, for every non-pole v; the poles are
/// fixed. Same for y.
struct HarmonicSystem {
  int num_vertices = 0;
  std::array<VertexId, 3> poles{};
  PoleTriangle pole_positions{};
  std::vector<Equation> equations;  // by vertex id, poles skipped
  std::vector<std::vector<VertexId>> dependency;

  bool is_pole(VertexId v) const { return v == poles[0] || v == poles[1] || v == poles[2]; }
};

/// Flat neighbors of each assigned vertex are the two edges of its flat
/// angle. Throws DegeneratePoleTriangle or
/// AssignedVertexWithoutSegmentNeighbors.
HarmonicSystem assemble(const SuspendedGraph& g, const FlatAngleAssignment& faa, const HarmonicWeights& w = {},
                        const PoleTriangle& poles = default_poles());
/// Every interior vertex of a pseudosegment is flat between its segment
/// neighbors. Throws DegeneratePoleTriangle or InvalidArrangement.
HarmonicSystem assemble(const SuspendedGraph& g, const PseudosegmentFamily& family, const HarmonicWeights& w = {},
                        const PoleTriangle& poles = default_poles());

/// Every non-pole vertex reaches a pole in the dependency digraph.
bool check_solvability(const HarmonicSystem& sys);

struct Drawing {
  std::vector<Point> pos;
  std::array<VertexId, 3> poles{};
  PoleTriangle pole_positions{};
  /// Largest equation residual divided by the pole triangle diameter.
  double residual = 0;
};

/// Dense LU solve of both coordinates. Throws SingularSystem.
Drawing solve(const HarmonicSystem& sys);

double diameter(const PoleTriangle& p);

/// Coordinates for the original graph of a degree-two reduction: kept
/// vertices are copied, suppressed ones spaced evenly along the straight
/// edge that replaced their chain.
Drawing back_substitute(const Reduction& r, const Drawing& reduced);

}  // namespace sltr
