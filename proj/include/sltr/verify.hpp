#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sltr/faa.hpp"
#include "sltr/harmonic.hpp"
#include "sltr/pseudosegments.hpp"

namespace sltr {

enum class Check {
  SegmentsStraight,
  OuterTriangle,
  NoConcaveAngles,
  NoDegenerateVertex,
  RotationPreserved,
  NoCrossings,
  NoDegeneracy,
};
inline constexpr int kNumChecks = 7;

struct CheckResult {
  std::string name;
  bool pass = true;
  /// The failure is decided by the tolerance, not by an exact coincidence.
  bool within_tolerance = false;
  std::vector<int> witness;  // vertex or edge ids, see detail
  std::string detail;
};

struct VerificationReport {
  std::array<CheckResult, kNumChecks> checks;
  /// The drawing is the mirror image of the embedding (angles are measured
  /// clockwise then).
  bool mirrored = false;
  /// Angle of vertex v in the face after rot[v][i], in rotation order.
  std::vector<std::vector<double>> theta_vf;
  /// Sum of the angles around v.
  std::vector<double> theta_v;
  /// Sum of the angles inside each bounded face (NaN for the outer face).
  std::vector<double> theta_f;
  /// Sum over vertices of their angles in bounded faces, and sum over
  /// bounded faces of their angles.
  double angle_sum_vertices = 0;
  double angle_sum_faces = 0;
  /// Every face, the outer one included, has exactly three non-flat angles.
  bool all_faces_triangles = false;

  const CheckResult& operator[](Check c) const { return checks[static_cast<int>(c)]; }
  bool all_pass() const;
};

std::string_view check_name(Check c);

inline constexpr double kDefaultTolerance = 1e-7;

/// Runs the seven checks. Lengths are compared relative to the pole
/// triangle diameter, angles in radians.
VerificationReport verify_drawing(const SuspendedGraph& g, const Drawing& d, const PseudosegmentFamily& family,
                                  double tol = kDefaultTolerance);

struct GfaaEvaluation {
  bool gfaa = false;
  std::string reason;  // why not, when gfaa is false
  std::optional<PseudosegmentFamily> family;
  std::optional<HarmonicSystem> system;
  std::optional<Drawing> drawing;
  std::optional<VerificationReport> report;
};

/// Full pipeline: conditions, pseudosegments, assembly with poles oriented
/// like the embedding, solvability, solve, verification. An assignment
/// whose arcs close or touch themselves, or whose system is not solvable,
/// is reported as not good.
GfaaEvaluation evaluate_gfaa(const SuspendedGraph& g, const FlatAngleAssignment& faa, const HarmonicWeights& w = {},
                             const PoleTriangle& poles = default_poles(), double tol = kDefaultTolerance);

bool is_gfaa(const SuspendedGraph& g, const FlatAngleAssignment& faa);

}  // namespace sltr
