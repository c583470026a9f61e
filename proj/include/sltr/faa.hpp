#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sltr/plane_graph.hpp"

namespace sltr {

/// Partial map vertex -> incident face marking the angles that are flat
/// (of size pi) in a drawing. Pairs are kept sorted by vertex.
class FlatAngleAssignment {
 public:
  FlatAngleAssignment() = default;
  explicit FlatAngleAssignment(std::vector<std::pair<VertexId, FaceId>> pairs);

  const std::vector<std::pair<VertexId, FaceId>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  size_t size() const { return pairs_.size(); }

  /// Face the vertex is assigned to (first pair if assigned twice).
  FaceId face_of(VertexId v) const;
  bool assigned(VertexId v) const { return face_of(v) != kNone; }

  void assign(VertexId v, FaceId f);

  friend bool operator==(const FlatAngleAssignment&, const FlatAngleAssignment&) = default;

 private:
  std::vector<std::pair<VertexId, FaceId>> pairs_;
};

/// How many vertices each face receives.
struct FaceCornerSpec {
  enum class Mode {
    /// Every face, the outer one included, gets exactly |f| - 3.
    ExactTriangle,
    /// At most |f| - 3 per face; outer-face vertices never go to inner faces.
    Budget,
    /// Inner face f gets exactly |f| - corners[f]; the outer face |f| - 3.
    Prescribed,
  };
  Mode mode = Mode::ExactTriangle;
  std::vector<int> corners;  // per face, Prescribed mode only

  static FaceCornerSpec exact_triangle() { return {}; }
  static FaceCornerSpec budget() { return {Mode::Budget, {}}; }
  /// Throws InvalidAssignment if some count is below 3 or above |f|.
  static FaceCornerSpec prescribed(const PlaneGraph& g, std::vector<int> corners);

  /// Number of assigned vertices face f must (Exact/Prescribed) or may
  /// (Budget) receive.
  int target(const PlaneGraph& g, FaceId f) const;
};

struct AssignmentReport {
  bool cv_ok = true;
  bool cf_ok = true;
  std::vector<std::string> violations;
  bool ok() const { return cv_ok && cf_ok; }
};

AssignmentReport check_assignment_conditions(const SuspendedGraph& g, const FlatAngleAssignment& faa,
                                             const FaceCornerSpec& spec = FaceCornerSpec::exact_triangle());

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Enumerates every assignment satisfying the vertex and face conditions of
/// `spec`, each exactly once. Faces are processed by id; per face, vertex
/// subsets are produced in lexicographic order. The visitor returns false to
/// stop early. Throws BudgetExceeded once `budget` search nodes are used.
/// Returns the number of assignments visited.
std::uint64_t enumerate_faas(const SuspendedGraph& g, const FaceCornerSpec& spec,
                             const std::function<bool(const FlatAngleAssignment&)>& visit,
                             std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<FlatAngleAssignment> collect_faas(const SuspendedGraph& g,
                                              const FaceCornerSpec& spec = FaceCornerSpec::exact_triangle(),
                                              std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace sltr
