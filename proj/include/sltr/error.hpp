#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sltr {

enum class ErrorKind {
  InconsistentRotation,
  NonPlanarRotation,
  Disconnected,
  InvalidSuspensions,
  ReductionCreatesMultiEdge,
  NotAlmost4Regular,
  FacesNotBipartite,
  BudgetExceeded,
  InvalidAssignment,
  ArcClosesCycle,
  ArcTouchesSelf,
  DegeneratePoleTriangle,
  AssignedVertexWithoutSegmentNeighbors,
  SingularSystem,
  Not3Connected,
  SurfaceNotRigid,
  AmbiguousFlatMembership,
  InvalidArrangement,
  NotStretchable,
  ConstructionFailure,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every fallible operation of the library.
///
/// `payload` carries the ids that witness the failure when there are any
/// (the edge class of a closed arc, the pseudosegment subset of a
/// stretchability witness, ...). `line` is set for parse errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> payload = {}, int line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& payload() const noexcept { return payload_; }
  int line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::vector<int> payload_;
  int line_;
};

}  // namespace sltr
