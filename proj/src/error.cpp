#include "sltr/error.hpp"

namespace sltr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InconsistentRotation: return "InconsistentRotation";
    case ErrorKind::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidSuspensions: return "InvalidSuspensions";
    case ErrorKind::ReductionCreatesMultiEdge: return "ReductionCreatesMultiEdge";
    case ErrorKind::NotAlmost4Regular: return "NotAlmost4Regular";
    case ErrorKind::FacesNotBipartite: return "FacesNotBipartite";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidAssignment: return "InvalidAssignment";
    case ErrorKind::ArcClosesCycle: return "ArcClosesCycle";
    case ErrorKind::ArcTouchesSelf: return "ArcTouchesSelf";
    case ErrorKind::DegeneratePoleTriangle: return "DegeneratePoleTriangle";
    case ErrorKind::AssignedVertexWithoutSegmentNeighbors: return "AssignedVertexWithoutSegmentNeighbors";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::Not3Connected: return "Not3Connected";
    case ErrorKind::SurfaceNotRigid: return "SurfaceNotRigid";
    case ErrorKind::AmbiguousFlatMembership: return "AmbiguousFlatMembership";
    case ErrorKind::InvalidArrangement: return "InvalidArrangement";
    case ErrorKind::NotStretchable: return "NotStretchable";
    case ErrorKind::ConstructionFailure: return "ConstructionFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<int> payload, int line)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      payload_(std::move(payload)),
      line_(line) {}

}  // namespace sltr
