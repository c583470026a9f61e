#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "sltr/faa.hpp"
#include "sltr/harmonic.hpp"
#include "sltr/plane_graph.hpp"
#include "sltr/schnyder.hpp"
#include "sltr/stretcher.hpp"

namespace sltr {

/// Text form of a suspended graph with optional assignment, weights and
/// poles. Faces in `assign` lines are given by their canonical walk.
///
///   sltr-graph 1
///   vertices 4
///   rotation 0 : 1 3 2
///   ...
///   suspensions 0 1 2
///   outer 1 0
///   assign 5 : 0 1 5 4
///   lambda 5 0.5
///   lambda_vu 3 0 0.25
///   poles 0 0 1 0 0.5 0.866
///   end
struct GraphDocument {
  int version = 1;
  RotationSystem rotation;
  std::array<VertexId, 3> suspensions{};
  std::pair<VertexId, VertexId> outer{kNone, kNone};
  std::vector<std::pair<VertexId, std::vector<VertexId>>> assignments;
  std::vector<std::pair<VertexId, double>> lambda;
  std::vector<std::tuple<VertexId, VertexId, double>> lambda_vu;
  std::optional<std::array<double, 6>> poles;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Throws ParseError with the 1-based line number.
GraphDocument parse_graph(std::string_view text);
std::string serialize_graph(const GraphDocument& doc);

/// Builds the embedded graph. Throws the planar_core errors.
SuspendedGraph to_suspended(const GraphDocument& doc);
/// Resolves the assignment block against the graph. Throws InvalidAssignment
/// if a walk names no face.
FlatAngleAssignment assignment_of(const GraphDocument& doc, const PlaneGraph& g);

/// Weights of the lambda blocks; unset entries keep their defaults.
HarmonicWeights weights_of(const GraphDocument& doc);
/// The poles block, or the default triangle.
PoleTriangle poles_of(const GraphDocument& doc);

GraphDocument to_document(const SuspendedGraph& g);
void set_assignment(GraphDocument& doc, const PlaneGraph& g, const FlatAngleAssignment& faa);

/// Standalone assignment file: "sltr-faa 1", assign lines, "end".
FlatAngleAssignment parse_faa(std::string_view text, const PlaneGraph& g);
std::string serialize_faa(const FlatAngleAssignment& faa, const PlaneGraph& g);

/// Embedded graph with a pseudosegment partition given as edge id lists
/// (edges numbered by their sorted endpoint pairs).
///
///   sltr-arrangement 1
///   vertices 6
///   rotation 0 : 1
///   ...
///   outer 0 1
///   segment 0 : 0 3
///   end
struct ArrangementDocument {
  int version = 1;
  RotationSystem rotation;
  std::pair<VertexId, VertexId> outer{kNone, kNone};
  std::vector<std::vector<EdgeId>> segments;

  friend bool operator==(const ArrangementDocument&, const ArrangementDocument&) = default;
};

ArrangementDocument parse_arrangement(std::string_view text);
std::string serialize_arrangement(const ArrangementDocument& doc);
/// Throws the planar_core errors or InvalidArrangement.
PseudosegmentArrangement to_arrangement(const ArrangementDocument& doc);
ArrangementDocument to_document(const PseudosegmentArrangement& a);

/// Vertex positions: "sltr-drawing 1", "vertices N", "pos v x y" per
/// vertex, "poles a b c", "residual r", "end".
Drawing parse_drawing(std::string_view text);
std::string serialize_drawing(const Drawing& d);

/// Triangles with their origin, then contacts; output only.
///
///   sltr-dissection 1
///   enclosing x0 y0 x1 y1 x2 y2
///   triangle vertex 3 : x0 y0 x1 y1 x2 y2
///   contact side vertex 3 face 1
///   end
std::string serialize_dissection(const Dissection& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace sltr
