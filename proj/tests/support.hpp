#pragma once

// Helpers shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "sltr/faa.hpp"
#include "sltr/io.hpp"
#include "sltr/plane_graph.hpp"

#ifndef SLTR_FIXTURES
#error "SLTR_FIXTURES must point at the fixtures directory"
#endif

namespace sltr::test {

inline std::string fixture_path(const std::string& name) { return std::string(SLTR_FIXTURES) + "/" + name; }

inline SuspendedGraph load_graph(const std::string& name) {
  return to_suspended(parse_graph(read_file(fixture_path(name + ".graph"))));
}

inline PseudosegmentArrangement load_arrangement(const std::string& name) {
  return to_arrangement(parse_arrangement(read_file(fixture_path(name + ".arr"))));
}

inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names{"k4",   "octahedron", "prism",      "cube",  "pentagonal_prism",
                                              "wheel5", "prism_quad", "bad7"};
  return names;
}

// Rotation read off a straight-line sketch: neighbors sorted by angle.
inline RotationSystem sketch_rotation(const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& edges) {
  RotationSystem rot(pts.size());
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (size_t v = 0; v < pts.size(); ++v) {
    auto ang = [&](int u) { return std::atan2(pts[u].y - pts[v].y, pts[u].x - pts[v].x); };
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return ang(a) < ang(b); });
  }
  return rot;
}

// Outer dart at the lowest vertex, the same rule the fixture script uses.
inline std::pair<VertexId, VertexId> sketch_outer(const std::vector<Point>& pts, const RotationSystem& rot) {
  int v = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i)
    if (std::pair(pts[i].y, pts[i].x) < std::pair(pts[v].y, pts[v].x)) v = i;
  auto ang = [&](int u) {
    double a = std::atan2(pts[u].y - pts[v].y, pts[u].x - pts[v].x);
    return a < 0 ? a + 2 * std::numbers::pi : a;
  };
  const int u = *std::max_element(rot[v].begin(), rot[v].end(), [&](int a, int b) { return ang(a) < ang(b); });
  return {v, u};
}

inline PlaneGraph sketch(const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& edges) {
  RotationSystem rot = sketch_rotation(pts, edges);
  const auto outer = sketch_outer(pts, rot);
  return PlaneGraph::from_rotation(std::move(rot), outer);
}

inline EdgeId edge_id(const PlaneGraph& g, VertexId u, VertexId v) { return *g.edge_between(u, v); }

}  // namespace sltr::test
