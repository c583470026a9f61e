#pragma once

#include <string>
#include <vector>

#include "sltr/harmonic.hpp"
#include "sltr/plane_graph.hpp"
#include "sltr/pseudosegments.hpp"
#include "sltr/schnyder.hpp"

namespace sltr {

struct RenderSpec {
  double width = 600;
  double height = 600;
  double margin = 20;
  double stroke_width = 2;
  double vertex_radius = 3.5;
  /// Pseudosegments cycle through these colors.
  std::vector<std::string> segment_colors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
                                          "#8c564b", "#e377c2"};
  std::string primal_fill = "#f2c14e";
  std::string dual_fill = "#5b8fd6";
  bool labels = false;

  /// Throws std::invalid_argument on non-positive sizes.
  void validate() const;
};

/// Straight-line drawing of g; edges colored by pseudosegment when a family
/// is given. An unverified drawing carries a visible note.
std::string render_svg(const PlaneGraph& g, const Drawing& d, const PseudosegmentFamily* family,
                       const RenderSpec& spec = {}, bool verified = true);

/// Triangles filled by origin class, enclosing triangle outlined.
std::string render_svg(const Dissection& d, const RenderSpec& spec = {});

}  // namespace sltr
