#include "sltr/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sltr {

void RenderSpec::validate() const {
  if (!(width > 0 && height > 0 && stroke_width > 0 && vertex_radius >= 0 && margin >= 0))
    throw std::invalid_argument("render sizes must be positive");
  if (segment_colors.empty()) throw std::invalid_argument("no segment colors");
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

// Maps drawing coordinates into the canvas, y pointing up.
struct Frame {
  double sx = 1, ox = 0, oy = 0, h = 0;

  Frame(const std::vector<Point>& pts, const RenderSpec& spec) : h(spec.height) {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
    for (const Point& p : pts) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    const double w = std::max(x1 - x0, 1e-12), hh = std::max(y1 - y0, 1e-12);
    sx = std::min((spec.width - 2 * spec.margin) / w, (spec.height - 2 * spec.margin) / hh);
    ox = spec.margin + ((spec.width - 2 * spec.margin) - sx * w) / 2 - sx * x0;
    oy = spec.margin + ((spec.height - 2 * spec.margin) - sx * hh) / 2 - sx * y0;
  }
  std::string x(const Point& p) const { return num(ox + sx * p.x); }
  std::string y(const Point& p) const { return num(h - (oy + sx * p.y)); }
};

void header(std::ostringstream& out, const RenderSpec& spec) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(spec.width) << "\" height=\""
      << num(spec.height) << "\" viewBox=\"0 0 " << num(spec.width) << " " << num(spec.height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string polygon(const Frame& fr, const std::array<Point, 3>& t) {
  std::string s;
  for (int i = 0; i < 3; ++i) s += (i ? " " : "") + fr.x(t[i]) + "," + fr.y(t[i]);
  return s;
}

}  // namespace

std::string render_svg(const PlaneGraph& g, const Drawing& d, const PseudosegmentFamily* family,
                       const RenderSpec& spec, bool verified) {
  spec.validate();
  const Frame fr(d.pos, spec);
  std::ostringstream out;
  header(out, spec);
  out << "<g stroke-width=\"" << num(spec.stroke_width) << "\" stroke-linecap=\"round\">\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    std::string color = "#333333";
    if (family && family->segment_of_edge[e] != kNone)
      color = spec.segment_colors[family->segment_of_edge[e] % spec.segment_colors.size()];
    out << "<line x1=\"" << fr.x(d.pos[u]) << "\" y1=\"" << fr.y(d.pos[u]) << "\" x2=\"" << fr.x(d.pos[v])
        << "\" y2=\"" << fr.y(d.pos[v]) << "\" stroke=\"" << color << "\"/>\n";
  }
  out << "</g>\n<g fill=\"black\">\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "<circle cx=\"" << fr.x(d.pos[v]) << "\" cy=\"" << fr.y(d.pos[v]) << "\" r=\"" << num(spec.vertex_radius)
        << "\"/>\n";
    if (spec.labels)
      out << "<text x=\"" << fr.x(d.pos[v]) << "\" y=\"" << fr.y(d.pos[v]) << "\" dx=\"5\" dy=\"-5\" font-size=\"12\">"
          << v << "</text>\n";
  }
  out << "</g>\n";
  if (!verified) out << "<text x=\"10\" y=\"20\" font-size=\"14\" fill=\"red\">unverified</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const Dissection& d, const RenderSpec& spec) {
  spec.validate();
  const Frame fr(std::vector<Point>(d.enclosing.begin(), d.enclosing.end()), spec);
  std::ostringstream out;
  header(out, spec);
  out << "<g stroke=\"black\" stroke-width=\"" << num(spec.stroke_width / 2) << "\" stroke-linejoin=\"round\">\n";
  for (const auto& t : d.triangles) {
    const bool primal = t.tile.kind == Tile::Kind::Vertex;
    out << "<polygon class=\"" << (primal ? "vertex" : "face") << "\" points=\"" << polygon(fr, t.corners)
        << "\" fill=\"" << (primal ? spec.primal_fill : spec.dual_fill) << "\"/>\n";
  }
  out << "</g>\n";
  out << "<polygon class=\"enclosing\" points=\"" << polygon(fr, d.enclosing) << "\" fill=\"none\" stroke=\"black\" "
      << "stroke-width=\"" << num(spec.stroke_width) << "\"/>\n";
  if (spec.labels) {
    for (const auto& t : d.triangles) {
      const Point c = (1.0 / 3) * (t.corners[0] + t.corners[1] + t.corners[2]);
      out << "<text x=\"" << fr.x(c) << "\" y=\"" << fr.y(c) << "\" font-size=\"11\" text-anchor=\"middle\">"
          << (t.tile.kind == Tile::Kind::Vertex ? "v" : "f") << t.tile.id << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sltr
