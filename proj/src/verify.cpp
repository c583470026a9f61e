#include "sltr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sltr/error.hpp"

namespace sltr {

namespace {

constexpr double kExact = 1e-12;

constexpr std::string_view kNames[kNumChecks] = {
    "segments-straight", "outer-triangle", "no-concave-angles", "no-degenerate-vertex",
    "rotation-preserved", "no-crossings",  "no-degeneracy",
};

struct Ctx {
  const SuspendedGraph& sg;
  const PlaneGraph& g;
  const Drawing& d;
  double tol;
  double len_tol;  // tol scaled by the pole triangle diameter
  VerificationReport& r;

  CheckResult& at(Check c) { return r.checks[static_cast<int>(c)]; }

  void fail(Check c, std::vector<int> witness, const std::string& detail, bool ambiguous = false) {
    CheckResult& cr = at(c);
    if (!cr.pass) return;  // keep the first witness
    cr.pass = false;
    cr.witness = std::move(witness);
    cr.detail = detail;
    cr.within_tolerance = ambiguous;
  }

  // A quantity at or below the tolerance that is not an exact zero.
  bool ambiguous_length(double x) const { return x > kExact * len_tol / tol; }
  static bool ambiguous_angle(double x) { return x > kExact; }

  Point dir(VertexId v, VertexId u) const { return d.pos[u] - d.pos[v]; }
};

void segments_straight(Ctx& c, const PseudosegmentFamily& fam) {
  for (int i = 0; i < fam.size(); ++i) {
    const auto& vs = fam.segments[i].vertices;
    if (vs.size() < 3) continue;
    const Point a = c.d.pos[vs.front()];
    const Point b = c.d.pos[vs.back()];
    const double len = dist(a, b);
    if (len <= c.len_tol) {
      c.fail(Check::SegmentsStraight, {i}, "segment " + std::to_string(i) + " has coinciding endpoints",
             c.ambiguous_length(len));
      continue;
    }
    const Point u = (1 / len) * (b - a);
    double last = -std::numeric_limits<double>::infinity();
    for (VertexId v : vs) {
      const Point p = c.d.pos[v] - a;
      const double off = std::abs(cross(u, p));
      const double t = dot(u, p);
      if (off > c.len_tol) {
        c.fail(Check::SegmentsStraight, {i, v},
               "vertex " + std::to_string(v) + " is off segment " + std::to_string(i));
      } else if (!(t > last)) {
        c.fail(Check::SegmentsStraight, {i, v},
               "vertex " + std::to_string(v) + " breaks the order along segment " + std::to_string(i));
      }
      last = t;
    }
  }
}

void outer_triangle(Ctx& c) {
  for (int i = 0; i < 3; ++i) {
    if (!(c.d.pos[c.d.poles[i]] == c.d.pole_positions[i]))
      c.fail(Check::OuterTriangle, {c.d.poles[i]},
             "suspension " + std::to_string(c.d.poles[i]) + " is not at its pole");
  }
  const auto walk = c.g.face_vertices(c.g.outer_face());
  const size_t n = walk.size();
  size_t start = 0;
  while (!c.sg.is_suspension(walk[start])) ++start;
  // Vertices between consecutive suspensions lie on the side joining them.
  std::vector<VertexId> chain{walk[start]};
  for (size_t k = 1; k <= n; ++k) {
    const VertexId v = walk[(start + k) % n];
    chain.push_back(v);
    if (!c.sg.is_suspension(v)) continue;
    const Point a = c.d.pos[chain.front()];
    const Point b = c.d.pos[chain.back()];
    for (size_t j = 1; j + 1 < chain.size(); ++j) {
      const double off = point_segment_distance(c.d.pos[chain[j]], a, b);
      if (off > c.len_tol)
        c.fail(Check::OuterTriangle, {chain[j]}, "outer vertex " + std::to_string(chain[j]) + " is off its side");
    }
    chain = {v};
  }
}

void no_concave_angles(Ctx& c) {
  for (VertexId v = 0; v < c.g.num_vertices(); ++v) {
    if (c.sg.is_suspension(v)) continue;
    std::vector<double> ang;
    for (VertexId u : c.g.neighbors(v)) {
      const Point p = c.dir(v, u);
      ang.push_back(std::atan2(p.y, p.x));
    }
    std::sort(ang.begin(), ang.end());
    double gap = 2 * kPi - (ang.back() - ang.front());
    for (size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
    if (gap > kPi + c.tol)
      c.fail(Check::NoConcaveAngles, {v}, "vertex " + std::to_string(v) + " has an angle above pi");
  }
}

void no_degenerate_vertex(Ctx& c) {
  for (VertexId v = 0; v < c.g.num_vertices(); ++v) {
    const auto nb = c.g.neighbors(v);
    std::vector<Point> unit;
    for (VertexId u : nb) {
      const Point p = c.dir(v, u);
      const double l = norm(p);
      unit.push_back(l > 0 ? (1 / l) * p : Point{0, 0});
    }
    for (size_t a = 0; a < nb.size(); ++a) {
      std::vector<int> line{v, nb[a]};
      double worst = 0;
      for (size_t b = 0; b < nb.size(); ++b) {
        if (b == a) continue;
        const double s = std::abs(cross(unit[a], unit[b]));
        if (s <= c.tol) {
          line.push_back(nb[b]);
          worst = std::max(worst, s);
        }
      }
      if (line.size() >= 4) {
        c.fail(Check::NoDegenerateVertex, line,
               "vertex " + std::to_string(v) + " has three neighbors on one line", c.ambiguous_angle(worst));
        break;
      }
    }
  }
}

void rotation_and_angles(Ctx& c) {
  const PlaneGraph& g = c.g;
  auto& r = c.r;
  r.theta_vf.assign(g.num_vertices(), {});
  r.theta_v.assign(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    const size_t k = nb.size();
    for (size_t i = 0; i < k; ++i) {
      const Point a = c.dir(v, nb[i]);
      const Point b = c.dir(v, nb[(i + 1) % k]);
      const double t = k == 1 ? 2 * kPi : r.mirrored ? ccw_angle(b, a) : ccw_angle(a, b);
      r.theta_vf[v].push_back(t);
      r.theta_v[v] += t;
      if (k > 1 && g.angle_face(v, static_cast<int>(i)) != g.outer_face()) r.angle_sum_vertices += t;
    }
    if (g.vertex_on_face(v, g.outer_face())) continue;
    const double off = std::abs(r.theta_v[v] - 2 * kPi);
    if (off > c.tol)
      c.fail(Check::RotationPreserved, {v},
             "angles around vertex " + std::to_string(v) + " sum to " + std::to_string(r.theta_v[v]));
  }
  r.theta_f.assign(g.num_faces(), std::numeric_limits<double>::quiet_NaN());
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    if (f == g.outer_face()) continue;
    double sum = 0;
    for (DartId dd : g.face_darts(f)) {
      const auto [u, v, e] = g.dart_info(dd);
      const VertexId w = g.dart_info(g.next_in_face(dd)).head;
      const Point a = c.dir(v, w);
      const Point b = c.dir(v, u);
      sum += r.mirrored ? ccw_angle(b, a) : ccw_angle(a, b);
    }
    r.theta_f[f] = sum;
    r.angle_sum_faces += sum;
  }
}

void no_crossings(Ctx& c) {
  const PlaneGraph& g = c.g;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.edge(e);
    const Point pa = c.d.pos[a], pb = c.d.pos[b];
    for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
      const auto [x, y] = g.edge(f);
      if (x == a || x == b || y == a || y == b) continue;
      const Point px = c.d.pos[x], py = c.d.pos[y];
      if (std::max(px.x, py.x) < std::min(pa.x, pb.x) - c.len_tol ||
          std::min(px.x, py.x) > std::max(pa.x, pb.x) + c.len_tol ||
          std::max(px.y, py.y) < std::min(pa.y, pb.y) - c.len_tol ||
          std::min(px.y, py.y) > std::max(pa.y, pb.y) + c.len_tol)
        continue;
      const double o1 = orient(pa, pb, px), o2 = orient(pa, pb, py);
      const double o3 = orient(px, py, pa), o4 = orient(px, py, pb);
      const bool proper = ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
      const double gap = std::min({point_segment_distance(px, pa, pb), point_segment_distance(py, pa, pb),
                                   point_segment_distance(pa, px, py), point_segment_distance(pb, px, py)});
      if (proper) {
        c.fail(Check::NoCrossings, {e, f}, "edges " + std::to_string(e) + " and " + std::to_string(f) + " cross",
               c.ambiguous_length(gap));
      } else if (gap <= c.len_tol) {
        c.fail(Check::NoCrossings, {e, f}, "edges " + std::to_string(e) + " and " + std::to_string(f) + " touch",
               c.ambiguous_length(gap));
      }
    }
  }
}

void no_degeneracy(Ctx& c) {
  const PlaneGraph& g = c.g;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.edge(e);
    const double l = dist(c.d.pos[a], c.d.pos[b]);
    if (l < c.len_tol)
      c.fail(Check::NoDegeneracy, {a, b}, "edge " + std::to_string(e) + " has length " + std::to_string(l),
             c.ambiguous_length(l));
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    if (nb.size() < 2) continue;
    for (size_t i = 0; i < nb.size(); ++i) {
      const double t = angle_between(c.dir(v, nb[i]), c.dir(v, nb[(i + 1) % nb.size()]));
      if (t < c.tol)
        c.fail(Check::NoDegeneracy, {v, nb[i], nb[(i + 1) % nb.size()]},
               "zero angle at vertex " + std::to_string(v), c.ambiguous_angle(t));
    }
  }
}

bool faces_are_triangles(const Ctx& c) {
  const PlaneGraph& g = c.g;
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    int corners = 0;
    for (DartId dd : g.face_darts(f)) {
      const auto [u, v, e] = g.dart_info(dd);
      const VertexId w = g.dart_info(g.next_in_face(dd)).head;
      if (angle_between(c.dir(v, u), c.dir(v, w)) < kPi - c.tol) ++corners;
    }
    if (corners != 3) return false;
  }
  return true;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string_view check_name(Check c) { return kNames[static_cast<int>(c)]; }

VerificationReport verify_drawing(const SuspendedGraph& g, const Drawing& d, const PseudosegmentFamily& family,
                                  double tol) {
  VerificationReport r;
  for (int i = 0; i < kNumChecks; ++i) r.checks[i].name = std::string(kNames[i]);
  const PoleTriangle& p = d.pole_positions;
  r.mirrored = (orient(p[0], p[1], p[2]) < 0) != g.suspensions_clockwise();
  Ctx c{g, g.graph, d, tol, tol * diameter(p), r};
  segments_straight(c, family);
  outer_triangle(c);
  no_concave_angles(c);
  no_degenerate_vertex(c);
  rotation_and_angles(c);
  no_crossings(c);
  no_degeneracy(c);
  r.all_faces_triangles = faces_are_triangles(c);
  return r;
}

GfaaEvaluation evaluate_gfaa(const SuspendedGraph& g, const FlatAngleAssignment& faa, const HarmonicWeights& w,
                             const PoleTriangle& poles, double tol) {
  GfaaEvaluation out;
  const auto cond = check_assignment_conditions(g, faa);
  if (!cond.ok()) {
    out.reason = "assignment conditions fail: " + cond.violations.front();
    return out;
  }
  try {
    out.family = pseudosegments_of(g, faa);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ArcClosesCycle && e.kind() != ErrorKind::ArcTouchesSelf) throw;
    out.reason = std::string(to_string(e.kind())) + ": " + e.what();
    return out;
  }
  out.system = assemble(g, faa, w, oriented_poles(g, poles));
  if (!check_solvability(*out.system)) {
    out.reason = "system not solvable: some vertex cannot reach a pole";
    return out;
  }
  out.drawing = solve(*out.system);
  out.report = verify_drawing(g, *out.drawing, *out.family, tol);
  out.gfaa = out.report->all_pass() && out.report->all_faces_triangles;
  if (!out.gfaa) {
    for (const auto& cr : out.report->checks)
      if (!cr.pass) {
        out.reason = cr.name + ": " + cr.detail;
        break;
      }
    if (out.reason.empty()) out.reason = "some face is not a triangle";
  }
  return out;
}

bool is_gfaa(const SuspendedGraph& g, const FlatAngleAssignment& faa) { return evaluate_gfaa(g, faa).gfaa; }

}  // namespace sltr
