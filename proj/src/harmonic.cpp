#include "sltr/harmonic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "sltr/error.hpp"

namespace sltr {

double HarmonicWeights::lambda_of(VertexId v) const {
  auto it = lambda.find(v);
  return it == lambda.end() ? 0.5 : it->second;
}

double HarmonicWeights::lambda_vu_of(VertexId v, VertexId u, int degree) const {
  auto it = lambda_vu.find({v, u});
  return it == lambda_vu.end() ? 1.0 / degree : it->second;
}

void HarmonicWeights::validate(const PlaneGraph& g) const {
  for (const auto& [v, x] : lambda) {
    if (v < 0 || v >= g.num_vertices() || !(x > 0 && x < 1))
      throw Error(ErrorKind::InvalidAssignment, "lambda of vertex " + std::to_string(v) + " must lie in (0,1)", {v});
  }
  std::map<VertexId, std::pair<int, double>> per_vertex;
  for (const auto& [vu, x] : lambda_vu) {
    const auto [v, u] = vu;
    if (v < 0 || v >= g.num_vertices() || u < 0 || u >= g.num_vertices() || !g.adjacent(v, u) || !(x > 0))
      throw Error(ErrorKind::InvalidAssignment,
                  "weight of neighbor " + std::to_string(u) + " at vertex " + std::to_string(v) + " is invalid", {v, u});
    auto& [count, sum] = per_vertex[v];
    ++count;
    sum += x;
  }
  for (const auto& [v, cs] : per_vertex) {
    if (cs.first != g.degree(v) || std::abs(cs.second - 1) > 1e-9)
      throw Error(ErrorKind::InvalidAssignment,
                  "barycentric weights of vertex " + std::to_string(v) + " must cover all neighbors and sum to 1", {v});
  }
}

HarmonicWeights HarmonicWeights::random(const PlaneGraph& g, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  HarmonicWeights w;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    w.lambda[v] = dist(rng);
    std::vector<double> raw;
    double sum = 0;
    for (int i = 0; i < g.degree(v); ++i) {
      raw.push_back(dist(rng));
      sum += raw.back();
    }
    for (int i = 0; i < g.degree(v); ++i) w.lambda_vu[{v, g.neighbors(v)[i]}] = raw[i] / sum;
  }
  return w;
}

PoleTriangle default_poles() { return {Point{0, 0}, Point{1, 0}, Point{0.5, std::sqrt(3.0) / 2}}; }

PoleTriangle oriented_poles(const SuspendedGraph& g, PoleTriangle p) {
  const bool is_cw = orient(p[0], p[1], p[2]) < 0;
  if (is_cw != g.suspensions_clockwise()) std::swap(p[1], p[2]);
  return p;
}

double diameter(const PoleTriangle& p) { return std::max({dist(p[0], p[1]), dist(p[1], p[2]), dist(p[0], p[2])}); }

namespace {

HarmonicSystem skeleton(const SuspendedGraph& g, const PoleTriangle& poles) {
  const double d = diameter(poles);
  if (!(d > 0) || std::abs(orient(poles[0], poles[1], poles[2])) <= 1e-12 * d * d)
    throw Error(ErrorKind::DegeneratePoleTriangle, "pole triangle has no area");
  HarmonicSystem sys;
  sys.num_vertices = g.graph.num_vertices();
  sys.poles = g.suspensions;
  sys.pole_positions = poles;
  sys.dependency.resize(sys.num_vertices);
  return sys;
}

void add_equation(HarmonicSystem& sys, Equation eq) {
  for (const auto& [u, w] : eq.terms) sys.dependency[eq.v].push_back(u);
  sys.equations.push_back(std::move(eq));
}

Equation barycenter(const SuspendedGraph& g, const HarmonicWeights& w, VertexId v) {
  Equation eq{v, false, {}};
  const int deg = g.graph.degree(v);
  for (VertexId u : g.graph.neighbors(v)) eq.terms.emplace_back(u, w.lambda_vu_of(v, u, deg));
  return eq;
}

}  // namespace

HarmonicSystem assemble(const SuspendedGraph& g, const FlatAngleAssignment& faa, const HarmonicWeights& w,
                        const PoleTriangle& poles) {
  HarmonicSystem sys = skeleton(g, poles);
  const PlaneGraph& pg = g.graph;
  for (VertexId v = 0; v < pg.num_vertices(); ++v) {
    if (g.is_suspension(v)) continue;
    const FaceId f = faa.face_of(v);
    if (f == kNone) {
      add_equation(sys, barycenter(g, w, v));
      continue;
    }
    int angle = kNone;
    for (int i = 0; i < pg.degree(v) && angle == kNone; ++i)
      if (pg.angle_face(v, i) == f) angle = i;
    if (angle == kNone || pg.degree(v) < 2)
      throw Error(ErrorKind::AssignedVertexWithoutSegmentNeighbors,
                  "vertex " + std::to_string(v) + " has no angle in face " + std::to_string(f), {v, f});
    const auto nb = pg.neighbors(v);
    const double lam = w.lambda_of(v);
    add_equation(sys, {v, true, {{nb[angle], lam}, {nb[(angle + 1) % nb.size()], 1 - lam}}});
  }
  return sys;
}

HarmonicSystem assemble(const SuspendedGraph& g, const PseudosegmentFamily& family, const HarmonicWeights& w,
                        const PoleTriangle& poles) {
  HarmonicSystem sys = skeleton(g, poles);
  std::vector<std::pair<VertexId, VertexId>> flat(g.graph.num_vertices(), {kNone, kNone});
  for (const auto& [v, ab] : segment_neighbors(family)) {
    if (flat[v].first != kNone)
      throw Error(ErrorKind::InvalidArrangement, "vertex " + std::to_string(v) + " is interior to two segments", {v});
    flat[v] = ab;
  }
  for (VertexId v = 0; v < g.graph.num_vertices(); ++v) {
    if (g.is_suspension(v)) continue;
    if (flat[v].first == kNone) {
      add_equation(sys, barycenter(g, w, v));
    } else {
      const double lam = w.lambda_of(v);
      add_equation(sys, {v, true, {{flat[v].first, lam}, {flat[v].second, 1 - lam}}});
    }
  }
  return sys;
}

bool check_solvability(const HarmonicSystem& sys) {
  std::vector<std::vector<VertexId>> rev(sys.num_vertices);
  for (VertexId v = 0; v < sys.num_vertices; ++v)
    for (VertexId u : sys.dependency[v]) rev[u].push_back(v);
  std::vector<bool> reach(sys.num_vertices, false);
  std::queue<VertexId> q;
  for (VertexId p : sys.poles) {
    reach[p] = true;
    q.push(p);
  }
  while (!q.empty()) {
    const VertexId u = q.front();
    q.pop();
    for (VertexId v : rev[u])
      if (!reach[v]) {
        reach[v] = true;
        q.push(v);
      }
  }
  return std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
}

Drawing solve(const HarmonicSystem& sys) {
  const int n = sys.num_vertices;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, 2);
  for (int i = 0; i < 3; ++i) {
    a(sys.poles[i], sys.poles[i]) = 1;
    b(sys.poles[i], 0) = sys.pole_positions[i].x;
    b(sys.poles[i], 1) = sys.pole_positions[i].y;
  }
  for (const auto& eq : sys.equations) {
    a(eq.v, eq.v) += 1;
    for (const auto& [u, w] : eq.terms) a(eq.v, u) -= w;
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  // rcond is only an estimate; a vanishing pivot is caught directly.
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  if (!(lu.rcond() > 1e-13) || !(pivots.minCoeff() > 1e-13 * pivots.maxCoeff()))
    throw Error(ErrorKind::SingularSystem, "harmonic system is singular");
  const Eigen::MatrixXd x = lu.solve(b);
  if (!x.allFinite()) throw Error(ErrorKind::SingularSystem, "harmonic system is singular");

  Drawing d;
  d.poles = sys.poles;
  d.pole_positions = sys.pole_positions;
  d.pos.resize(n);
  for (int v = 0; v < n; ++v) d.pos[v] = {x(v, 0), x(v, 1)};
  // Poles exactly as prescribed.
  for (int i = 0; i < 3; ++i) d.pos[sys.poles[i]] = sys.pole_positions[i];
  double worst = 0;
  for (const auto& eq : sys.equations) {
    Point r = d.pos[eq.v];
    for (const auto& [u, w] : eq.terms) r = r - w * d.pos[u];
    worst = std::max({worst, std::abs(r.x), std::abs(r.y)});
  }
  d.residual = worst / diameter(sys.pole_positions);
  return d;
}

Drawing back_substitute(const Reduction& r, const Drawing& reduced) {
  Drawing d;
  d.pos.resize(r.reduced_id.size());
  for (size_t v = 0; v < r.reduced_id.size(); ++v)
    if (r.reduced_id[v] != kNone) d.pos[v] = reduced.pos[r.reduced_id[v]];
  for (const auto& chain : r.chains) {
    const Point a = d.pos[chain.front()];
    const Point b = d.pos[chain.back()];
    const double k = static_cast<double>(chain.size() - 1);
    for (size_t i = 1; i + 1 < chain.size(); ++i) d.pos[chain[i]] = a + (i / k) * (b - a);
  }
  for (int i = 0; i < 3; ++i) d.poles[i] = r.original_id[reduced.poles[i]];
  d.pole_positions = reduced.pole_positions;
  d.residual = reduced.residual;
  return d;
}

}  // namespace sltr
