#include "sltr/schnyder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "sltr/connectivity.hpp"
#include "sltr/error.hpp"
#include "sltr/harmonic.hpp"

namespace sltr {

namespace {

int prev_label(int i) { return i == 1 ? 3 : i - 1; }
int next_label(int i) { return i == 3 ? 1 : i + 1; }

std::array<VertexId, 3> clockwise_suspensions(const SuspendedGraph& g) {
  const auto& s = g.suspensions;
  return g.suspensions_clockwise() ? s : std::array<VertexId, 3>{s[0], s[2], s[1]};
}

// Neighbors in clockwise order, the half-edge of a suspension as vertex
// n + (index in g.suspensions).
RotationSystem clockwise_extended(const SuspendedGraph& g) {
  RotationSystem cw = with_half_edges(g);
  for (auto& r : cw) std::reverse(r.begin(), r.end());
  return cw;
}

// Role of an edge at one endpoint: out-edge of label k (k > 0) or lying in
// the sector of incoming label -k.
int role(int pos, const std::array<int, 3>& out, int deg) {
  for (int k = 0; k < 3; ++k)
    if (pos == out[k]) return k + 1;
  // Sector after out_k (clockwise) and before out_{k+1} holds in_{k-1}.
  for (int k = 0; k < 3; ++k) {
    const int a = out[k];
    const int b = out[(k + 1) % 3];
    const int span = ((b - a) % deg + deg) % deg;
    const int off = ((pos - a) % deg + deg) % deg;
    if (off > 0 && off < span) return -prev_label(k + 1);
  }
  return 0;
}

bool compatible(int ru, int rv) {
  if (ru > 0 && rv > 0) return ru != rv;
  if (ru > 0) return -rv == ru;
  if (rv > 0) return -ru == rv;
  return false;
}

struct WoodSearch {
  const SuspendedGraph& g;
  RotationSystem cw;
  std::array<VertexId, 3> susp;  // clockwise
  std::vector<int> fixed_half;   // per vertex: label of its half-edge or 0
  std::vector<int> half_pos;     // position of the half-edge in cw
  std::vector<VertexId> order;
  std::vector<std::vector<std::array<int, 3>>> choices;
  std::vector<std::array<int, 3>> chosen;
  std::vector<bool> decided;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool find_all = false;
  std::vector<std::vector<std::array<int, 3>>> found;

  WoodSearch(const SuspendedGraph& g_, std::uint64_t budget_) : g(g_), budget(budget_) {
    const int n = g.graph.num_vertices();
    cw = clockwise_extended(g);
    susp = clockwise_suspensions(g);
    fixed_half.assign(n, 0);
    half_pos.assign(n, kNone);
    for (int j = 0; j < 3; ++j) {
      const VertexId s = susp[j];
      fixed_half[s] = j + 1;
      const auto& r = cw[s];
      for (int p = 0; p < static_cast<int>(r.size()); ++p)
        if (r[p] >= n) half_pos[s] = p;
    }
    choices.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      const int d = static_cast<int>(cw[v].size());
      for (int a = 0; a < d; ++a)
        for (int db = 1; db < d - 1; ++db)
          for (int dc = db + 1; dc < d; ++dc) {
            const std::array<int, 3> out{a, (a + db) % d, (a + dc) % d};
            if (fixed_half[v] != 0 && out[fixed_half[v] - 1] != half_pos[v]) continue;
            if (fixed_half[v] == 0 && g.graph.degree(v) < 3) continue;
            choices[v].push_back(out);
          }
    }
    // Breadth-first order from the first suspension keeps constraints local.
    std::vector<bool> seen(n, false);
    std::queue<VertexId> q;
    q.push(susp[0]);
    seen[susp[0]] = true;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      order.push_back(v);
      for (VertexId u : g.graph.neighbors(v))
        if (!seen[u]) {
          seen[u] = true;
          q.push(u);
        }
    }
    chosen.resize(n);
    decided.assign(n, false);
  }

  int role_of(VertexId v, VertexId u) const {
    const auto& r = cw[v];
    const int pos = static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
    return role(pos, chosen[v], static_cast<int>(r.size()));
  }

  VertexId out_of(VertexId v, int label) const { return cw[v][chosen[v][label - 1]]; }

  bool consistent(VertexId v) const {
    const int n = g.graph.num_vertices();
    for (VertexId u : g.graph.neighbors(v))
      if (decided[u] && !compatible(role_of(v, u), role_of(u, v))) return false;
    // Monochromatic cycles through v.
    for (int k = 1; k <= 3; ++k) {
      VertexId x = out_of(v, k);
      for (int steps = 0; steps <= n && x < n && decided[x]; ++steps) {
        if (x == v) return false;
        x = out_of(x, k);
      }
      if (x == v) return false;
    }
    return true;
  }

  bool run(size_t i) {
    if (++nodes > budget) throw Error(ErrorKind::BudgetExceeded, "Schnyder wood search exceeded its budget");
    if (i == order.size()) {
      found.push_back(chosen);
      return !find_all;
    }
    const VertexId v = order[i];
    decided[v] = true;
    for (const auto& c : choices[v]) {
      chosen[v] = c;
      if (consistent(v) && run(i + 1)) return true;
    }
    decided[v] = false;
    return false;
  }

  SchnyderWood wood(const std::vector<std::array<int, 3>>& outs) const {
    const PlaneGraph& pg = g.graph;
    const int n = pg.num_vertices();
    SchnyderWood w;
    w.suspensions = susp;
    w.dart_label.assign(pg.num_darts(), 0);
    for (VertexId v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) {
        const VertexId u = cw[v][outs[v][k]];
        if (u < n) w.dart_label[pg.dart(v, u)] = k + 1;
      }
    return w;
  }
};

// Edges around v clockwise: +k for out_k, -k for in_k (an edge that is out
// at v counts as out only). The half-edge gives its label, 0 off suspensions.
std::vector<int> clockwise_items(const PlaneGraph& pg, const SchnyderWood& wood, const RotationSystem& cw,
                                 VertexId v) {
  const int n = pg.num_vertices();
  std::vector<int> items;
  for (VertexId u : cw[v]) {
    if (u >= n)
      items.push_back(wood.half_edge_label(v));
    else if (wood.dart_label[pg.dart(v, u)] != 0)
      items.push_back(wood.dart_label[pg.dart(v, u)]);
    else
      items.push_back(-wood.dart_label[pg.dart(u, v)]);
  }
  return items;
}

void require_3connected(const SuspendedGraph& g) {
  if (!is_3connected(g.graph.rotation()))
    throw Error(ErrorKind::Not3Connected, "Schnyder woods need a 3-connected graph");
}

}  // namespace

VertexId SchnyderWood::out_neighbor(const PlaneGraph& g, VertexId v, int label) const {
  for (VertexId u : g.neighbors(v))
    if (dart_label[g.dart(v, u)] == label) return u;
  return kNone;
}

int SchnyderWood::half_edge_label(VertexId v) const {
  for (int j = 0; j < 3; ++j)
    if (suspensions[j] == v) return j + 1;
  return 0;
}

SchnyderWood compute_schnyder_wood(const SuspendedGraph& g, std::uint64_t budget) {
  require_3connected(g);
  WoodSearch s(g, budget);
  s.run(0);
  if (s.found.empty()) throw Error(ErrorKind::ConstructionFailure, "no Schnyder wood found");
  return s.wood(s.found.front());
}

std::vector<SchnyderWood> all_schnyder_woods(const SuspendedGraph& g, std::uint64_t budget) {
  require_3connected(g);
  WoodSearch s(g, budget);
  s.find_all = true;
  s.run(0);
  std::vector<SchnyderWood> out;
  for (const auto& f : s.found) out.push_back(s.wood(f));
  return out;
}

SchnyderReport verify_schnyder(const SuspendedGraph& g, const SchnyderWood& wood) {
  const PlaneGraph& pg = g.graph;
  const int n = pg.num_vertices();
  SchnyderReport rep;
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    rep.violations.push_back(std::move(msg));
  };
  if (static_cast<int>(wood.dart_label.size()) != pg.num_darts()) {
    fail(rep.s1, "label vector has the wrong size");
    return rep;
  }
  if (wood.suspensions != clockwise_suspensions(g) &&
      wood.suspensions != std::array<VertexId, 3>{clockwise_suspensions(g)[1], clockwise_suspensions(g)[2],
                                                  clockwise_suspensions(g)[0]} &&
      wood.suspensions != std::array<VertexId, 3>{clockwise_suspensions(g)[2], clockwise_suspensions(g)[0],
                                                  clockwise_suspensions(g)[1]})
    fail(rep.s2, "suspensions of the wood are not the clockwise outer corners");

  // S1: every edge oriented one way or both, labels in range, bidirected
  // edges with distinct labels.
  for (EdgeId e = 0; e < pg.num_edges(); ++e) {
    const int a = wood.dart_label[2 * e];
    const int b = wood.dart_label[2 * e + 1];
    if (a < 0 || a > 3 || b < 0 || b > 3 || (a == 0 && b == 0) || (a != 0 && a == b))
      fail(rep.s1, "edge " + std::to_string(e) + " is not properly oriented and labeled");
  }
  if (!rep.s1) return rep;

  const RotationSystem cw = clockwise_extended(g);
  for (VertexId v = 0; v < n; ++v) {
    const std::vector<int> items = clockwise_items(pg, wood, cw, v);
    if (std::find(items.begin(), items.end(), 0) != items.end())
      fail(rep.s2, "vertex " + std::to_string(v) + " carries a half-edge but is no suspension");
    std::array<int, 3> count{};
    int first = kNone;
    for (int i = 0; i < static_cast<int>(items.size()); ++i)
      if (items[i] > 0) {
        ++count[items[i] - 1];
        if (items[i] == 1) first = i;
      }
    if (count != std::array<int, 3>{1, 1, 1}) {
      const bool at_suspension = wood.half_edge_label(v) != 0;
      fail(at_suspension ? rep.s2 : rep.s3,
           "vertex " + std::to_string(v) + " does not have exactly one outgoing edge of each label");
      continue;
    }
    // Clockwise: out1, in3*, out2, in1*, out3, in2*.
    int expect_out = 1;
    const int d = static_cast<int>(items.size());
    for (int k = 0; k < d; ++k) {
      const int it = items[(first + k) % d];
      if (it > 0) {
        if (it != expect_out) {
          fail(rep.s3, "outgoing edges of vertex " + std::to_string(v) + " are not in clockwise order 1, 2, 3");
          break;
        }
        expect_out = next_label(expect_out);
      } else if (-it != prev_label(prev_label(expect_out))) {
        fail(rep.s3, "incoming edge of label " + std::to_string(-it) + " at vertex " + std::to_string(v) +
                         " lies in the wrong sector");
        break;
      }
    }
  }

  // S4: no directed monochromatic cycle.
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> state(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      if (state[v] != 0) continue;
      std::vector<VertexId> path;
      VertexId x = v;
      while (x != kNone && state[x] == 0) {
        state[x] = 1;
        path.push_back(x);
        x = wood.out_neighbor(pg, x, k);
      }
      if (x != kNone && state[x] == 1) {
        fail(rep.s4, "directed cycle of label " + std::to_string(k) + " through vertex " + std::to_string(x));
      }
      for (VertexId p : path) state[p] = 2;
    }
  }
  return rep;
}

namespace {

// Edges on the path of label k from v to its suspension.
std::vector<bool> path_edges(const PlaneGraph& pg, const SchnyderWood& w, VertexId v, int k) {
  std::vector<bool> on(pg.num_edges(), false);
  for (int steps = 0; steps <= pg.num_vertices(); ++steps) {
    const VertexId u = w.out_neighbor(pg, v, k);
    if (u == kNone) break;
    on[*pg.edge_between(v, u)] = true;
    v = u;
  }
  return on;
}

// Bounded faces of the region of v enclosed by its paths of labels i-1 and
// i+1, flooded from the angles between out_{i+1} and out_{i-1}.
int region_size(const PlaneGraph& pg, const SchnyderWood& w, const RotationSystem& cw, VertexId v, int i) {
  const int n = pg.num_vertices();
  std::vector<bool> barrier = path_edges(pg, w, v, prev_label(i));
  const std::vector<bool> other = path_edges(pg, w, v, next_label(i));
  for (size_t e = 0; e < barrier.size(); ++e) barrier[e] = barrier[e] || other[e];

  const std::vector<int> items = clockwise_items(pg, w, cw, v);
  const int d = static_cast<int>(items.size());
  const int start = static_cast<int>(std::find(items.begin(), items.end(), next_label(i)) - items.begin());
  std::vector<bool> in(pg.num_faces(), false);
  std::queue<FaceId> q;
  auto push = [&](FaceId f) {
    if (f == pg.outer_face() || in[f]) return;
    in[f] = true;
    q.push(f);
  };
  for (int k = start; items[k % d] != prev_label(i); ++k) {
    const VertexId b = cw[v][(k + 1) % d];
    if (cw[v][k % d] >= n || b >= n) continue;
    push(pg.face_of(pg.dart(v, b)));
  }
  int count = 0;
  while (!q.empty()) {
    const FaceId f = q.front();
    q.pop();
    ++count;
    for (DartId dd : pg.face_darts(f))
      if (!barrier[pg.dart_info(dd).edge]) push(pg.face_of(PlaneGraph::reverse(dd)));
  }
  return count;
}

// Endpoints of an H-vertex in the graph with half-edges.
std::pair<VertexId, VertexId> extended_edge(const SuspendedGraph& g, VertexId h) {
  const int m = g.graph.num_edges();
  if (h < m) return g.graph.edge(h);
  return {g.suspensions[h - m], g.graph.num_vertices() + (h - m)};
}

std::vector<Flat> trace_flats(const OrthogonalSurface& s) {
  const PlaneGraph& h = s.medial.graph.graph;
  const int nh = h.num_vertices();
  std::vector<Flat> flats;
  for (int c = 1; c <= 3; ++c) {
    std::vector<std::vector<VertexId>> adj(nh);
    for (EdgeId e = 0; e < h.num_edges(); ++e)
      if (s.edge_color[e] == c) {
        const auto [a, b] = h.edge(e);
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    std::vector<bool> removed(nh);
    for (VertexId v = 0; v < nh; ++v) removed[v] = adj[v].empty();
    const std::vector<int> comp = connected_components(adj, removed);
    std::map<int, std::vector<VertexId>> members;
    for (VertexId v = 0; v < nh; ++v)
      if (!removed[v]) members[comp[v]].push_back(v);
    for (const auto& [id, vs] : members) {
      size_t edges = 0;
      std::vector<VertexId> ends;
      for (VertexId v : vs) {
        edges += adj[v].size();
        if (adj[v].size() > 2)
          throw Error(ErrorKind::SurfaceNotRigid, "flat of color " + std::to_string(c) + " branches at saddle " +
                                                      std::to_string(v), {v});
        if (adj[v].size() == 1) ends.push_back(v);
      }
      if (edges / 2 + 1 != vs.size() || ends.size() != 2)
        throw Error(ErrorKind::SurfaceNotRigid, "flat of color " + std::to_string(c) + " is not a path", vs);
      const int lo = prev_label(c) - 1;
      const int hi = next_label(c) - 1;
      const auto& p0 = s.saddle[ends[0]];
      const auto& p1 = s.saddle[ends[1]];
      if (p1[lo] > p0[lo] || (p1[lo] == p0[lo] && p1[hi] < p0[hi])) std::swap(ends[0], ends[1]);
      Flat f;
      f.color = c;
      f.level = s.saddle[ends[0]][c - 1];
      VertexId prev = kNone;
      for (VertexId x = ends[0]; x != kNone;) {
        f.path.push_back(x);
        if (s.medial.is_half_edge(x)) f.bounded = false;
        VertexId nxt = kNone;
        for (VertexId y : adj[x])
          if (y != prev) nxt = y;
        prev = x;
        x = nxt;
      }
      flats.push_back(std::move(f));
    }
  }
  return flats;
}

}  // namespace

OrthogonalSurface surface_coordinates(const SuspendedGraph& g, const SchnyderWood& wood, const SurfaceOptions& opt) {
  const SchnyderReport rep = verify_schnyder(g, wood);
  if (!rep.ok()) throw Error(ErrorKind::ConstructionFailure, "not a Schnyder wood: " + rep.violations.front());
  const PlaneGraph& pg = g.graph;
  const int n = pg.num_vertices();
  const int m = pg.num_edges();
  const RotationSystem cw = clockwise_extended(g);

  OrthogonalSurface s;
  s.medial = medial_graph(g);
  s.vertex.resize(n);
  for (VertexId v = 0; v < n; ++v)
    for (int i = 1; i <= 3; ++i) s.vertex[v][i - 1] = region_size(pg, wood, cw, v, i);

  const double top = pg.num_faces();  // above every vertex coordinate
  s.saddle.resize(m + 3);
  for (EdgeId e = 0; e < m; ++e) {
    const auto [u, v] = pg.edge(e);
    for (int k = 0; k < 3; ++k) s.saddle[e][k] = std::max(s.vertex[u][k], s.vertex[v][k]);
  }
  for (int j = 0; j < 3; ++j) {
    const VertexId sv = g.suspensions[j];
    s.saddle[m + j] = s.vertex[sv];
    s.saddle[m + j][wood.half_edge_label(sv) - 1] = top;
  }

  const PlaneGraph& h = s.medial.graph.graph;
  s.edge_color.assign(h.num_edges(), 0);
  for (EdgeId he = 0; he < h.num_edges(); ++he) {
    const auto [a, b] = h.edge(he);
    const auto ea = extended_edge(g, a);
    const auto eb = extended_edge(g, b);
    const VertexId x = (ea.first == eb.first || ea.first == eb.second) ? ea.first : ea.second;
    const VertexId ya = ea.first == x ? ea.second : ea.first;
    const VertexId yb = eb.first == x ? eb.second : eb.first;
    const auto& r = cw[x];
    const int d = static_cast<int>(r.size());
    const int pa = static_cast<int>(std::find(r.begin(), r.end(), ya) - r.begin());
    const int pb = static_cast<int>(std::find(r.begin(), r.end(), yb) - r.begin());
    // The angle lies in the sector after the last out-edge at or before it.
    const std::vector<int> items = clockwise_items(pg, wood, cw, x);
    int k = pb == (pa + 1) % d ? pa : pb;
    while (items[k] <= 0) k = (k + d - 1) % d;
    const int sector = prev_label(items[k]);

    int shared = 0;
    int color = 0;
    for (int i = 0; i < 3; ++i)
      if (s.saddle[a][i] == s.saddle[b][i]) {
        ++shared;
        color = i + 1;
      }
    if (shared == 1) {
      if (color != sector)
        throw Error(ErrorKind::ConstructionFailure,
                    "color of angle " + std::to_string(he) + " disagrees with its sector", {a, b});
      s.edge_color[he] = color;
    } else {
      if (!opt.resolve_by_sector)
        throw Error(ErrorKind::AmbiguousFlatMembership,
                    "saddles " + std::to_string(a) + " and " + std::to_string(b) + " share " +
                        std::to_string(shared) + " coordinates",
                    {a, b});
      s.edge_color[he] = sector;
      s.resolved_by_sector.push_back(he);
    }
  }
  s.flats = trace_flats(s);
  return s;
}

bool is_antichain(const std::vector<Coord3>& pts) {
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = 0; b < pts.size(); ++b)
      if (a != b && pts[a][0] <= pts[b][0] && pts[a][1] <= pts[b][1] && pts[a][2] <= pts[b][2]) return false;
  return true;
}

RigidityReport check_rigidity(const OrthogonalSurface& s) {
  RigidityReport rep;
  for (size_t i = 0; i < s.flats.size() && rep.ok; ++i) {
    const Flat& f = s.flats[i];
    if (!f.bounded) continue;
    const int lo = prev_label(f.color) - 1;
    const int hi = next_label(f.color) - 1;
    for (size_t k = 1; k < f.path.size(); ++k) {
      const Coord3& p = s.saddle[f.path[k - 1]];
      const Coord3& q = s.saddle[f.path[k]];
      if (q[lo] > p[lo] || q[hi] < p[hi]) {
        rep.ok = false;
        rep.offending_flat = static_cast<int>(i);
        break;
      }
    }
  }
  return rep;
}

FlatAngleAssignment medial_faa(const OrthogonalSurface& s) {
  const PlaneGraph& h = s.medial.graph.graph;
  FlatAngleAssignment faa;
  for (VertexId x = 0; x < s.medial.primal_edges; ++x) {
    const auto nb = h.neighbors(x);
    const int d = static_cast<int>(nb.size());
    std::vector<int> col(d);
    for (int i = 0; i < d; ++i) col[i] = s.edge_color[*h.edge_between(x, nb[i])];
    int found = kNone;
    int count = 0;
    for (int i = 0; i < d; ++i)
      if (col[i] == col[(i + 1) % d]) {
        found = i;
        ++count;
      }
    if (count != 1)
      throw Error(ErrorKind::AmbiguousFlatMembership,
                  "saddle " + std::to_string(x) + " has " + std::to_string(count) + " pairs of equal colors", {x});
    faa.assign(x, h.angle_face(x, found));
  }
  return faa;
}

namespace {

Tile tile_of(const MedialGraph& md, FaceId hf) {
  if (hf == md.graph.graph.outer_face()) return {Tile::Kind::Enclosing, kNone};
  const FaceOrigin o = md.face_origin[hf];
  return {o.kind == FaceOrigin::Kind::Vertex ? Tile::Kind::Vertex : Tile::Kind::Face, o.id};
}

std::array<Point, 3> counterclockwise(std::array<Point, 3> t) {
  if (orient(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
  return t;
}

double area(const std::array<Point, 3>& t) { return std::abs(orient(t[0], t[1], t[2])) / 2; }

// Length of the common part of two segments lying on one line, 0 if they
// are not collinear within eps.
double overlap(Point a, Point b, Point c, Point d, double eps) {
  const double len = dist(a, b);
  if (len <= eps) return 0;
  if (std::abs(orient(a, b, c)) / len > eps || std::abs(orient(a, b, d)) / len > eps) return 0;
  const Point u = (1 / len) * (b - a);
  double lo = dot(c - a, u), hi = dot(d - a, u);
  if (lo > hi) std::swap(lo, hi);
  return std::max(0.0, std::min(len, hi) - std::max(0.0, lo));
}

double side_overlap(const std::array<Point, 3>& s, const std::array<Point, 3>& t, double eps) {
  double best = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      best = std::max(best, overlap(s[i], s[(i + 1) % 3], t[j], t[(j + 1) % 3], eps));
  return best;
}

double boundary_gap(const std::array<Point, 3>& s, const std::array<Point, 3>& t) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      best = std::min(best, point_segment_distance(s[i], t[j], t[(j + 1) % 3]));
      best = std::min(best, point_segment_distance(t[j], s[i], s[(i + 1) % 3]));
    }
  return best;
}

}  // namespace

Dissection primal_dual_representation(const SuspendedGraph& g) {
  const SchnyderWood wood = compute_schnyder_wood(g);
  const OrthogonalSurface surf = surface_coordinates(g, wood);
  const RigidityReport rig = check_rigidity(surf);
  if (!rig.ok)
    throw Error(ErrorKind::SurfaceNotRigid, "flat " + std::to_string(rig.offending_flat) + " is not monotone",
                surf.flats[rig.offending_flat].path);
  const FlatAngleAssignment faa = medial_faa(surf);
  const SuspendedGraph& h = surf.medial.graph;
  const GfaaEvaluation ev = evaluate_gfaa(h, faa);
  if (!ev.gfaa) throw Error(ErrorKind::ConstructionFailure, "medial assignment does not give an SLTR: " + ev.reason);

  Dissection d;
  d.medial = h;
  d.drawing = *ev.drawing;
  d.enclosing = counterclockwise(d.drawing.pole_positions);
  const PlaneGraph& hg = h.graph;
  const auto& theta = ev.report->theta_vf;
  for (FaceId f = 0; f < hg.num_faces(); ++f) {
    if (f == hg.outer_face()) continue;
    std::vector<Point> corners;
    for (DartId dd : hg.face_darts(f)) {
      const VertexId v = hg.dart_info(dd).tail;
      for (int i = 0; i < hg.degree(v); ++i)
        if (hg.angle_face(v, i) == f && theta[v][i] < kPi - kDefaultTolerance) corners.push_back(d.drawing.pos[v]);
    }
    if (corners.size() != 3)
      throw Error(ErrorKind::ConstructionFailure,
                  "face " + std::to_string(f) + " of the medial graph has " + std::to_string(corners.size()) +
                      " corners",
                  {f});
    d.triangles.push_back({tile_of(surf.medial, f), counterclockwise({corners[0], corners[1], corners[2]})});
  }
  std::sort(d.triangles.begin(), d.triangles.end(),
            [](const DissectionTriangle& a, const DissectionTriangle& b) { return a.tile < b.tile; });

  std::set<TileContact> contacts;
  auto add = [&](TileContact::Kind k, Tile a, Tile b) {
    if (b < a) std::swap(a, b);
    contacts.insert({k, a, b});
  };
  for (VertexId x = 0; x < hg.num_vertices(); ++x) {
    if (surf.medial.is_half_edge(x)) continue;
    // The four H-faces around an edge alternate vertex, face, vertex, face.
    const auto fs = hg.faces_around(x);
    const std::array<Tile, 4> t{tile_of(surf.medial, fs[0]), tile_of(surf.medial, fs[1]),
                                tile_of(surf.medial, fs[2]), tile_of(surf.medial, fs[3])};
    add(TileContact::Kind::Point, t[0], t[2]);
    add(TileContact::Kind::Point, t[1], t[3]);
  }
  for (EdgeId e = 0; e < hg.num_edges(); ++e) {
    const DartId dd = 2 * e;
    add(TileContact::Kind::Side, tile_of(surf.medial, hg.face_of(dd)),
        tile_of(surf.medial, hg.face_of(PlaneGraph::reverse(dd))));
  }
  d.contacts.assign(contacts.begin(), contacts.end());
  return d;
}

DissectionReport check_dissection(const SuspendedGraph& g, const Dissection& d, double tol) {
  DissectionReport rep;
  const PlaneGraph& pg = g.graph;
  const double diam = diameter(d.enclosing);
  const double eps = tol * diam;

  const size_t expected = static_cast<size_t>(pg.num_vertices() + pg.num_faces() - 1);
  std::map<Tile, std::array<Point, 3>> shape;
  for (const auto& t : d.triangles) shape[t.tile] = t.corners;
  rep.count_ok = d.triangles.size() == expected && shape.size() == expected;
  if (!rep.count_ok)
    rep.violations.push_back(std::to_string(d.triangles.size()) + " triangles, expected " + std::to_string(expected));
  shape[{Tile::Kind::Enclosing, kNone}] = d.enclosing;

  double sum = 0;
  bool positive = true;
  for (const auto& t : d.triangles) {
    sum += area(t.corners);
    positive = positive && area(t.corners) > eps * eps;
  }
  const double total = area(d.enclosing);
  rep.area_error = std::abs(sum - total) / total;
  rep.area_ok = positive && rep.area_error <= tol;
  if (!rep.area_ok) rep.violations.push_back("triangle areas do not add up to the enclosing triangle");

  rep.coloring_ok = true;
  for (auto a = shape.begin(); a != shape.end(); ++a)
    for (auto b = std::next(a); b != shape.end(); ++b) {
      if (side_overlap(a->second, b->second, eps) <= eps) continue;
      const bool a_primal = a->first.kind == Tile::Kind::Vertex;
      const bool b_primal = b->first.kind == Tile::Kind::Vertex;
      if (a_primal == b_primal) {
        rep.coloring_ok = false;
        rep.violations.push_back("two triangles of the same class share a side");
      }
    }

  rep.contacts_ok = true;
  for (const auto& c : d.contacts) {
    const auto ia = shape.find(c.a);
    const auto ib = shape.find(c.b);
    bool ok = ia != shape.end() && ib != shape.end();
    if (ok) {
      const double side = side_overlap(ia->second, ib->second, eps);
      ok = c.kind == TileContact::Kind::Side ? side > eps
                                             : side <= eps && boundary_gap(ia->second, ib->second) <= eps;
    }
    if (!ok) {
      rep.contacts_ok = false;
      rep.violations.push_back(std::string(c.kind == TileContact::Kind::Side ? "side" : "point") +
                               " contact is not realized");
    }
  }
  return rep;
}

}  // namespace sltr
