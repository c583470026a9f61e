#include "sltr/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "sltr/error.hpp"

namespace sltr {

namespace {

std::string vstr(VertexId v) { return std::to_string(v); }

}  // namespace

PlaneGraph PlaneGraph::from_rotation(RotationSystem rotation, std::pair<VertexId, VertexId> outer_hint) {
  PlaneGraph g;
  const int n = static_cast<int>(rotation.size());
  if (n == 0) throw Error(ErrorKind::InconsistentRotation, "empty graph");

  std::set<std::pair<VertexId, VertexId>> arcs;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : rotation[v]) {
      if (u < 0 || u >= n) throw Error(ErrorKind::InconsistentRotation, "vertex " + vstr(v) + " lists unknown neighbor " + vstr(u));
      if (u == v) throw Error(ErrorKind::InconsistentRotation, "self loop at " + vstr(v));
      if (!arcs.emplace(v, u).second)
        throw Error(ErrorKind::InconsistentRotation, "repeated neighbor " + vstr(u) + " at " + vstr(v));
    }
  }
  for (const auto& [v, u] : arcs) {
    if (!arcs.contains({u, v}))
      throw Error(ErrorKind::InconsistentRotation, vstr(v) + " lists " + vstr(u) + " but not conversely", {v, u});
    if (v < u) g.edges_.emplace_back(v, u);
  }

  g.rotation_ = std::move(rotation);
  if (g.edges_.empty() && n > 1) throw Error(ErrorKind::Disconnected, "graph has no edges");
  auto comp = connected_components(g.rotation_);
  if (std::any_of(comp.begin(), comp.end(), [](int c) { return c != 0; }))
    throw Error(ErrorKind::Disconnected, "rotation system describes a disconnected graph");

  const int m = g.num_edges();
  g.next_.assign(2 * m, kNone);
  for (DartId d = 0; d < 2 * m; ++d) {
    const auto [u, v, e] = g.dart_info(d);
    const int i = g.rotation_index(v, u);
    const int deg = g.degree(v);
    const VertexId w = g.rotation_[v][(i + deg - 1) % deg];
    g.next_[d] = g.dart(v, w);
  }

  g.face_of_.assign(2 * m, kNone);
  for (DartId d = 0; d < 2 * m; ++d) {
    if (g.face_of_[d] != kNone) continue;
    const FaceId f = static_cast<FaceId>(g.faces_.size());
    g.faces_.emplace_back();
    DartId cur = d;
    do {
      g.face_of_[cur] = f;
      g.faces_[f].push_back(cur);
      cur = g.next_[cur];
    } while (cur != d);
  }

  if (n - m + g.num_faces() != 2)
    throw Error(ErrorKind::NonPlanarRotation, "rotation system is not a plane embedding (Euler characteristic " +
                                                  std::to_string(n - m + g.num_faces()) + ")");

  if (m == 0) {
    g.outer_face_ = kNone;
    return g;
  }
  const auto [hu, hv] = outer_hint;
  if (hu < 0 || hu >= n || hv < 0 || hv >= n || !g.adjacent(hu, hv))
    throw Error(ErrorKind::InconsistentRotation, "outer face hint " + vstr(hu) + "->" + vstr(hv) + " is not an edge");
  g.outer_face_ = g.face_of(g.dart(hu, hv));
  return g;
}

std::optional<EdgeId> PlaneGraph::edge_between(VertexId u, VertexId v) const {
  if (u == v || u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  auto key = std::minmax(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair<VertexId, VertexId>(key.first, key.second));
  if (it == edges_.end() || *it != std::pair<VertexId, VertexId>(key.first, key.second)) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Dart PlaneGraph::dart_info(DartId d) const {
  const auto [a, b] = edges_[d / 2];
  return (d & 1) ? Dart{b, a, d / 2} : Dart{a, b, d / 2};
}

DartId PlaneGraph::dart(VertexId u, VertexId v) const {
  auto e = edge_between(u, v);
  if (!e) throw Error(ErrorKind::InconsistentRotation, "no edge " + vstr(u) + "-" + vstr(v));
  return 2 * *e + (u < v ? 0 : 1);
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  out.reserve(faces_[f].size());
  for (DartId d : faces_[f]) out.push_back(dart_info(d).tail);
  return out;
}

int PlaneGraph::rotation_index(VertexId v, VertexId u) const {
  const auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end()) throw Error(ErrorKind::InconsistentRotation, vstr(u) + " is not a neighbor of " + vstr(v));
  return static_cast<int>(it - rot.begin());
}

FaceId PlaneGraph::angle_face(VertexId v, int i) const { return face_of(dart(v, rotation_[v][i])); }

std::vector<FaceId> PlaneGraph::faces_around(VertexId v) const {
  std::vector<FaceId> out;
  for (int i = 0; i < degree(v); ++i) out.push_back(angle_face(v, i));
  return out;
}

bool PlaneGraph::vertex_on_face(VertexId v, FaceId f) const {
  for (DartId d : faces_[f])
    if (dart_info(d).tail == v) return true;
  return false;
}

std::vector<VertexId> PlaneGraph::canonical_face_walk(FaceId f) const {
  auto walk = face_vertices(f);
  std::vector<VertexId> best = walk;
  for (size_t s = 1; s < walk.size(); ++s) {
    std::rotate(walk.begin(), walk.begin() + 1, walk.end());
    if (walk < best) best = walk;
  }
  return best;
}

std::optional<FaceId> PlaneGraph::find_face(std::span<const VertexId> walk) const {
  std::vector<VertexId> key(walk.begin(), walk.end());
  if (key.empty()) return std::nullopt;
  auto canon = key;
  for (size_t s = 1; s < key.size(); ++s) {
    std::rotate(key.begin(), key.begin() + 1, key.end());
    if (key < canon) canon = key;
  }
  for (FaceId f = 0; f < num_faces(); ++f)
    if (face_size(f) == static_cast<int>(canon.size()) && canonical_face_walk(f) == canon) return f;
  return std::nullopt;
}

SuspendedGraph SuspendedGraph::make(PlaneGraph graph, std::array<VertexId, 3> suspensions) {
  const auto& [a, b, c] = suspensions;
  if (a == b || b == c || a == c) throw Error(ErrorKind::InvalidSuspensions, "suspensions must be distinct");
  for (VertexId s : suspensions) {
    if (s < 0 || s >= graph.num_vertices())
      throw Error(ErrorKind::InvalidSuspensions, "unknown suspension vertex " + vstr(s));
    if (graph.outer_face() == kNone || !graph.vertex_on_face(s, graph.outer_face()))
      throw Error(ErrorKind::InvalidSuspensions, "suspension " + vstr(s) + " is not on the outer face");
  }
  return SuspendedGraph{std::move(graph), suspensions};
}

bool SuspendedGraph::suspensions_clockwise() const {
  const auto walk = graph.face_vertices(graph.outer_face());
  auto pos = [&](VertexId v) { return static_cast<int>(std::find(walk.begin(), walk.end(), v) - walk.begin()); };
  const int n = static_cast<int>(walk.size());
  const int p0 = pos(suspensions[0]);
  const int p1 = (pos(suspensions[1]) - p0 + n) % n;
  const int p2 = (pos(suspensions[2]) - p0 + n) % n;
  return p1 < p2;
}

std::vector<int> connected_components(const RotationSystem& adjacency, const std::vector<bool>& removed) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> comp(n, kNone);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != kNone || (!removed.empty() && removed[s])) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : adjacency[v]) {
        if (comp[u] != kNone || (!removed.empty() && removed[u])) continue;
        comp[u] = next;
        q.push(u);
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace sltr
