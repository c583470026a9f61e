#include "sltr/outline.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>

#include "sltr/error.hpp"

namespace sltr {

namespace {

constexpr int kMaxBits = 256;
using Bits = std::bitset<kMaxBits>;

struct Fill {
  std::vector<bool> edge_in;
  std::vector<bool> face_in;
  std::vector<VertexId> boundary;
  std::vector<VertexId> vertices;
};

// Everything enclosed by the subgraph: faces not reachable from the outer
// face without crossing it, and the edges between two such faces.
Fill fill(const PlaneGraph& g, const std::vector<bool>& sub) {
  Fill out;
  std::vector<bool> outside(g.num_faces(), false);
  std::queue<FaceId> q;
  outside[g.outer_face()] = true;
  q.push(g.outer_face());
  while (!q.empty()) {
    const FaceId f = q.front();
    q.pop();
    for (DartId d : g.face_darts(f)) {
      if (sub[g.dart_info(d).edge]) continue;
      const FaceId o = g.face_of(PlaneGraph::reverse(d));
      if (!outside[o]) {
        outside[o] = true;
        q.push(o);
      }
    }
  }
  out.face_in.resize(g.num_faces());
  for (FaceId f = 0; f < g.num_faces(); ++f) out.face_in[f] = !outside[f];
  out.edge_in = sub;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!outside[g.face_of(2 * e)] && !outside[g.face_of(2 * e + 1)]) out.edge_in[e] = true;
  std::vector<bool> vin(g.num_vertices(), false);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!out.edge_in[e]) continue;
    vin[g.edge(e).first] = vin[g.edge(e).second] = true;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!vin[v]) continue;
    out.vertices.push_back(v);
    for (FaceId f : g.faces_around(v))
      if (outside[f]) {
        out.boundary.push_back(v);
        break;
      }
  }
  return out;
}

bool is_path_region(const PlaneGraph& g, const Fill& f) {
  if (std::find(f.face_in.begin(), f.face_in.end(), true) != f.face_in.end()) return false;
  // A tree (no enclosed faces) with maximum degree two.
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (f.edge_in[e]) {
      ++deg[g.edge(e).first];
      ++deg[g.edge(e).second];
    }
  return *std::max_element(deg.begin(), deg.end()) <= 2;
}

bool subgraph_connected(const PlaneGraph& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) return false;
  RotationSystem adj(g.num_vertices());
  std::vector<bool> used(g.num_vertices(), true);
  for (EdgeId e : edges) {
    const auto [a, b] = g.edge(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
    used[a] = used[b] = false;
  }
  const auto comp = connected_components(adj, used);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!used[v] && comp[v] != comp[g.edge(edges[0]).first]) return false;
  return true;
}

// Outer walk of the subgraph given by `sub`, traced with the rotation
// restricted to it, starting from a dart that borders an outside face.
std::vector<VertexId> outer_walk(const PlaneGraph& g, const std::vector<bool>& sub, const std::vector<bool>& face_in) {
  RotationSystem rot(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId u : g.neighbors(v))
      if (sub[*g.edge_between(v, u)]) rot[v].push_back(u);
  DartId start = kNone;
  for (DartId d = 0; d < g.num_darts() && start == kNone; ++d)
    if (sub[g.dart_info(d).edge] && !face_in[g.face_of(d)]) start = d;
  std::vector<VertexId> walk;
  VertexId u = g.dart_info(start).tail, v = g.dart_info(start).head;
  const VertexId u0 = u, v0 = v;
  do {
    walk.push_back(u);
    const auto& r = rot[v];
    const int deg = static_cast<int>(r.size());
    const int i = static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
    const VertexId w = r[(i - 1 + deg) % deg];
    u = v;
    v = w;
  } while (u != u0 || v != v0);
  return walk;
}

std::vector<VertexId> corners_of(const SuspendedGraph& sg, const std::vector<VertexId>& boundary,
                                 const std::vector<bool>& edge_in, const std::vector<bool>& face_in,
                                 const FlatAngleAssignment& faa) {
  const PlaneGraph& g = sg.graph;
  std::vector<VertexId> out;
  for (VertexId v : boundary) {
    if (sg.is_suspension(v)) {
      out.push_back(v);
      continue;
    }
    bool edge_out = false;
    for (VertexId u : g.neighbors(v)) edge_out = edge_out || !edge_in[*g.edge_between(v, u)];
    if (!edge_out) continue;
    const FaceId f = faa.face_of(v);
    if (f == kNone || !face_in[f]) out.push_back(v);
  }
  return out;
}

void check_size(const PlaneGraph& g) {
  if (g.num_edges() > kMaxBits || g.num_faces() > kMaxBits)
    throw Error(ErrorKind::BudgetExceeded, "outline enumeration is limited to 256 edges and faces");
}

}  // namespace

OutlineCycle outline_of(const PlaneGraph& g, const std::vector<EdgeId>& edges) {
  if (!subgraph_connected(g, edges)) throw Error(ErrorKind::Disconnected, "outline of a disconnected subgraph");
  std::vector<bool> sub(g.num_edges(), false);
  for (EdgeId e : edges) sub[e] = true;
  const Fill f = fill(g, sub);
  OutlineCycle out;
  out.source_edges = edges;
  std::sort(out.source_edges.begin(), out.source_edges.end());
  out.source_edges.erase(std::unique(out.source_edges.begin(), out.source_edges.end()), out.source_edges.end());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (f.edge_in[e]) out.interior_edges.push_back(e);
  for (FaceId x = 0; x < g.num_faces(); ++x)
    if (f.face_in[x]) out.interior_faces.push_back(x);
  out.interior_vertices = f.vertices;
  out.boundary = f.boundary;
  out.is_path = is_path_region(g, f);
  out.walk = outer_walk(g, sub, f.face_in);
  return out;
}

std::vector<VertexId> convex_corners(const SuspendedGraph& g, const OutlineCycle& gamma,
                                     const FlatAngleAssignment& faa) {
  std::vector<bool> edge_in(g.graph.num_edges(), false), face_in(g.graph.num_faces(), false);
  for (EdgeId e : gamma.interior_edges) edge_in[e] = true;
  for (FaceId f : gamma.interior_faces) face_in[f] = true;
  return corners_of(g, gamma.boundary, edge_in, face_in, faa);
}

OutlineCatalog OutlineCatalog::build(const PlaneGraph& g, CoStarMode mode, std::uint64_t budget) {
  check_size(g);
  OutlineCatalog cat;
  cat.mode_ = mode;
  std::unordered_set<Bits> seen_regions;
  const int m = g.num_edges();

  auto tick = [&] {
    if (++cat.visited_ > budget)
      throw Error(ErrorKind::BudgetExceeded, "outline enumeration exceeded " + std::to_string(budget));
  };
  auto emit = [&](const Bits& s) {
    std::vector<bool> sub(m);
    for (int e = 0; e < m; ++e) sub[e] = s[e];
    Fill f = fill(g, sub);
    Bits key;
    for (int e = 0; e < m; ++e) key[e] = f.edge_in[e];
    if (!seen_regions.insert(key).second) return;
    Region r;
    r.is_path = is_path_region(g, f);
    r.edge_in = std::move(f.edge_in);
    r.face_in = std::move(f.face_in);
    for (int e = 0; e < m; ++e)
      if (r.edge_in[e]) r.edges.push_back(e);
    r.boundary = std::move(f.boundary);
    cat.regions_.push_back(std::move(r));
  };

  // Edges sharing an endpoint with e.
  std::vector<std::vector<EdgeId>> touching(m);
  for (EdgeId e = 0; e < m; ++e) {
    for (VertexId x : {g.edge(e).first, g.edge(e).second})
      for (VertexId y : g.neighbors(x)) {
        const EdgeId f = *g.edge_between(x, y);
        if (f != e) touching[e].push_back(f);
      }
  }

  if (mode == CoStarMode::Full) {
    // Connected edge sets with minimum edge e0, each produced once: a set
    // grows only through the extension list, and an extension skipped at
    // one level stays excluded for the later siblings.
    std::function<void(EdgeId, const Bits&, std::vector<EdgeId>, Bits)> grow =
        [&](EdgeId e0, const Bits& s, std::vector<EdgeId> ext, Bits seen) {
          tick();
          emit(s);
          for (size_t i = 0; i < ext.size(); ++i) {
            const EdgeId e = ext[i];
            std::vector<EdgeId> next(ext.begin() + i + 1, ext.end());
            Bits seen2 = seen;
            for (EdgeId f : touching[e])
              if (f > e0 && !seen2[f]) {
                seen2.set(f);
                next.push_back(f);
              }
            Bits s2 = s;
            s2.set(e);
            grow(e0, s2, std::move(next), seen2);
          }
        };
    for (EdgeId e0 = 0; e0 < m; ++e0) {
      Bits s, seen;
      s.set(e0);
      seen.set(e0);
      std::vector<EdgeId> ext;
      for (EdgeId f : touching[e0])
        if (f > e0 && !seen[f]) {
          seen.set(f);
          ext.push_back(f);
        }
      grow(e0, s, ext, seen);
    }
  } else {
    // Simple cycles through their smallest vertex.
    std::unordered_set<Bits> cycles;
    std::vector<bool> on_path(g.num_vertices(), false);
    std::function<void(VertexId, VertexId, Bits, int)> dfs = [&](VertexId s, VertexId v, Bits edges, int len) {
      tick();
      for (VertexId u : g.neighbors(v)) {
        const EdgeId e = *g.edge_between(v, u);
        if (u == s && len >= 2 && !edges[e]) {
          Bits c = edges;
          c.set(e);
          if (cycles.insert(c).second) emit(c);
        } else if (u > s && !on_path[u]) {
          on_path[u] = true;
          Bits next = edges;
          next.set(e);
          dfs(s, u, next, len + 1);
          on_path[u] = false;
        }
      }
    };
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
      on_path[s] = true;
      dfs(s, s, Bits{}, 0);
      on_path[s] = false;
    }
  }

  std::sort(cat.regions_.begin(), cat.regions_.end(), [](const Region& a, const Region& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return cat;
}

CoStarResult check_co_star(const OutlineCatalog& catalog, const SuspendedGraph& g, const FlatAngleAssignment& faa) {
  CoStarResult r;
  for (const auto& region : catalog.regions()) {
    if (region.is_path) continue;
    ++r.regions_checked;
    auto corners = corners_of(g, region.boundary, region.edge_in, region.face_in, faa);
    if (corners.size() >= 3) continue;
    r.ok = false;
    r.witness = outline_of(g.graph, region.edges);
    r.witness_corners = std::move(corners);
    return r;
  }
  return r;
}

CoStarResult check_co_star(const SuspendedGraph& g, const FlatAngleAssignment& faa, CoStarMode mode,
                           std::uint64_t budget) {
  return check_co_star(OutlineCatalog::build(g.graph, mode, budget), g, faa);
}

}  // namespace sltr
