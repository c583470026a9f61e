#include "sltr/medial.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "sltr/error.hpp"

namespace sltr {

RotationSystem with_half_edges(const SuspendedGraph& g) {
  const PlaneGraph& pg = g.graph;
  const int n = pg.num_vertices();
  RotationSystem rot = pg.rotation();
  rot.resize(n + 3);
  const auto& outer = pg.face_darts(pg.outer_face());
  for (int i = 0; i < 3; ++i) {
    const VertexId s = g.suspensions[i];
    for (DartId d : outer) {
      const Dart in = pg.dart_info(d);
      if (in.head != s) continue;
      const VertexId b = pg.dart_info(pg.next_in_face(d)).head;
      auto& rs = rot[s];
      rs.insert(std::find(rs.begin(), rs.end(), b) + 1, n + i);
      break;
    }
    rot[n + i] = {s};
  }
  return rot;
}

namespace {

VertexId rot_step(const std::vector<VertexId>& r, VertexId u, int step) {
  const int deg = static_cast<int>(r.size());
  const int i = static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
  return r[((i + step) % deg + deg) % deg];
}

}  // namespace

FaceId MedialGraph::face_of_vertex(VertexId v) const {
  for (FaceId f = 0; f < static_cast<FaceId>(face_origin.size()); ++f)
    if (face_origin[f] == FaceOrigin{FaceOrigin::Kind::Vertex, v}) return f;
  return kNone;
}

FaceId MedialGraph::face_of_face(FaceId pf) const {
  for (FaceId f = 0; f < static_cast<FaceId>(face_origin.size()); ++f)
    if (face_origin[f] == FaceOrigin{FaceOrigin::Kind::Face, pf}) return f;
  return kNone;
}

MedialGraph medial_graph(const SuspendedGraph& g) {
  const PlaneGraph& pg = g.graph;
  const int n = pg.num_vertices();
  const int m = pg.num_edges();
  const RotationSystem ext = with_half_edges(g);

  // H-vertex id of the extended edge {u, v}.
  auto hid = [&](VertexId u, VertexId v) -> VertexId {
    if (u >= n) return m + (u - n);
    if (v >= n) return m + (v - n);
    return *pg.edge_between(u, v);
  };

  RotationSystem hrot(m + 3);
  for (EdgeId e = 0; e < m; ++e) {
    const auto [u, v] = pg.edge(e);
    hrot[e] = {hid(v, rot_step(ext[v], u, -1)), hid(u, rot_step(ext[u], v, +1)), hid(u, rot_step(ext[u], v, -1)),
               hid(v, rot_step(ext[v], u, +1))};
  }
  for (int i = 0; i < 3; ++i) {
    const VertexId s = g.suspensions[i];
    hrot[m + i] = {hid(s, rot_step(ext[s], n + i, +1)), hid(s, rot_step(ext[s], n + i, -1))};
  }

  const VertexId s0 = g.suspensions[0];
  const VertexId after_half = rot_step(ext[s0], n, +1);
  auto hgraph = PlaneGraph::from_rotation(std::move(hrot), {hid(s0, after_half), m});

  // Endpoints of each H-vertex in the extended graph.
  auto ends = [&](VertexId h) -> std::pair<VertexId, VertexId> {
    if (h >= m) return {g.suspensions[h - m], n + (h - m)};
    return pg.edge(h);
  };

  MedialGraph out;
  out.primal_edges = m;
  out.face_origin.resize(hgraph.num_faces());
  for (FaceId hf = 0; hf < hgraph.num_faces(); ++hf) {
    const Dart d = hgraph.dart_info(hgraph.face_darts(hf).front());
    const auto [a0, a1] = ends(d.tail);
    const auto [b0, b1] = ends(d.head);
    const VertexId x = (a0 == b0 || a0 == b1) ? a0 : a1;
    const VertexId a_other = a0 == x ? a1 : a0;
    const VertexId b_other = b0 == x ? b1 : b0;
    if (rot_step(ext[x], a_other, +1) == b_other) {
      out.face_origin[hf] = {FaceOrigin::Kind::Vertex, x};
    } else {
      // Angle from b to a at x; its face contains the dart x -> a_other
      // reversed, i.e. a_other -> x. Map to a dart of G on the same face.
      // Walk the extended face until a dart between two primal vertices.
      VertexId p = a_other, q = x;
      while (p >= n || q >= n) {
        const VertexId r = rot_step(ext[q], p, -1);
        p = q;
        q = r;
      }
      out.face_origin[hf] = {FaceOrigin::Kind::Face, pg.face_of(pg.dart(p, q))};
    }
  }
  out.graph = SuspendedGraph::make(std::move(hgraph), {m, m + 1, m + 2});
  return out;
}

bool check_almost_4_regular(const PlaneGraph& g) {
  int twos = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree(v);
    if (d == 2) {
      if (g.outer_face() == kNone || !g.vertex_on_face(v, g.outer_face())) return false;
      ++twos;
    } else if (d != 4) {
      return false;
    }
  }
  return twos == 3;
}

bool check_almost_4_regular(const SuspendedGraph& g) {
  if (!check_almost_4_regular(g.graph)) return false;
  for (VertexId s : g.suspensions)
    if (g.graph.degree(s) != 2) return false;
  return true;
}

InverseMedial invert_medial(const SuspendedGraph& h) {
  const PlaneGraph& hg = h.graph;
  if (!check_almost_4_regular(h))
    throw Error(ErrorKind::NotAlmost4Regular, "degree profile is not three 2s on the outer face plus 4s");
  if (hg.num_vertices() == 3) throw Error(ErrorKind::NotAlmost4Regular, "C3 is not the medial graph of a graph");

  // Face 2-coloring; the unbounded face is black (1).
  std::vector<int> color(hg.num_faces(), kNone);
  color[hg.outer_face()] = 1;
  std::queue<FaceId> q;
  q.push(hg.outer_face());
  while (!q.empty()) {
    const FaceId f = q.front();
    q.pop();
    for (DartId d : hg.face_darts(f)) {
      const FaceId other = hg.face_of(PlaneGraph::reverse(d));
      if (color[other] == kNone) {
        color[other] = 1 - color[f];
        q.push(other);
      } else if (color[other] == color[f]) {
        throw Error(ErrorKind::FacesNotBipartite, "faces " + std::to_string(f) + " and " + std::to_string(other) +
                                                      " share an edge and a color");
      }
    }
  }

  InverseMedial out;
  std::vector<VertexId> vertex_of(hg.num_faces(), kNone);
  for (FaceId f = 0; f < hg.num_faces(); ++f) {
    if (color[f] != 0) continue;
    vertex_of[f] = static_cast<VertexId>(out.white_face.size());
    out.white_face.push_back(f);
  }

  // The other white face at a degree-four vertex, seen from face f.
  auto across = [&](VertexId x, FaceId f) -> FaceId {
    for (FaceId g2 : hg.faces_around(x))
      if (color[g2] == 0 && g2 != f) return g2;
    throw Error(ErrorKind::FacesNotBipartite, "vertex " + std::to_string(x) + " touches a single white face twice");
  };

  RotationSystem rot(out.white_face.size());
  for (size_t i = 0; i < out.white_face.size(); ++i) {
    for (DartId d : hg.face_darts(out.white_face[i])) {
      const VertexId x = hg.dart_info(d).tail;
      if (hg.degree(x) != 4) continue;
      rot[i].push_back(vertex_of[across(x, out.white_face[i])]);
    }
  }

  std::array<VertexId, 3> sus{};
  for (int i = 0; i < 3; ++i) {
    for (FaceId f : hg.faces_around(h.suspensions[i]))
      if (color[f] == 0) sus[i] = vertex_of[f];
  }

  // Primal outer edges are the degree-four vertices on the unbounded face.
  std::set<std::pair<VertexId, VertexId>> outer_edges;
  std::pair<VertexId, VertexId> hint{kNone, kNone};
  for (DartId d : hg.face_darts(hg.outer_face())) {
    const VertexId x = hg.dart_info(d).tail;
    if (hg.degree(x) != 4) continue;
    std::vector<VertexId> ws;
    for (FaceId f : hg.faces_around(x))
      if (color[f] == 0) ws.push_back(vertex_of[f]);
    outer_edges.insert(std::minmax(ws[0], ws[1]));
    hint = {ws[0], ws[1]};
  }
  auto build = [&](std::pair<VertexId, VertexId> hnt) { return PlaneGraph::from_rotation(rot, hnt); };
  PlaneGraph g = build(hint);
  auto face_edges = [&](const PlaneGraph& pg) {
    std::set<std::pair<VertexId, VertexId>> s;
    for (DartId d : pg.face_darts(pg.outer_face())) s.insert(pg.edge(pg.dart_info(d).edge));
    return s;
  };
  if (face_edges(g) != outer_edges) g = build({hint.second, hint.first});
  out.graph = SuspendedGraph::make(std::move(g), sus);
  return out;
}

std::vector<VertexId> find_embedding_isomorphism(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_faces() != b.num_faces())
    return {};
  if (a.num_edges() == 0) return a.num_vertices() == 1 ? std::vector<VertexId>{0} : std::vector<VertexId>{};
  const DartId start = a.face_darts(a.outer_face()).front();
  for (DartId cand : b.face_darts(b.outer_face())) {
    std::vector<DartId> map(a.num_darts(), kNone);
    std::vector<VertexId> vmap(a.num_vertices(), kNone);
    std::vector<VertexId> vinv(b.num_vertices(), kNone);
    bool ok = true;
    std::queue<DartId> q;
    map[start] = cand;
    q.push(start);
    while (!q.empty() && ok) {
      const DartId d = q.front();
      q.pop();
      const VertexId ta = a.dart_info(d).tail;
      const VertexId tb = b.dart_info(map[d]).tail;
      if (vmap[ta] == kNone && vinv[tb] == kNone) {
        vmap[ta] = tb;
        vinv[tb] = ta;
      } else if (vmap[ta] != tb || vinv[tb] != ta) {
        ok = false;
        break;
      }
      const std::pair<DartId, DartId> steps[] = {{PlaneGraph::reverse(d), PlaneGraph::reverse(map[d])},
                                                 {a.next_in_face(d), b.next_in_face(map[d])}};
      for (const auto& [da, db] : steps) {
        if (map[da] == kNone) {
          map[da] = db;
          q.push(da);
        } else if (map[da] != db) {
          ok = false;
        }
      }
    }
    if (ok && b.face_of(map[start]) == b.outer_face()) return vmap;
  }
  return {};
}

bool embeddings_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
  return !find_embedding_isomorphism(a, b).empty();
}

}  // namespace sltr
