#include "sltr/pseudosegments.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "sltr/error.hpp"

namespace sltr {

bool Pseudosegment::is_interior(VertexId v) const {
  return std::find(vertices.begin() + 1, vertices.end() - 1, v) != vertices.end() - 1;
}

bool Pseudosegment::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Orders an edge class into a simple path; empty result if it is not one.
std::optional<Pseudosegment> as_path(const PlaneGraph& g, std::vector<EdgeId> edges) {
  std::map<VertexId, std::vector<EdgeId>> inc;
  for (EdgeId e : edges) {
    const auto [a, b] = g.edge(e);
    inc[a].push_back(e);
    inc[b].push_back(e);
  }
  VertexId start = kNone;
  for (const auto& [v, es] : inc) {
    if (es.size() > 2) return std::nullopt;
    if (es.size() == 1 && start == kNone) start = v;
  }
  if (start == kNone) return std::nullopt;
  Pseudosegment s;
  s.vertices.push_back(start);
  EdgeId prev = kNone;
  VertexId at = start;
  while (true) {
    EdgeId next = kNone;
    for (EdgeId e : inc[at])
      if (e != prev) next = e;
    if (next == kNone) break;
    const auto [a, b] = g.edge(next);
    at = a == at ? b : a;
    s.vertices.push_back(at);
    s.edges.push_back(next);
    prev = next;
  }
  if (s.edges.size() != edges.size()) return std::nullopt;
  return s;
}

void finalize(const PlaneGraph& g, PseudosegmentFamily& fam) {
  std::sort(fam.segments.begin(), fam.segments.end(), [](const Pseudosegment& a, const Pseudosegment& b) {
    return *std::min_element(a.edges.begin(), a.edges.end()) < *std::min_element(b.edges.begin(), b.edges.end());
  });
  fam.segment_of_edge.assign(g.num_edges(), kNone);
  std::vector<std::vector<int>> at(g.num_vertices());
  for (int i = 0; i < fam.size(); ++i) {
    for (EdgeId e : fam.segments[i].edges) fam.segment_of_edge[e] = i;
    for (VertexId v : fam.segments[i].vertices) at[v].push_back(i);
  }
  fam.contacts.clear();
  for (int i = 0; i < fam.size(); ++i) {
    const auto& s = fam.segments[i];
    for (int end = 0; end < 2; ++end) {
      const VertexId p = end == 0 ? s.front() : s.back();
      const VertexId q = end == 0 ? s.vertices[1] : s.vertices[s.vertices.size() - 2];
      for (int j : at[p]) {
        if (j == i) continue;
        const auto& t = fam.segments[j];
        Contact c{i, p, j, t.is_interior(p), 0};
        if (c.interior) {
          const size_t k = std::find(t.vertices.begin(), t.vertices.end(), p) - t.vertices.begin();
          const VertexId a = t.vertices[k - 1];
          const VertexId b = t.vertices[k + 1];
          const int deg = g.degree(p);
          const int base = g.rotation_index(p, b);
          auto pos = [&](VertexId x) { return (g.rotation_index(p, x) - base + deg) % deg; };
          c.side = pos(q) < pos(a) ? +1 : -1;
        }
        fam.contacts.push_back(c);
      }
    }
  }
  std::sort(fam.contacts.begin(), fam.contacts.end());
}

std::vector<int> class_payload(std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

PseudosegmentFamily pseudosegments_of(const SuspendedGraph& g, const FlatAngleAssignment& faa) {
  const PlaneGraph& pg = g.graph;
  Dsu dsu(pg.num_edges());
  std::vector<int> merges(pg.num_edges(), 0);
  std::vector<std::pair<EdgeId, EdgeId>> merged;
  for (const auto& [v, f] : faa.pairs()) {
    int angle = kNone;
    for (int i = 0; i < pg.degree(v); ++i)
      if (pg.angle_face(v, i) == f) {
        angle = i;
        break;
      }
    if (angle == kNone)
      throw Error(ErrorKind::InvalidAssignment,
                  "vertex " + std::to_string(v) + " is not on face " + std::to_string(f), {v, f});
    const auto nb = pg.neighbors(v);
    const EdgeId e1 = *pg.edge_between(v, nb[angle]);
    const EdgeId e2 = *pg.edge_between(v, nb[(angle + 1) % nb.size()]);
    if (e1 == e2) continue;
    merged.emplace_back(e1, e2);
    dsu.unite(e1, e2);
  }
  for (const auto& [e1, e2] : merged) ++merges[dsu.find(e1)];

  std::map<int, std::vector<EdgeId>> classes;
  for (EdgeId e = 0; e < pg.num_edges(); ++e) classes[dsu.find(e)].push_back(e);

  PseudosegmentFamily fam;
  for (auto& [root, edges] : classes) {
    if (merges[root] >= static_cast<int>(edges.size()))
      throw Error(ErrorKind::ArcClosesCycle, "flat angles close a cycle", class_payload(edges));
    auto path = as_path(pg, edges);
    if (!path) throw Error(ErrorKind::ArcTouchesSelf, "arc visits a vertex twice", class_payload(edges));
    fam.segments.push_back(std::move(*path));
  }
  finalize(pg, fam);
  return fam;
}

PseudosegmentFamily family_from_partition(const PlaneGraph& g, const std::vector<std::vector<EdgeId>>& classes) {
  std::vector<int> seen(g.num_edges(), 0);
  PseudosegmentFamily fam;
  for (const auto& edges : classes) {
    if (edges.empty()) throw Error(ErrorKind::InvalidArrangement, "empty pseudosegment");
    for (EdgeId e : edges) {
      if (e < 0 || e >= g.num_edges())
        throw Error(ErrorKind::InvalidArrangement, "edge " + std::to_string(e) + " out of range", {e});
      if (seen[e]++) throw Error(ErrorKind::InvalidArrangement, "edge " + std::to_string(e) + " used twice", {e});
    }
    auto path = as_path(g, edges);
    if (!path) throw Error(ErrorKind::InvalidArrangement, "class is not a simple path", class_payload(edges));
    fam.segments.push_back(std::move(*path));
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!seen[e]) throw Error(ErrorKind::InvalidArrangement, "edge " + std::to_string(e) + " not covered", {e});
  finalize(g, fam);
  return fam;
}

std::vector<std::string> contact_family_violations(const PseudosegmentFamily& family) {
  std::vector<std::string> out;
  for (int i = 0; i < family.size(); ++i) {
    for (int j = i + 1; j < family.size(); ++j) {
      const auto& s = family.segments[i];
      const auto& t = family.segments[j];
      std::vector<VertexId> shared;
      for (VertexId v : s.vertices)
        if (t.contains(v)) shared.push_back(v);
      const std::string pair = "segments " + std::to_string(i) + " and " + std::to_string(j);
      if (shared.size() > 1) out.push_back(pair + " share " + std::to_string(shared.size()) + " points");
      for (VertexId v : shared)
        if (s.is_interior(v) && t.is_interior(v)) out.push_back(pair + " cross at " + std::to_string(v));
    }
  }
  return out;
}

std::vector<std::pair<VertexId, std::pair<VertexId, VertexId>>> segment_neighbors(const PseudosegmentFamily& family) {
  std::vector<std::pair<VertexId, std::pair<VertexId, VertexId>>> out;
  for (const auto& s : family.segments)
    for (size_t k = 1; k + 1 < s.vertices.size(); ++k)
      out.push_back({s.vertices[k], {s.vertices[k - 1], s.vertices[k + 1]}});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

std::vector<VertexId> points_of(const PlaneGraph& g, const PseudosegmentFamily& fam, const std::vector<int>& subset,
                                bool free) {
  std::vector<bool> in_s(fam.size(), false);
  for (int i : subset) in_s[i] = true;

  // Faces reachable from the outer face without crossing an edge of S.
  std::vector<bool> reached(g.num_faces(), false);
  std::queue<FaceId> q;
  reached[g.outer_face()] = true;
  q.push(g.outer_face());
  while (!q.empty()) {
    const FaceId f = q.front();
    q.pop();
    for (DartId d : g.face_darts(f)) {
      if (in_s[fam.segment_of_edge[g.dart_info(d).edge]]) continue;
      const FaceId o = g.face_of(PlaneGraph::reverse(d));
      if (!reached[o]) {
        reached[o] = true;
        q.push(o);
      }
    }
  }

  std::vector<VertexId> out;
  for (int i : subset) {
    for (VertexId p : {fam.segments[i].front(), fam.segments[i].back()}) {
      bool interior = false;
      bool outside_segment = false;
      for (int j = 0; j < fam.size(); ++j) {
        if (!fam.segments[j].contains(p)) continue;
        if (in_s[j] && fam.segments[j].is_interior(p)) interior = true;
        if (!in_s[j]) outside_segment = true;
      }
      if (interior) continue;
      bool unbounded = false;
      for (FaceId f : g.faces_around(p)) unbounded = unbounded || reached[f];
      if (!unbounded) continue;
      if (free && !outside_segment && !g.vertex_on_face(p, g.outer_face())) continue;
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool union_connected(const PseudosegmentFamily& fam, const std::vector<int>& subset) {
  Dsu dsu(static_cast<int>(subset.size()));
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      for (VertexId v : fam.segments[subset[a]].vertices)
        if (fam.segments[subset[b]].contains(v)) {
          dsu.unite(static_cast<int>(a), static_cast<int>(b));
          break;
        }
  for (size_t a = 0; a < subset.size(); ++a)
    if (dsu.find(static_cast<int>(a)) != 0) return false;
  return true;
}

}  // namespace

std::vector<VertexId> free_points(const PlaneGraph& g, const PseudosegmentFamily& family,
                                  const std::vector<int>& subset) {
  return points_of(g, family, subset, true);
}

std::vector<VertexId> extremal_points(const PlaneGraph& g, const PseudosegmentFamily& family,
                                      const std::vector<int>& subset) {
  return points_of(g, family, subset, false);
}

CpResult check_cp(const PlaneGraph& g, const PseudosegmentFamily& family, PointKind kind, bool connected_only,
                  std::uint64_t budget) {
  CpResult r;
  const int n = family.size();
  for (int k = 2; k <= n; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (++r.subsets_checked > budget)
        throw Error(ErrorKind::BudgetExceeded, "subset enumeration exceeded " + std::to_string(budget));
      if (!connected_only || union_connected(family, idx)) {
        auto pts = points_of(g, family, idx, kind == PointKind::Free);
        if (pts.size() < 3) {
          r.ok = false;
          r.witness = idx;
          r.points = std::move(pts);
          return r;
        }
      }
      // Next combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return r;
}

}  // namespace sltr
