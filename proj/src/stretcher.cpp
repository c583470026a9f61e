#include "sltr/stretcher.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "sltr/connectivity.hpp"
#include "sltr/error.hpp"

namespace sltr {

namespace {

// Maximal stretches of one pseudosegment along the walk of face f, as
// lists of darts. A degree-one vertex ends a stretch.
std::vector<std::vector<DartId>> face_runs(const PlaneGraph& g, const std::vector<int>& class_of_edge, FaceId f) {
  const auto& darts = g.face_darts(f);
  const int k = static_cast<int>(darts.size());
  auto breaks_before = [&](int i) {
    const DartId prev = darts[(i + k - 1) % k];
    const DartId cur = darts[i];
    return class_of_edge[g.dart_info(prev).edge] != class_of_edge[g.dart_info(cur).edge] ||
           g.degree(g.dart_info(cur).tail) == 1;
  };
  int start = kNone;
  for (int i = 0; i < k && start == kNone; ++i)
    if (breaks_before(i)) start = i;
  if (start == kNone) return {std::vector<DartId>(darts.begin(), darts.end())};
  std::vector<std::vector<DartId>> runs;
  for (int j = 0; j < k; ++j) {
    const int i = (start + j) % k;
    if (breaks_before(i)) runs.emplace_back();
    runs.back().push_back(darts[i]);
  }
  return runs;
}

using EdgeKey = std::pair<VertexId, VertexId>;
EdgeKey key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

// Rotation system under construction with a pseudosegment class per edge.
struct Builder {
  RotationSystem rot;
  std::map<EdgeKey, int> cls;

  VertexId add_vertex() {
    rot.emplace_back();
    return static_cast<VertexId>(rot.size() - 1);
  }
  void replace(VertexId v, VertexId old_nb, VertexId new_nb) {
    *std::find(rot[v].begin(), rot[v].end(), old_nb) = new_nb;
  }
  // Splits edge x-y with a new vertex p, same class.
  VertexId subdivide(VertexId x, VertexId y) {
    const VertexId p = add_vertex();
    const int c = cls.at(key(x, y));
    cls.erase(key(x, y));
    replace(x, y, p);
    replace(y, x, p);
    rot[p] = {y, x};
    cls[key(x, p)] = c;
    cls[key(p, y)] = c;
    return p;
  }
  // Places `nbs` right after `after` in the counterclockwise rotation of v.
  void insert_after(VertexId v, VertexId after, const std::vector<VertexId>& nbs) {
    auto it = std::find(rot[v].begin(), rot[v].end(), after);
    rot[v].insert(it + 1, nbs.begin(), nbs.end());
  }
  void connect_class(VertexId a, VertexId b, int c) {
    if (!cls.emplace(key(a, b), c).second)
      throw Error(ErrorKind::ConstructionFailure,
                  "augmentation would double edge " + std::to_string(a) + "-" + std::to_string(b), {a, b});
  }
};

// A hub of a region: a point on its boundary joined to the neighboring hubs
// and the triangulation point. `forward` and `back` are its neighbors along
// the boundary walk (equal for a free end).
struct Hub {
  VertexId v;
  VertexId forward;
  VertexId back;
};

struct ProtectionRequest {
  VertexId tail, head;  // dart of the base-plus-delta graph
  int region;
  int slot;  // index in the region's hub list
};

}  // namespace

PseudosegmentArrangement PseudosegmentArrangement::make(PlaneGraph graph,
                                                        const std::vector<std::vector<EdgeId>>& classes) {
  PseudosegmentArrangement a;
  a.family = family_from_partition(graph, classes);
  const auto violations = contact_family_violations(a.family);
  if (!violations.empty()) throw Error(ErrorKind::InvalidArrangement, violations.front());
  a.graph = std::move(graph);
  return a;
}

std::vector<int> PseudosegmentArrangement::region_sides() const {
  std::vector<int> sides(graph.num_faces());
  for (FaceId f = 0; f < graph.num_faces(); ++f)
    sides[f] = static_cast<int>(face_runs(graph, family.segment_of_edge, f).size());
  return sides;
}

StretchCheck check_stretchable(const PseudosegmentArrangement& a, std::uint64_t budget) {
  const CpResult r = check_cp(a.graph, a.family, PointKind::Extremal, false, budget);
  return {r.ok, r.witness, r.points};
}

AugmentedArrangement augment(const PseudosegmentArrangement& a, const AugmentOptions& opt) {
  const StretchCheck chk = check_stretchable(a);
  if (!chk.ok) throw Error(ErrorKind::NotStretchable, "a subset has fewer than three extremal points", chk.witness);

  const PlaneGraph& g = a.graph;
  const int n = g.num_vertices();
  const int base_classes = a.family.size();
  Builder b;
  b.rot = g.rotation();
  for (EdgeId e = 0; e < g.num_edges(); ++e) b.cls[g.edge(e)] = a.family.segment_of_edge[e];

  // Extremal points of the whole family in outer walk order.
  std::vector<int> all(a.family.size());
  for (int i = 0; i < a.family.size(); ++i) all[i] = i;
  const std::vector<VertexId> ext = extremal_points(g, a.family, all);
  const auto& outer = g.face_darts(g.outer_face());
  std::vector<VertexId> order;
  std::map<VertexId, std::pair<VertexId, VertexId>> outer_angle;  // x -> (walk predecessor, walk successor)
  for (size_t i = 0; i < outer.size(); ++i) {
    const Dart d = g.dart_info(outer[i]);
    if (!std::binary_search(ext.begin(), ext.end(), d.tail) || outer_angle.count(d.tail)) continue;
    const Dart in = g.dart_info(outer[(i + outer.size() - 1) % outer.size()]);
    outer_angle[d.tail] = {in.tail, d.head};
    order.push_back(d.tail);
  }

  // Enclosing triangle: corners, then the extremal points split into three
  // consecutive runs, a spacer between any two consecutive points of a side.
  const std::array<VertexId, 3> corner{b.add_vertex(), b.add_vertex(), b.add_vertex()};
  const int k = static_cast<int>(order.size());
  std::vector<VertexId> cycle;  // clockwise
  std::array<int, 3> delta_class{base_classes, base_classes + 1, base_classes + 2};
  std::vector<int> class_of_cycle_edge;
  size_t next = 0;
  for (int j = 0; j < 3; ++j) {
    const int size = k / 3 + (j < k % 3 ? 1 : 0);
    cycle.push_back(corner[j]);
    for (int t = 0; t < size; ++t) {
      const VertexId s = b.add_vertex();
      cycle.push_back(s);
      class_of_cycle_edge.push_back(delta_class[j]);
      class_of_cycle_edge.push_back(delta_class[j]);
      cycle.push_back(order[next++]);
    }
    const VertexId s = b.add_vertex();
    cycle.push_back(s);
    class_of_cycle_edge.push_back(delta_class[j]);
    class_of_cycle_edge.push_back(delta_class[j]);
  }
  const int cn = static_cast<int>(cycle.size());
  for (int i = 0; i < cn; ++i) {
    const VertexId v = cycle[i];
    const VertexId p = cycle[(i + cn - 1) % cn];
    const VertexId q = cycle[(i + 1) % cn];
    b.connect_class(v, q, class_of_cycle_edge[i]);
    if (v >= n) {
      b.rot[v] = {q, p};
    } else {
      // Into the outer angle: ccw w, q, p, u for walk u -> v -> w.
      b.insert_after(v, outer_angle.at(v).second, {q, p});
    }
  }

  const PlaneGraph g1 = PlaneGraph::from_rotation(b.rot, {cycle[0], cycle[1]});
  std::vector<int> class1(g1.num_edges());
  for (EdgeId e = 0; e < g1.num_edges(); ++e) class1[e] = b.cls.at(g1.edge(e));
  const std::set<int> delta_set(delta_class.begin(), delta_class.end());

  // Hubs of every region that needs them.
  std::vector<std::vector<Hub>> hubs;
  std::vector<ProtectionRequest> requests;
  for (FaceId f = 0; f < g1.num_faces(); ++f) {
    if (f == g1.outer_face()) continue;
    const auto runs = face_runs(g1, class1, f);
    if (runs.size() < 2)
      throw Error(ErrorKind::ConstructionFailure, "region " + std::to_string(f) + " has fewer than two sides");
    bool free_end = false, on_delta = false;
    for (const auto& r : runs) {
      free_end = free_end || g1.degree(g1.dart_info(r.back()).head) == 1;
      on_delta = on_delta || delta_set.count(class1[g1.dart_info(r.front()).edge]);
    }
    if (runs.size() == 3 && !free_end && !on_delta && !opt.protect_all) continue;
    const int region = static_cast<int>(hubs.size());
    hubs.emplace_back();
    for (const auto& r : runs) {
      const Dart first = g1.dart_info(r.front());
      const Dart last = g1.dart_info(r.back());
      if (g1.degree(first.tail) == 1) continue;  // hub added by the run ending there
      if (g1.degree(last.head) == 1) {
        hubs.back().push_back({last.head, last.tail, last.tail});
      } else if (delta_set.count(class1[first.edge])) {
        // Two darts around the spacer of this piece of the triangle.
        const Dart second = g1.dart_info(r[1]);
        hubs.back().push_back({first.head, second.head, first.tail});
      } else {
        const Dart mid = g1.dart_info(r[r.size() / 2]);
        requests.push_back({mid.tail, mid.head, region, static_cast<int>(hubs.back().size())});
        hubs.back().push_back({kNone, kNone, kNone});
      }
    }
  }

  // Protection points; an edge asked for on both sides gets two.
  std::map<EdgeKey, std::vector<const ProtectionRequest*>> by_edge;
  for (const auto& r : requests) by_edge[key(r.tail, r.head)].push_back(&r);
  AugmentedArrangement aug;
  for (const auto& [e, rs] : by_edge) {
    const VertexId x = rs[0]->tail;
    const VertexId y = rs[0]->head;
    const VertexId p = b.subdivide(x, y);
    aug.protection_points.push_back(p);
    if (rs.size() == 1) {
      hubs[rs[0]->region][rs[0]->slot] = {p, y, x};
    } else {
      const VertexId p2 = b.subdivide(p, y);
      aug.protection_points.push_back(p2);
      hubs[rs[0]->region][rs[0]->slot] = {p, p2, x};
      hubs[rs[1]->region][rs[1]->slot] = {p2, p, y};
    }
  }

  // Hub cycles and triangulation points.
  int next_class = base_classes + 3;
  for (const auto& hs : hubs) {
    const int h = static_cast<int>(hs.size());
    VertexId t = kNone;
    if (h >= 3) {
      t = b.add_vertex();
      aug.triangulation_points.push_back(t);
    }
    for (int i = 0; i < h; ++i) {
      const Hub& cur = hs[i];
      const VertexId nxt = hs[(i + 1) % h].v;
      const VertexId prv = hs[(i + h - 1) % h].v;
      std::vector<VertexId> nbs{nxt};
      if (t != kNone) nbs.push_back(t);
      if (prv != nxt) nbs.push_back(prv);
      b.insert_after(cur.v, cur.forward, nbs);
      if (i + 1 < h || h > 2) b.connect_class(cur.v, nxt, next_class++);
      if (t != kNone) {
        b.rot[t].push_back(cur.v);
        b.connect_class(cur.v, t, next_class++);
      }
    }
  }

  PlaneGraph g2 = PlaneGraph::from_rotation(b.rot, {cycle[0], cycle[1]});
  std::vector<std::vector<EdgeId>> classes(next_class);
  std::vector<int> class2(g2.num_edges());
  for (EdgeId e = 0; e < g2.num_edges(); ++e) {
    class2[e] = b.cls.at(g2.edge(e));
    classes[class2[e]].push_back(e);
  }
  aug.base = a;
  aug.family = family_from_partition(g2, classes);
  const auto violations = contact_family_violations(aug.family);
  if (!violations.empty()) throw Error(ErrorKind::ConstructionFailure, "augmented family: " + violations.front());
  aug.graph = SuspendedGraph::make(std::move(g2), corner);
  for (int i = 0; i < aug.family.size(); ++i) {
    const int c = class2[aug.family.segments[i].edges.front()];
    aug.original_segment.push_back(c < base_classes ? c : kNone);
    for (int j = 0; j < 3; ++j)
      if (c == delta_class[j]) aug.delta[j] = i;
  }
  aug.original_vertex.assign(aug.graph.graph.num_vertices(), kNone);
  for (VertexId v = 0; v < n; ++v) aug.original_vertex[v] = v;
  const Dart od = g.dart_info(outer.front());
  aug.base_outer = {od.tail, od.head};

  const PlaneGraph& pg = aug.graph.graph;
  for (FaceId f = 0; f < pg.num_faces(); ++f)
    if (face_runs(pg, aug.family.segment_of_edge, f).size() != 3)
      throw Error(ErrorKind::ConstructionFailure,
                  "augmented region " + std::to_string(f) + " is not bounded by three pseudosegments", {f});
  return aug;
}

PseudosegmentArrangement strip(const AugmentedArrangement& aug) {
  const PlaneGraph& pg = aug.graph.graph;
  const auto& fam = aug.family;
  const int n = static_cast<int>(std::count_if(aug.original_vertex.begin(), aug.original_vertex.end(),
                                               [](VertexId v) { return v != kNone; }));
  auto base_class = [&](VertexId x, VertexId y) { return aug.original_segment[fam.segment_of_edge[*pg.edge_between(x, y)]]; };

  RotationSystem rot(n);
  for (VertexId v = 0; v < pg.num_vertices(); ++v) {
    const VertexId ov = aug.original_vertex[v];
    if (ov == kNone) continue;
    for (VertexId u : pg.neighbors(v)) {
      if (base_class(v, u) == kNone) continue;
      // Walk over protection points to the next base vertex.
      VertexId prev = v, cur = u;
      while (aug.original_vertex[cur] == kNone) {
        VertexId step = kNone;
        for (VertexId w : pg.neighbors(cur))
          if (w != prev && base_class(cur, w) == base_class(v, u)) step = w;
        prev = cur;
        cur = step;
      }
      rot[ov].push_back(aug.original_vertex[cur]);
    }
  }
  PlaneGraph g = PlaneGraph::from_rotation(std::move(rot), aug.base_outer);

  std::vector<std::vector<EdgeId>> classes(aug.base.family.size());
  for (int i = 0; i < fam.size(); ++i) {
    const int c = aug.original_segment[i];
    if (c == kNone) continue;
    std::vector<VertexId> path;
    for (VertexId v : fam.segments[i].vertices)
      if (aug.original_vertex[v] != kNone) path.push_back(aug.original_vertex[v]);
    for (size_t j = 1; j < path.size(); ++j) classes[c].push_back(*g.edge_between(path[j - 1], path[j]));
  }
  return PseudosegmentArrangement::make(std::move(g), classes);
}

bool same_arrangement(const PseudosegmentArrangement& a, const PseudosegmentArrangement& b) {
  if (a.graph.rotation() != b.graph.rotation()) return false;
  if (a.graph.canonical_face_walk(a.graph.outer_face()) != b.graph.canonical_face_walk(b.graph.outer_face()))
    return false;
  if (a.family.size() != b.family.size()) return false;
  for (int i = 0; i < a.family.size(); ++i)
    if (a.family.segments[i].vertices != b.family.segments[i].vertices) return false;
  return true;
}

std::vector<Contact> geometric_contacts(const PseudosegmentFamily& family, const std::vector<Point>& pos,
                                        double eps) {
  std::vector<Contact> out;
  for (int i = 0; i < family.size(); ++i) {
    const auto& s = family.segments[i];
    for (int end = 0; end < 2; ++end) {
      const VertexId p = end == 0 ? s.front() : s.back();
      const VertexId q = end == 0 ? s.vertices[1] : s.vertices[s.vertices.size() - 2];
      for (int j = 0; j < family.size(); ++j) {
        if (j == i) continue;
        const Point a = pos[family.segments[j].front()];
        const Point b = pos[family.segments[j].back()];
        if (point_segment_distance(pos[p], a, b) > eps) continue;
        const bool interior = dist(pos[p], a) > eps && dist(pos[p], b) > eps;
        const int side = interior ? (orient(a, b, pos[q]) > 0 ? +1 : -1) : 0;
        out.push_back({i, p, j, interior, side});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

StretchResult stretch(const PseudosegmentArrangement& a, const HarmonicWeights& w, double tol) {
  HarmonicWeights weights;
  weights.lambda = w.lambda;
  std::optional<StretchResult> res;
  std::string why;
  for (bool all : {false, true}) {
    AugmentedArrangement aug = augment(a, {all});
    const HarmonicSystem sys = assemble(aug.graph, aug.family, weights, oriented_poles(aug.graph));
    if (!check_solvability(sys)) {
      why = "harmonic system of the augmented family is not solvable";
      continue;
    }
    Drawing d = solve(sys);
    VerificationReport rep = verify_drawing(aug.graph, d, aug.family, tol);
    if (!rep.all_pass()) {
      for (const auto& c : rep.checks)
        if (!c.pass) why = "augmented drawing fails " + c.name;
      continue;
    }
    res.emplace();
    res->augmented = std::move(aug);
    res->augmented_drawing = std::move(d);
    res->report = std::move(rep);
    res->protect_all_used = all;
    break;
  }
  if (!res) throw Error(ErrorKind::ConstructionFailure, why);

  StretchResult& r = *res;
  const int n = a.graph.num_vertices();
  r.pos.assign(r.augmented_drawing.pos.begin(), r.augmented_drawing.pos.begin() + n);
  const double diam = diameter(r.augmented_drawing.pole_positions);
  for (const auto& s : a.family.segments)
    for (VertexId v : s.vertices)
      r.straightness =
          std::max(r.straightness, point_segment_distance(r.pos[v], r.pos[s.front()], r.pos[s.back()]) / diam);
  r.contacts_before = a.family.contacts;
  r.contacts_after = geometric_contacts(a.family, r.pos, tol * diam);
  r.internally_3connected = check_internally_3connected(r.augmented.graph);

  // Extremal points of subsets of the base segments are free, unless the
  // subset cannot lie on a line: three of its segments end at the point.
  const auto& aug = r.augmented;
  std::vector<int> base_index(a.family.size());
  for (int i = 0; i < aug.family.size(); ++i)
    if (aug.original_segment[i] != kNone) base_index[aug.original_segment[i]] = i;
  const int m = a.family.size();
  r.extremal_are_free = true;
  for (std::uint64_t mask = 1; m <= 12 && mask < (std::uint64_t{1} << m) && r.extremal_are_free; ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<int> subset;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) subset.push_back(base_index[i]);
    std::sort(subset.begin(), subset.end());
    const auto ex = extremal_points(aug.graph.graph, aug.family, subset);
    const auto fr = free_points(aug.graph.graph, aug.family, subset);
    for (VertexId p : ex) {
      if (std::binary_search(fr.begin(), fr.end(), p)) continue;
      int ends = 0;
      for (int i : subset) ends += aug.family.segments[i].is_endpoint(p);
      if (ends < 3) r.extremal_are_free = false;
    }
  }
  return r;
}

}  // namespace sltr
