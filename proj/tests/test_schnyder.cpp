#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sltr/error.hpp"
#include "sltr/harmonic.hpp"
#include "sltr/medial.hpp"
#include "sltr/pseudosegments.hpp"
#include "sltr/schnyder.hpp"
#include "sltr/verify.hpp"
#include "support.hpp"

using namespace sltr;
using sltr::test::load_graph;

namespace {

const std::vector<std::string> kSchnyderCorpus{"k4", "octahedron", "prism", "cube", "pentagonal_prism", "wheel5",
                                               "prism_quad", "bad7"};

std::array<VertexId, 3> clockwise(const SuspendedGraph& g) {
  const auto& s = g.suspensions;
  return g.suspensions_clockwise() ? s : std::array<VertexId, 3>{s[0], s[2], s[1]};
}

// Symbols +k (out k) and -k (in k) around v in clockwise order.
bool local_pattern(const SuspendedGraph& g, const std::array<VertexId, 3>& cw, const std::vector<int>& label,
                   VertexId v) {
  const PlaneGraph& pg = g.graph;
  const auto rot = pg.neighbors(v);
  std::vector<std::vector<int>> items;  // counterclockwise
  for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
    const DartId d = pg.dart(v, rot[i]);
    const int out = label[d], in = label[d ^ 1];
    if (!out && !in) return false;
    if (out && in && out == in) return false;
    if (out && in)
      items.push_back(out == in % 3 + 1 ? std::vector<int>{out, -in} : std::vector<int>{-in, out});
    else
      items.push_back({out ? out : -in});
    for (int k = 0; k < 3; ++k)
      if (cw[k] == v && pg.angle_face(v, i) == pg.outer_face()) items.push_back({k + 1});
  }
  std::vector<int> seq;
  for (auto it = items.rbegin(); it != items.rend(); ++it) seq.insert(seq.end(), it->begin(), it->end());
  // A bidirected edge was listed in clockwise order already; reversing the
  // items keeps its two symbols in that order.
  const auto start = std::find(seq.begin(), seq.end(), 1);
  if (start == seq.end()) return false;
  std::rotate(seq.begin(), start, seq.end());
  // out1 in3* out2 in1* out3 in2*
  int stage = 0;
  for (size_t i = 1; i < seq.size(); ++i) {
    const int s = seq[i];
    const int allowed_in = stage == 0 ? -3 : stage == 1 ? -1 : -2;
    if (s == allowed_in) continue;
    if (s == stage + 2) {
      ++stage;
      continue;
    }
    return false;
  }
  return stage == 2;
}

bool has_mono_cycle(const PlaneGraph& g, const std::vector<int>& label, int k) {
  const int n = g.num_vertices();
  std::vector<int> color(n, 0);
  std::function<bool(int)> dfs = [&](int v) {
    color[v] = 1;
    for (VertexId u : g.neighbors(v)) {
      if (label[g.dart(v, u)] != k) continue;
      if (color[u] == 1) return true;
      if (color[u] == 0 && dfs(u)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (color[v] == 0 && dfs(v)) return true;
  return false;
}

bool wood_oracle(const SuspendedGraph& g, const std::vector<int>& label) {
  const auto cw = clockwise(g);
  for (VertexId v = 0; v < g.graph.num_vertices(); ++v)
    if (!local_pattern(g, cw, label, v)) return false;
  for (int k = 1; k <= 3; ++k)
    if (has_mono_cycle(g.graph, label, k)) return false;
  return true;
}

// Twelve states per edge: one direction with one of three labels, or both
// directions with two distinct labels.
std::vector<std::vector<int>> brute_force_woods(const SuspendedGraph& g) {
  const int m = g.graph.num_edges();
  std::vector<std::vector<int>> found;
  std::vector<int> state(m, 0), label(2 * m);
  while (true) {
    for (int e = 0; e < m; ++e) {
      const int s = state[e];
      label[2 * e] = label[2 * e + 1] = 0;
      if (s < 6) {
        label[2 * e + s / 3] = s % 3 + 1;
      } else {
        const int a = (s - 6) / 2 + 1;
        const int b = (a + (s - 6) % 2) % 3 + 1;
        label[2 * e] = a;
        label[2 * e + 1] = b;
      }
    }
    if (wood_oracle(g, label)) found.push_back(label);
    int e = 0;
    while (e < m && ++state[e] == 12) state[e++] = 0;
    if (e == m) break;
  }
  return found;
}

bool dominated(const Coord3& a, const Coord3& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

}  // namespace

TEST_CASE("K4 has exactly one wood") {
  const SuspendedGraph k4 = load_graph("k4");
  const auto woods = brute_force_woods(k4);
  REQUIRE(woods.size() == 1);
  const SchnyderWood w = compute_schnyder_wood(k4);
  CHECK(w.dart_label == woods[0]);
  CHECK(w.suspensions == clockwise(k4));
  CHECK(all_schnyder_woods(k4).size() == 1);
}

TEST_CASE("computed woods pass both checkers") {
  const std::map<std::string, size_t> frozen{{"k4", 1},     {"octahedron", 2}, {"prism", 1},      {"cube", 2},
                                             {"pentagonal_prism", 4}, {"wheel5", 1}, {"prism_quad", 1}, {"bad7", 1}};
  for (const auto& name : kSchnyderCorpus) {
    const SuspendedGraph g = load_graph(name);
    CHECK_MESSAGE(verify_schnyder(g, compute_schnyder_wood(g)).ok(), name);
    const auto all = all_schnyder_woods(g);
    CHECK_MESSAGE(all.size() == frozen.at(name), name);
    for (const auto& w : all) {
      CHECK(verify_schnyder(g, w).ok());
      CHECK_MESSAGE(wood_oracle(g, w.dart_label), name);
    }
  }
}

TEST_CASE("verification mutations") {
  const SuspendedGraph k4 = load_graph("k4");
  const SchnyderWood w = compute_schnyder_wood(k4);

  // The outgoing edge of label 2 at the interior vertex is relabeled 1.
  SchnyderWood no_out2 = w;
  const VertexId u = w.out_neighbor(k4.graph, 3, 2);
  REQUIRE(u != kNone);
  no_out2.dart_label[k4.graph.dart(3, u)] = 1;
  CHECK(verify_schnyder(k4, no_out2).s1);
  CHECK_FALSE(verify_schnyder(k4, no_out2).s3);

  // A directed triangle of label 1 through the interior vertex.
  SchnyderWood cyc = w;
  const std::array<VertexId, 3> tri{3, w.suspensions[0], w.suspensions[1]};
  for (int i = 0; i < 3; ++i) {
    const DartId d = k4.graph.dart(tri[i], tri[(i + 1) % 3]);
    cyc.dart_label[d] = 1;
    cyc.dart_label[d ^ 1] = 0;
  }
  CHECK_FALSE(verify_schnyder(k4, cyc).s4);
  CHECK_FALSE(wood_oracle(k4, cyc.dart_label));

  // Random single-dart changes: both checkers agree.
  std::mt19937 rng(3);
  for (const auto& name : kSchnyderCorpus) {
    const SuspendedGraph g = load_graph(name);
    const SchnyderWood base = compute_schnyder_wood(g);
    for (int t = 0; t < 200; ++t) {
      SchnyderWood m = base;
      const int d = std::uniform_int_distribution<int>(0, g.graph.num_darts() - 1)(rng);
      m.dart_label[d] = std::uniform_int_distribution<int>(0, 3)(rng);
      CHECK_MESSAGE(verify_schnyder(g, m).ok() == wood_oracle(g, m.dart_label), name);
    }
  }
}

TEST_CASE("woods need 3-connectivity") {
  const PlaneGraph c5 = test::sketch({{0, 0}, {2, 0}, {3, 2}, {1, 3}, {-1, 2}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  try {
    compute_schnyder_wood(SuspendedGraph::make(c5, {0, 1, 3}));
    FAIL("expected Not3Connected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Not3Connected);
  }
}

TEST_CASE("orthogonal surfaces") {
  for (const auto& name : kSchnyderCorpus) {
    const SuspendedGraph g = load_graph(name);
    const int bounded = g.graph.num_faces() - 1;
    for (const auto& w : all_schnyder_woods(g)) {
      const OrthogonalSurface s = surface_coordinates(g, w);
      const int n = g.graph.num_vertices();
      for (int a = 0; a < n; ++a) {
        CHECK(s.vertex[a][0] + s.vertex[a][1] + s.vertex[a][2] == bounded);
        for (int b = 0; b < n; ++b)
          if (a != b) CHECK_FALSE(dominated(s.vertex[a], s.vertex[b]));
      }
      CHECK(is_antichain(s.vertex));
      for (EdgeId e = 0; e < g.graph.num_edges(); ++e) {
        const auto [u, v] = g.graph.edge(e);
        for (int k = 0; k < 3; ++k) CHECK(s.saddle[e][k] == std::max(s.vertex[u][k], s.vertex[v][k]));
      }
      const PlaneGraph& h = s.medial.graph.graph;
      for (const Flat& f : s.flats) {
        if (!f.bounded) continue;
        CHECK_FALSE(f.path.empty());
        for (size_t i = 0; i + 1 < f.path.size(); ++i) CHECK(h.adjacent(f.path[i], f.path[i + 1]));
        for (VertexId x : f.path) CHECK(s.saddle[x][f.color - 1] == f.level);
      }
      CHECK(check_rigidity(s).ok);
      CHECK(s.resolved_by_sector.empty());
    }
  }
}

TEST_CASE("a non-rigid flat") {
  OrthogonalSurface s;
  s.saddle = {{1, 5, 0}, {1, 3, 2}, {1, 4, 1}, {2, 0, 0}};
  s.flats.push_back({1, 1, {0, 1, 2}, true});
  s.flats.push_back({1, 2, {3}, true});
  const RigidityReport r = check_rigidity(s);
  CHECK_FALSE(r.ok);
  CHECK(r.offending_flat == 0);

  OrthogonalSurface single;
  single.saddle = {{2, 0, 0}};
  single.flats.push_back({1, 2, {0}, true});
  CHECK(check_rigidity(single).ok);
}

TEST_CASE("medial assignment") {
  for (const auto& name : kSchnyderCorpus) {
    const SuspendedGraph g = load_graph(name);
    const OrthogonalSurface s = surface_coordinates(g, compute_schnyder_wood(g));
    const FlatAngleAssignment faa = medial_faa(s);
    const SuspendedGraph& h = s.medial.graph;
    for (VertexId x = 0; x < h.graph.num_vertices(); ++x) CHECK(faa.assigned(x) == !h.is_suspension(x));
    CHECK(check_assignment_conditions(h, faa).ok());
    CHECK_MESSAGE(is_gfaa(h, faa), name);
    // Bounded flats correspond to the pseudosegments off the outer face of H.
    const PseudosegmentFamily fam = pseudosegments_of(h, faa);
    const PlaneGraph& hg = h.graph;
    int inner = 0;
    for (const auto& seg : fam.segments) {
      const bool outer = std::all_of(seg.edges.begin(), seg.edges.end(), [&](EdgeId e) {
        return hg.face_of(2 * e) == hg.outer_face() || hg.face_of(2 * e + 1) == hg.outer_face();
      });
      inner += outer ? 0 : 1;
    }
    int bounded = 0;
    std::set<int> used;
    for (const Flat& f : s.flats) {
      if (!f.bounded) continue;
      ++bounded;
      if (f.path.size() < 2) continue;
      std::set<int> segs;
      for (size_t i = 0; i + 1 < f.path.size(); ++i)
        segs.insert(fam.segment_of_edge[*hg.edge_between(f.path[i], f.path[i + 1])]);
      CHECK(segs.size() == 1);
      CHECK(used.insert(*segs.begin()).second);
    }
    CHECK_MESSAGE(inner == bounded, name);
    CHECK(fam.size() == bounded + 3);
  }
}

TEST_CASE("primal-dual dissections") {
  const std::map<std::string, size_t> triangles{{"k4", 7}, {"prism", 10}};
  for (const auto& name : kSchnyderCorpus) {
    const SuspendedGraph g = load_graph(name);
    const PlaneGraph& pg = g.graph;
    const Dissection d = primal_dual_representation(g);
    CHECK(static_cast<int>(d.triangles.size()) == pg.num_vertices() + pg.num_faces() - 1);
    if (triangles.count(name)) CHECK(d.triangles.size() == triangles.at(name));
    const DissectionReport r = check_dissection(g, d);
    CHECK_MESSAGE(r.ok(), name);

    auto face_id = [&](const Tile& t) { return t.kind == Tile::Kind::Enclosing ? pg.outer_face() : t.id; };
    std::set<std::pair<int, int>> vv, ff, vf;
    for (const auto& c : d.contacts) {
      const bool av = c.a.kind == Tile::Kind::Vertex, bv = c.b.kind == Tile::Kind::Vertex;
      if (c.kind == TileContact::Kind::Point) {
        REQUIRE(av == bv);
        if (av)
          vv.insert({std::min(c.a.id, c.b.id), std::max(c.a.id, c.b.id)});
        else
          ff.insert({std::min(face_id(c.a), face_id(c.b)), std::max(face_id(c.a), face_id(c.b))});
      } else {
        REQUIRE(av != bv);
        vf.insert(av ? std::pair{c.a.id, face_id(c.b)} : std::pair{c.b.id, face_id(c.a)});
      }
    }
    std::set<std::pair<int, int>> edges(pg.edges().begin(), pg.edges().end()), dual, inc;
    for (DartId x = 0; x < pg.num_darts(); x += 2) {
      const FaceId f = pg.face_of(x), h = pg.face_of(x + 1);
      dual.insert({std::min(f, h), std::max(f, h)});
    }
    for (VertexId v = 0; v < pg.num_vertices(); ++v)
      for (FaceId f : pg.faces_around(v)) inc.insert({v, f});
    CHECK_MESSAGE(vv == edges, name);
    CHECK_MESSAGE(ff == dual, name);
    CHECK_MESSAGE(vf == inc, name);
  }
}
