#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sltr/error.hpp"
#include "sltr/faa.hpp"
#include "sltr/harmonic.hpp"
#include "sltr/outline.hpp"
#include "sltr/pseudosegments.hpp"
#include "sltr/verify.hpp"
#include "support.hpp"

using namespace sltr;
using sltr::test::load_graph;

namespace {

// Every map vertex -> (nothing | incident face), filtered by the face counts.
std::vector<FlatAngleAssignment> brute_force_faas(const SuspendedGraph& g, bool budget_mode) {
  const PlaneGraph& pg = g.graph;
  std::vector<VertexId> free;
  for (VertexId v = 0; v < pg.num_vertices(); ++v)
    if (!g.is_suspension(v)) free.push_back(v);
  std::vector<std::vector<FaceId>> options(free.size());
  for (size_t i = 0; i < free.size(); ++i) {
    options[i].push_back(kNone);
    const bool on_outer = pg.vertex_on_face(free[i], pg.outer_face());
    for (FaceId f : pg.faces_around(free[i])) {
      if (budget_mode && on_outer && f != pg.outer_face()) continue;
      if (std::find(options[i].begin(), options[i].end(), f) == options[i].end()) options[i].push_back(f);
    }
  }
  std::vector<FlatAngleAssignment> out;
  std::vector<size_t> pick(free.size(), 0);
  while (true) {
    std::vector<int> count(pg.num_faces(), 0);
    std::vector<std::pair<VertexId, FaceId>> pairs;
    for (size_t i = 0; i < free.size(); ++i)
      if (options[i][pick[i]] != kNone) {
        ++count[options[i][pick[i]]];
        pairs.push_back({free[i], options[i][pick[i]]});
      }
    bool ok = true;
    for (FaceId f = 0; f < pg.num_faces(); ++f) {
      const int target = pg.face_size(f) - 3;
      ok = ok && (budget_mode ? count[f] <= target : count[f] == target);
    }
    if (ok) out.emplace_back(pairs);
    size_t i = 0;
    while (i < free.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == free.size()) break;
  }
  return out;
}

std::set<std::vector<std::pair<VertexId, FaceId>>> as_set(const std::vector<FlatAngleAssignment>& v) {
  std::set<std::vector<std::pair<VertexId, FaceId>>> s;
  for (const auto& a : v) s.insert(a.pairs());
  return s;
}

// Union-find over the flat angles: the two edges at v on face f merge.
std::set<std::set<EdgeId>> rho_classes(const SuspendedGraph& g, const FlatAngleAssignment& faa) {
  const PlaneGraph& pg = g.graph;
  std::vector<int> parent(pg.num_edges());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [v, f] : faa.pairs()) {
    for (DartId d : pg.face_darts(f)) {
      const Dart in = pg.dart_info(d);
      if (in.head != v) continue;
      const Dart out = pg.dart_info(pg.next_in_face(d));
      parent[find(in.edge)] = find(out.edge);
    }
  }
  std::map<int, std::set<EdgeId>> cls;
  for (EdgeId e = 0; e < pg.num_edges(); ++e) cls[find(e)].insert(e);
  std::set<std::set<EdgeId>> res;
  for (auto& [r, s] : cls) res.insert(s);
  return res;
}

std::vector<EdgeId> all_edges_but(const PlaneGraph& g, std::vector<EdgeId> skip) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (std::find(skip.begin(), skip.end(), e) == skip.end()) out.push_back(e);
  return out;
}

std::vector<std::vector<int>> subsets(int n, int min_size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (static_cast<int>(s.size()) >= min_size) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("assignment conditions") {
  const SuspendedGraph oct = load_graph("octahedron");
  CHECK(check_assignment_conditions(oct, {}).ok());

  const SuspendedGraph prism = load_graph("prism");
  const FlatAngleAssignment faa = parse_faa(read_file(test::fixture_path("faa/prism.faa")), prism.graph);
  CHECK(check_assignment_conditions(prism, faa).ok());
  std::set<FaceId> faces;
  for (auto [v, f] : faa.pairs()) {
    CHECK(prism.graph.face_size(f) == 4);
    faces.insert(f);
  }
  CHECK(faces.size() == 3);

  // A suspension assigned, and a vertex assigned twice.
  auto bad = faa;
  bad.assign(prism.suspensions[0], prism.graph.outer_face());
  CHECK_FALSE(check_assignment_conditions(prism, bad).cv_ok);
  const FlatAngleAssignment twice({{3, 0}, {3, 3}, {4, 3}, {5, 2}});
  CHECK_FALSE(check_assignment_conditions(prism, twice).cv_ok);
  CHECK_FALSE(check_assignment_conditions(prism, {}).cf_ok);
}

TEST_CASE("FAA enumeration matches brute force") {
  const std::map<std::string, size_t> frozen{{"k4", 1},   {"octahedron", 1}, {"prism", 2},      {"cube", 0},
                                             {"pentagonal_prism", 0}, {"wheel5", 1}, {"prism_quad", 2}, {"bad7", 4}};
  for (const auto& name : test::corpus()) {
    const SuspendedGraph g = load_graph(name);
    const auto exact = collect_faas(g);
    CHECK_MESSAGE(as_set(exact) == as_set(brute_force_faas(g, false)), name);
    CHECK_MESSAGE(exact.size() == frozen.at(name), name);
    CHECK(as_set(exact).size() == exact.size());
    for (const auto& a : exact) CHECK(check_assignment_conditions(g, a).ok());
    const auto budget = collect_faas(g, FaceCornerSpec::budget());
    CHECK_MESSAGE(as_set(budget) == as_set(brute_force_faas(g, true)), name);
  }
}

TEST_CASE("enumeration budget") {
  const SuspendedGraph g = load_graph("bad7");
  try {
    collect_faas(g, FaceCornerSpec::exact_triangle(), 2);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("pseudosegments are the classes of the flat-angle relation") {
  const SuspendedGraph k4 = load_graph("k4");
  const PseudosegmentFamily f0 = pseudosegments_of(k4, {});
  CHECK(f0.size() == 6);
  for (const auto& s : f0.segments) CHECK(s.edges.size() == 1);

  const SuspendedGraph prism = load_graph("prism");
  const FlatAngleAssignment faa = parse_faa(read_file(test::fixture_path("faa/prism.faa")), prism.graph);
  const PseudosegmentFamily fam = pseudosegments_of(prism, faa);
  int two = 0, edges = 0;
  for (const auto& s : fam.segments) {
    two += s.edges.size() == 2 ? 1 : 0;
    edges += static_cast<int>(s.edges.size());
  }
  CHECK(two == 3);
  CHECK(fam.size() == 6);
  CHECK(edges == prism.graph.num_edges());

  for (const auto& name : test::corpus()) {
    const SuspendedGraph g = load_graph(name);
    for (const auto& a : collect_faas(g)) {
      if (!is_gfaa(g, a)) continue;
      const PseudosegmentFamily p = pseudosegments_of(g, a);
      std::set<std::set<EdgeId>> got;
      for (const auto& s : p.segments) got.insert({s.edges.begin(), s.edges.end()});
      CHECK_MESSAGE(got == rho_classes(g, a), name);
      CHECK(contact_family_violations(p).empty());
    }
  }
}

TEST_CASE("closed arc") {
  const SuspendedGraph cube = load_graph("cube");
  const PlaneGraph& g = cube.graph;
  FaceId inner = kNone;
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    const auto vs = g.face_vertices(f);
    if (std::none_of(vs.begin(), vs.end(), [&](VertexId v) { return g.vertex_on_face(v, g.outer_face()); }))
      inner = f;
  }
  REQUIRE(inner != kNone);
  std::vector<std::pair<VertexId, FaceId>> pairs;
  for (VertexId v : g.face_vertices(inner)) pairs.push_back({v, inner});
  try {
    pseudosegments_of(cube, FlatAngleAssignment(pairs));
    FAIL("expected ArcClosesCycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ArcClosesCycle);
    CHECK(e.payload().size() == 4);
  }
}

TEST_CASE("convex corners") {
  const SuspendedGraph prism = load_graph("prism");
  const FlatAngleAssignment faa = parse_faa(read_file(test::fixture_path("faa/prism.faa")), prism.graph);
  const PlaneGraph& g = prism.graph;

  const OutlineCycle whole = outline_of(g, all_edges_but(g, {}));
  const auto c_whole = convex_corners(prism, whole, faa);
  for (VertexId s : prism.suspensions) CHECK(std::count(c_whole.begin(), c_whole.end(), s) == 1);

  // Inner triangle; the inner vertices are flat in quads outside it.
  const OutlineCycle tri = outline_of(g, {test::edge_id(g, 3, 4), test::edge_id(g, 4, 5), test::edge_id(g, 3, 5)});
  CHECK(convex_corners(prism, tri, faa) == std::vector<VertexId>{3, 4, 5});

  // Octahedron without one outer edge: the inner vertex on that side is on
  // the outline with all its edges inside.
  const SuspendedGraph oct = load_graph("octahedron");
  const OutlineCycle cut = outline_of(oct.graph, all_edges_but(oct.graph, {test::edge_id(oct.graph, 0, 1)}));
  CHECK(std::count(cut.walk.begin(), cut.walk.end(), 3) == 1);
  CHECK(convex_corners(oct, cut, {}) == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("outline cycle condition") {
  const SuspendedGraph oct = load_graph("octahedron");
  CHECK(check_co_star(oct, {}, CoStarMode::Full).ok);
  CHECK(check_co_star(oct, {}, CoStarMode::SimpleCycles).ok);

  for (const std::string name : {"prism_quad_bad", "bad7_bad"}) {
    const GraphDocument doc = parse_graph(read_file(test::fixture_path("faa/" + name + ".graph")));
    const SuspendedGraph g = to_suspended(doc);
    const FlatAngleAssignment faa = assignment_of(doc, g.graph);
    CHECK(check_assignment_conditions(g, faa).ok());
    const CoStarResult r = check_co_star(g, faa, CoStarMode::Full);
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness);
    CHECK(r.witness_corners.size() < 3);
    CHECK(convex_corners(g, *r.witness, faa) == r.witness_corners);
    // The harmonic drawing degenerates.
    const GfaaEvaluation ev = evaluate_gfaa(g, faa);
    CHECK_FALSE(ev.gfaa);
    REQUIRE(ev.report);
    CHECK((!(*ev.report)[Check::NoDegenerateVertex].pass || !(*ev.report)[Check::NoDegeneracy].pass));
  }
}

TEST_CASE("full and simple-cycle modes agree") {
  for (const auto& name : test::corpus()) {
    const SuspendedGraph g = load_graph(name);
    for (const auto& a : collect_faas(g))
      CHECK_MESSAGE(check_co_star(g, a, CoStarMode::Full).ok == check_co_star(g, a, CoStarMode::SimpleCycles).ok,
                    name);
  }
}

TEST_CASE("free and extremal points") {
  const SuspendedGraph k4 = load_graph("k4");
  const PseudosegmentFamily singles = pseudosegments_of(k4, {});
  for (int i = 0; i < singles.size(); ++i) {
    const auto& s = singles.segments[i];
    const std::vector<VertexId> ends{std::min(s.front(), s.back()), std::max(s.front(), s.back())};
    CHECK(free_points(k4.graph, singles, {i}) == ends);
    CHECK(extremal_points(k4.graph, singles, {i}) == ends);
  }

  // Star of the interior vertex: its center is extremal, not free.
  std::vector<int> star;
  for (int i = 0; i < singles.size(); ++i)
    if (singles.segments[i].contains(3)) star.push_back(i);
  const auto ext = extremal_points(k4.graph, singles, star);
  const auto fr = free_points(k4.graph, singles, star);
  CHECK(std::count(ext.begin(), ext.end(), 3) == 1);
  CHECK(std::count(fr.begin(), fr.end(), 3) == 0);

  // L-contact in the prism family: the contact point is not free.
  const SuspendedGraph prism = load_graph("prism");
  const FlatAngleAssignment faa = parse_faa(read_file(test::fixture_path("faa/prism.faa")), prism.graph);
  const PseudosegmentFamily fam = pseudosegments_of(prism, faa);
  const Contact& c = *std::find_if(fam.contacts.begin(), fam.contacts.end(), [](const Contact& x) { return x.interior; });
  std::vector<int> pair{c.segment, c.other};
  std::sort(pair.begin(), pair.end());
  const auto lfree = free_points(prism.graph, fam, pair);
  CHECK(lfree.size() == 3);
  CHECK(std::count(lfree.begin(), lfree.end(), c.point) == 0);
}

TEST_CASE("free points of good families") {
  for (const auto& name : test::corpus()) {
    const SuspendedGraph g = load_graph(name);
    for (const auto& a : collect_faas(g)) {
      if (!is_gfaa(g, a)) continue;
      const PseudosegmentFamily fam = pseudosegments_of(g, a);
      CHECK_MESSAGE(check_cp(g.graph, fam, PointKind::Free).ok, name);
      if (fam.size() > 12) continue;
      for (const auto& s : subsets(fam.size(), 1)) {
        const auto fr = free_points(g.graph, fam, s);
        const auto ex = extremal_points(g.graph, fam, s);
        CHECK(std::includes(ex.begin(), ex.end(), fr.begin(), fr.end()));
      }
    }
  }
}

TEST_CASE("too few extremal points") {
  const PseudosegmentArrangement a = test::load_arrangement("not_stretchable");
  const CpResult r = check_cp(a.graph, a.family, PointKind::Extremal, false);
  CHECK_FALSE(r.ok);
  CHECK(r.witness == std::vector<int>{0, 1, 2});
  CHECK(r.points.size() <= 2);
}
