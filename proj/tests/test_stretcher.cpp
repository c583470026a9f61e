#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "sltr/connectivity.hpp"
#include "sltr/error.hpp"
#include "sltr/stretcher.hpp"
#include "sltr/verify.hpp"
#include "support.hpp"

using namespace sltr;
using sltr::test::load_arrangement;
using sltr::test::load_graph;
using sltr::test::sketch;

namespace {

PseudosegmentArrangement from_sketch(const std::vector<Point>& pts, const std::vector<std::vector<int>>& paths) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& p : paths)
    for (size_t i = 0; i + 1 < p.size(); ++i) edges.push_back({p[i], p[i + 1]});
  const PlaneGraph g = sketch(pts, edges);
  std::vector<std::vector<EdgeId>> classes;
  for (const auto& p : paths) {
    classes.emplace_back();
    for (size_t i = 0; i + 1 < p.size(); ++i) classes.back().push_back(test::edge_id(g, p[i], p[i + 1]));
  }
  return PseudosegmentArrangement::make(g, classes);
}

double area2(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

// Every vertex of every segment on the line through its endpoints.
double worst_bend(const PseudosegmentFamily& fam, const std::vector<Point>& pos) {
  double worst = 0;
  for (const auto& s : fam.segments) {
    const Point a = pos[s.front()], b = pos[s.back()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    for (VertexId v : s.vertices) worst = std::max(worst, std::abs(area2(a, b, pos[v])) / len);
  }
  return worst;
}

}  // namespace

TEST_CASE("region sides") {
  std::vector<int> a = load_arrangement("stretchable").region_sides();
  std::sort(a.begin(), a.end());
  CHECK(a == std::vector<int>{3, 6, 7});
  std::vector<int> b = load_arrangement("not_stretchable").region_sides();
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<int>{4, 5});
}

TEST_CASE("stretchability condition") {
  CHECK(check_stretchable(load_arrangement("stretchable")).ok);

  const StretchCheck bad = check_stretchable(load_arrangement("not_stretchable"));
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness == std::vector<int>{0, 1, 2});
  CHECK(bad.extremal.size() <= 2);
  try {
    stretch(load_arrangement("not_stretchable"));
    FAIL("expected NotStretchable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStretchable);
    CHECK(e.payload() == std::vector<int>{0, 1, 2});
  }

  const auto single = from_sketch({{0, 0}, {1, 1}, {2, 0}}, {{0, 1, 2}});
  CHECK(check_stretchable(single).ok);
}

TEST_CASE("L-contact") {
  // Segment 1 ends in the interior of segment 0 and bends on the way.
  const auto a = from_sketch({{0, 0}, {2, 0}, {4, 0}, {2.5, 1}, {2, 2}}, {{0, 1, 2}, {1, 3, 4}});
  const StretchCheck chk = check_stretchable(a);
  CHECK(chk.ok);
  const StretchResult r = stretch(a);
  CHECK(r.report.all_pass());
  CHECK(r.contacts_preserved());
  REQUIRE(r.contacts_after.size() == 1);
  CHECK(r.contacts_after[0].interior);
  CHECK(r.contacts_after[0].point == 1);
  CHECK(worst_bend(a.family, r.pos) < 1e-9);
}

TEST_CASE("singleton family") {
  const auto a = from_sketch({{0, 0}, {1, 1}, {2, 0}, {3, 1}}, {{0, 1, 2, 3}});
  const StretchResult r = stretch(a);
  CHECK(r.report.all_pass());
  CHECK(r.contacts_after.empty());
  CHECK(worst_bend(a.family, r.pos) < 1e-9);
}

TEST_CASE("augmentation") {
  const PseudosegmentArrangement base = load_arrangement("stretchable");
  const AugmentedArrangement aug = augment(base);
  CHECK(aug.graph.graph.num_vertices() == 34);
  CHECK(aug.family.size() == 44);
  CHECK(aug.protection_points.size() == 11);
  CHECK(aug.triangulation_points.size() == 4);
  CHECK(check_internally_3connected(aug.graph));
  CHECK(contact_family_violations(aug.family).empty());

  const PseudosegmentArrangement full{aug.graph.graph, aug.family};
  const auto sides = full.region_sides();
  for (FaceId f = 0; f < aug.graph.graph.num_faces(); ++f)
    if (f != aug.graph.graph.outer_face()) CHECK(sides[f] == 3);

  CHECK(same_arrangement(strip(aug), base));
  CHECK(same_arrangement(strip(augment(base, {true})), base));
}

TEST_CASE("triangle-faced family keeps its bounded regions") {
  const SuspendedGraph k4 = load_graph("k4");
  const PseudosegmentFamily fam = pseudosegments_of(k4, {});
  std::vector<std::vector<EdgeId>> classes;
  for (const auto& s : fam.segments) classes.push_back(s.edges);
  const auto base = PseudosegmentArrangement::make(k4.graph, classes);
  const AugmentedArrangement aug = augment(base);
  // Bounded regions only gain protection points on their sides; with the
  // added vertices dropped some face of the augmented graph is the same walk.
  auto cyclic_min = [](std::vector<VertexId> w) {
    std::rotate(w.begin(), std::min_element(w.begin(), w.end()), w.end());
    return w;
  };
  std::set<std::vector<VertexId>> projected;
  const PlaneGraph& ag = aug.graph.graph;
  for (FaceId f = 0; f < ag.num_faces(); ++f) {
    std::vector<VertexId> w;
    bool added_inside = false;
    for (VertexId x : ag.face_vertices(f)) {
      if (aug.original_vertex[x] != kNone) w.push_back(aug.original_vertex[x]);
      added_inside = added_inside || std::count(aug.triangulation_points.begin(), aug.triangulation_points.end(), x);
    }
    if (!added_inside && !w.empty()) projected.insert(cyclic_min(w));
  }
  for (FaceId f = 0; f < k4.graph.num_faces(); ++f)
    if (f != k4.graph.outer_face()) CHECK(projected.count(cyclic_min(k4.graph.face_vertices(f))) == 1);
  CHECK(same_arrangement(strip(aug), base));
}

TEST_CASE("stretching the stretchable fixture") {
  const PseudosegmentArrangement a = load_arrangement("stretchable");
  const StretchResult r = stretch(a);
  CHECK(r.report.all_pass());
  CHECK(r.contacts_preserved());
  CHECK(r.contacts_before.size() == 6);
  CHECK(r.straightness < 1e-9);
  CHECK(worst_bend(a.family, r.pos) < 1e-9);
  CHECK(r.internally_3connected);
  CHECK(r.extremal_are_free);
  CHECK_FALSE(r.protect_all_used);
}

TEST_CASE("families of good assignments stretch to the same contacts") {
  for (const auto& name : test::corpus()) {
    const SuspendedGraph g = load_graph(name);
    for (const auto& faa : collect_faas(g)) {
      const GfaaEvaluation ev = evaluate_gfaa(g, faa);
      if (!ev.gfaa) continue;
      const PseudosegmentFamily& fam = *ev.family;
      std::vector<std::vector<EdgeId>> classes;
      for (const auto& s : fam.segments) classes.push_back(s.edges);
      const StretchResult r = stretch(PseudosegmentArrangement::make(g.graph, classes));
      CHECK_MESSAGE(r.contacts_preserved(), name);
      CHECK_MESSAGE(r.contacts_after == geometric_contacts(fam, ev.drawing->pos, 1e-9), name);
    }
  }
}
