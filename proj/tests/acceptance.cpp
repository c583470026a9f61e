// Runs the acceptance criteria over the fixture corpus and prints one
// PASS/FAIL line per criterion. Exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sltr/connectivity.hpp"
#include "sltr/error.hpp"
#include "sltr/faa.hpp"
#include "sltr/harmonic.hpp"
#include "sltr/medial.hpp"
#include "sltr/outline.hpp"
#include "sltr/schnyder.hpp"
#include "sltr/stretcher.hpp"
#include "sltr/verify.hpp"
#include "support.hpp"

using namespace sltr;
using sltr::test::corpus;
using sltr::test::load_arrangement;
using sltr::test::load_graph;

namespace {

constexpr double kResidualBound = 1e-9;
constexpr double kAngleTol = 1e-6;

// Worst residual over every system solved in this run.
double worst_residual = 0;
int systems_solved = 0;

void note_drawing(const Drawing& d) {
  worst_residual = std::max(worst_residual, d.residual);
  ++systems_solved;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

struct Gfaa {
  std::string graph;
  FlatAngleAssignment faa;
};

// Every FAA of every corpus graph with its geometric verdict, computed once.
struct CorpusScan {
  std::vector<std::pair<std::string, std::vector<FlatAngleAssignment>>> faas;
  std::vector<Gfaa> gfaas;
};

const CorpusScan& scan() {
  static const CorpusScan s = [] {
    CorpusScan out;
    for (const auto& name : corpus()) {
      const SuspendedGraph g = load_graph(name);
      auto all = collect_faas(g);
      for (const auto& faa : all) {
        const GfaaEvaluation ev = evaluate_gfaa(g, faa);
        if (ev.drawing) note_drawing(*ev.drawing);
        if (ev.gfaa) out.gfaas.push_back({name, faa});
      }
      out.faas.emplace_back(name, std::move(all));
    }
    return out;
  }();
  return s;
}

bool is_triangulation(const PlaneGraph& g) {
  for (FaceId f = 0; f < g.num_faces(); ++f)
    if (g.face_size(f) != 3) return false;
  return true;
}

// Angle identities of a verified drawing.
void check_angles(const SuspendedGraph& g, const VerificationReport& r, Outcome& o, const std::string& tag) {
  const PlaneGraph& pg = g.graph;
  for (VertexId v = 0; v < pg.num_vertices(); ++v) {
    if (pg.vertex_on_face(v, pg.outer_face())) continue;
    if (std::abs(r.theta_v[v] - 2 * kPi) > kAngleTol) o.fail(tag + " vertex " + std::to_string(v));
  }
  for (FaceId f = 0; f < pg.num_faces(); ++f) {
    if (f == pg.outer_face()) continue;
    if (r.theta_f[f] > (pg.face_size(f) - 2) * kPi + kAngleTol) o.fail(tag + " face " + std::to_string(f));
  }
}

// 1
Outcome characterization() {
  Outcome o;
  int pairs = 0, good = 0;
  for (const auto& [name, faas] : scan().faas) {
    const SuspendedGraph g = load_graph(name);
    if (g.graph.num_vertices() > 12) continue;
    const OutlineCatalog cat = OutlineCatalog::build(g.graph, CoStarMode::Full);
    for (const auto& faa : faas) {
      if (!check_assignment_conditions(g, faa).ok()) o.fail(name + " enumerated FAA violates C_v/C_f");
      const bool geometric = is_gfaa(g, faa);
      const bool combinatorial = check_co_star(cat, g, faa).ok;
      if (geometric != combinatorial) o.fail(name + " disagreement");
      ++pairs;
      good += geometric;
    }
  }
  o.detail << pairs << " assignments, " << good << " good";
  return o;
}

// 2
Outcome cube() {
  Outcome o;
  const auto faas = collect_faas(load_graph("cube"));
  if (!faas.empty()) o.fail("cube has an FAA");
  o.detail << faas.size() << " FAAs on the cube";
  return o;
}

// 3
Outcome simple_cycles() {
  Outcome o;
  int pairs = 0;
  for (const auto& [name, faas] : scan().faas) {
    const SuspendedGraph g = load_graph(name);
    const OutlineCatalog full = OutlineCatalog::build(g.graph, CoStarMode::Full);
    const OutlineCatalog simple = OutlineCatalog::build(g.graph, CoStarMode::SimpleCycles);
    for (const auto& faa : faas) {
      if (check_co_star(full, g, faa).ok != check_co_star(simple, g, faa).ok) o.fail(name);
      ++pairs;
    }
  }
  o.detail << pairs << " (graph, FAA) pairs";
  return o;
}

// 4
Outcome free_point_counts() {
  Outcome o;
  std::uint64_t subsets = 0;
  for (const auto& [name, faa] : scan().gfaas) {
    const SuspendedGraph g = load_graph(name);
    const PseudosegmentFamily fam = pseudosegments_of(g, faa);
    if (fam.size() > 12) continue;
    const CpResult r = check_cp(g.graph, fam, PointKind::Free, false);
    subsets += r.subsets_checked;
    if (!r.ok) o.fail(name);
  }
  o.detail << scan().gfaas.size() << " GFAAs, " << subsets << " subsets";
  return o;
}

// 6
Outcome angles() {
  Outcome o;
  int drawings = 0;
  for (const auto& [name, faa] : scan().gfaas) {
    const SuspendedGraph g = load_graph(name);
    const GfaaEvaluation ev = evaluate_gfaa(g, faa);
    note_drawing(*ev.drawing);
    check_angles(g, *ev.report, o, name);
    ++drawings;
  }
  o.detail << drawings << " SLTRs";
  return o;
}

// 7
Outcome tutte() {
  Outcome o;
  int count = 0;
  for (const auto& name : corpus()) {
    const SuspendedGraph g = load_graph(name);
    if (!is_triangulation(g.graph)) continue;
    const GfaaEvaluation ev = evaluate_gfaa(g, {});
    if (ev.drawing) note_drawing(*ev.drawing);
    if (!ev.gfaa || !ev.report->all_pass() || !ev.report->all_faces_triangles) o.fail(name);
    ++count;
  }
  if (count == 0) o.fail("no triangulation in the corpus");
  o.detail << count << " triangulations";
  return o;
}

// 8
Outcome schnyder_pipeline() {
  Outcome o;
  double worst_area = 0;
  for (const std::string name : {"k4", "prism", "cube", "pentagonal_prism", "wheel5"}) {
    const SuspendedGraph g = load_graph(name);
    const SchnyderWood wood = compute_schnyder_wood(g);
    if (!verify_schnyder(g, wood).ok()) o.fail(name + " wood");
    const OrthogonalSurface s = surface_coordinates(g, wood);
    if (!is_gfaa(s.medial.graph, medial_faa(s))) o.fail(name + " medial FAA");
    const Dissection d = primal_dual_representation(g);
    note_drawing(d.drawing);
    const DissectionReport r = check_dissection(g, d);
    const int expected = g.graph.num_vertices() + g.graph.num_faces() - 1;
    if (static_cast<int>(d.triangles.size()) != expected || !r.count_ok) o.fail(name + " triangle count");
    if (!r.area_ok) o.fail(name + " areas");
    if (!r.coloring_ok) o.fail(name + " coloring");
    if (!r.contacts_ok) o.fail(name + " contacts");
    worst_area = std::max(worst_area, r.area_error);
  }
  o.detail << "5 graphs, worst area error " << worst_area;
  return o;
}

// 9
Outcome medial_recognition() {
  Outcome o;
  for (const auto& name : corpus()) {
    const SuspendedGraph g = load_graph(name);
    const MedialGraph m = medial_graph(g);
    if (!embeddings_isomorphic(invert_medial(m.graph).graph.graph, g.graph)) o.fail(name + " inversion");
    const OrthogonalSurface s = surface_coordinates(g, compute_schnyder_wood(g));
    const GfaaEvaluation ev = evaluate_gfaa(s.medial.graph, medial_faa(s));
    if (ev.drawing) note_drawing(*ev.drawing);
    if (!ev.gfaa) o.fail(name + " medial SLTR: " + ev.reason);
  }
  o.detail << corpus().size() << " graphs";
  return o;
}

// 10
Outcome stretcher() {
  Outcome o;
  const PseudosegmentArrangement yes = load_arrangement("stretchable");
  const StretchResult r = stretch(yes);
  note_drawing(r.augmented_drawing);
  if (!r.report.all_pass()) o.fail("stretchable drawing");
  if (!r.contacts_preserved()) o.fail("contacts changed");
  if (!same_arrangement(strip(augment(yes)), yes)) o.fail("strip(augment) differs");

  const PseudosegmentArrangement no = load_arrangement("not_stretchable");
  const StretchCheck c = check_stretchable(no);
  if (c.ok || c.witness.empty() || c.extremal.size() > 2) o.fail("no witness");
  try {
    stretch(no);
    o.fail("not_stretchable stretched");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotStretchable) o.fail("wrong error");
  }
  o.detail << "straightness " << r.straightness << ", witness size " << c.witness.size() << " with "
           << c.extremal.size() << " extremal points";
  return o;
}

// 11
Outcome weights() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  int draws = 0;
  for (const auto& [name, faa] : scan().gfaas) {
    const SuspendedGraph g = load_graph(name);
    for (int i = 0; i < 20; ++i) {
      const GfaaEvaluation ev = evaluate_gfaa(g, faa, HarmonicWeights::random(g.graph, rng));
      if (ev.drawing) note_drawing(*ev.drawing);
      if (!ev.gfaa) o.fail(name + ": " + ev.reason);
      else check_angles(g, *ev.report, o, name);
      ++draws;
    }
  }
  o.detail << draws << " weighted draws";
  return o;
}

// 5, run last so it sees every system solved above.
Outcome harmonic() {
  Outcome o;
  int checked = 0;
  for (const auto& [name, faa] : scan().gfaas) {
    const SuspendedGraph g = load_graph(name);
    if (!check_solvability(assemble(g, faa, {}, oriented_poles(g)))) o.fail(name + " pole reachability");
    ++checked;
  }
  if (worst_residual > kResidualBound) o.fail("residual");
  o.detail << checked << " GFAA systems reachable, " << systems_solved << " solves, worst residual "
           << worst_residual;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "characterization", characterization},
      {2, "cube has no FAA", cube},
      {3, "simple cycles suffice", simple_cycles},
      {4, "free points", free_point_counts},
      {6, "angle identities", angles},
      {7, "tutte drawings", tutte},
      {8, "schnyder pipeline", schnyder_pipeline},
      {9, "medial recognition", medial_recognition},
      {10, "stretcher", stretcher},
      {11, "weight robustness", weights},
      {5, "harmonic solver", harmonic},
  };
  std::vector<std::string> lines(12);
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    lines[c.id] = "criterion " + std::to_string(c.id) + " " + (o.pass ? "PASS" : "FAIL") + "  " + c.name + "  [" +
                  buf + "] " + o.detail.str();
    all = all && o.pass;
  }
  for (int i = 1; i <= 11; ++i) std::puts(lines[i].c_str());
  return all ? 0 : 1;
}
