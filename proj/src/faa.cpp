#include "sltr/faa.hpp"

#include <algorithm>
#include <string>

#include "sltr/error.hpp"

namespace sltr {

FlatAngleAssignment::FlatAngleAssignment(std::vector<std::pair<VertexId, FaceId>> pairs) : pairs_(std::move(pairs)) {
  std::stable_sort(pairs_.begin(), pairs_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

FaceId FlatAngleAssignment::face_of(VertexId v) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), v, [](const auto& p, VertexId x) { return p.first < x; });
  return it != pairs_.end() && it->first == v ? it->second : kNone;
}

void FlatAngleAssignment::assign(VertexId v, FaceId f) {
  auto it = std::upper_bound(pairs_.begin(), pairs_.end(), v, [](VertexId x, const auto& p) { return x < p.first; });
  pairs_.insert(it, {v, f});
}

FaceCornerSpec FaceCornerSpec::prescribed(const PlaneGraph& g, std::vector<int> corners) {
  if (static_cast<int>(corners.size()) != g.num_faces())
    throw Error(ErrorKind::InvalidAssignment, "corner counts need one entry per face");
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    if (corners[f] < 3 || corners[f] > g.face_size(f))
      throw Error(ErrorKind::InvalidAssignment, "face " + std::to_string(f) + " cannot have " +
                                                    std::to_string(corners[f]) + " corners",
                  {f});
  }
  return {Mode::Prescribed, std::move(corners)};
}

int FaceCornerSpec::target(const PlaneGraph& g, FaceId f) const {
  if (mode == Mode::Prescribed && f != g.outer_face()) return g.face_size(f) - corners[f];
  return std::max(0, g.face_size(f) - 3);
}

AssignmentReport check_assignment_conditions(const SuspendedGraph& g, const FlatAngleAssignment& faa,
                                             const FaceCornerSpec& spec) {
  const PlaneGraph& pg = g.graph;
  AssignmentReport r;
  std::vector<int> count(pg.num_faces(), 0);
  std::vector<bool> seen(pg.num_vertices(), false);
  for (const auto& [v, f] : faa.pairs()) {
    const std::string at = "vertex " + std::to_string(v);
    if (v < 0 || v >= pg.num_vertices() || f < 0 || f >= pg.num_faces()) {
      r.cv_ok = false;
      r.violations.push_back(at + " assigned to face " + std::to_string(f) + " out of range");
      continue;
    }
    if (seen[v]) {
      r.cv_ok = false;
      r.violations.push_back(at + " assigned more than once");
    }
    seen[v] = true;
    if (g.is_suspension(v)) {
      r.cv_ok = false;
      r.violations.push_back(at + " is a suspension");
    }
    if (!pg.vertex_on_face(v, f)) {
      r.cv_ok = false;
      r.violations.push_back(at + " is not on face " + std::to_string(f));
    }
    if (spec.mode == FaceCornerSpec::Mode::Budget && f != pg.outer_face() && pg.vertex_on_face(v, pg.outer_face())) {
      r.cf_ok = false;
      r.violations.push_back(at + " lies on the outer face but is assigned to an inner face");
    }
    ++count[f];
  }
  for (FaceId f = 0; f < pg.num_faces(); ++f) {
    const int want = spec.target(pg, f);
    const bool bad = spec.mode == FaceCornerSpec::Mode::Budget ? count[f] > want : count[f] != want;
    if (bad) {
      r.cf_ok = false;
      r.violations.push_back("face " + std::to_string(f) + " has " + std::to_string(count[f]) +
                             " assigned vertices, expected " +
                             (spec.mode == FaceCornerSpec::Mode::Budget ? "at most " : "") + std::to_string(want));
    }
  }
  return r;
}

namespace {

struct Enumerator {
  const SuspendedGraph& g;
  const FaceCornerSpec& spec;
  const std::function<bool(const FlatAngleAssignment&)>& visit;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::uint64_t found = 0;
  bool stop = false;
  std::vector<std::vector<VertexId>> candidates;  // per face, sorted
  std::vector<bool> used;
  std::vector<std::pair<VertexId, FaceId>> current;

  bool exact() const { return spec.mode != FaceCornerSpec::Mode::Budget; }

  void tick() {
    if (++nodes > budget)
      throw Error(ErrorKind::BudgetExceeded, "enumeration exceeded " + std::to_string(budget) + " nodes");
  }

  // Cheap necessary condition: every later face still has enough free candidates.
  bool feasible(FaceId from) const {
    if (!exact()) return true;
    for (FaceId f = from; f < g.graph.num_faces(); ++f) {
      int free = 0;
      for (VertexId v : candidates[f]) free += !used[v];
      if (free < spec.target(g.graph, f)) return false;
    }
    return true;
  }

  void face(FaceId f) {
    if (stop) return;
    tick();
    if (f == g.graph.num_faces()) {
      ++found;
      if (!visit(FlatAngleAssignment(current))) stop = true;
      return;
    }
    if (!feasible(f)) return;
    const int want = spec.target(g.graph, f);
    if (exact()) {
      choose(f, 0, want);
    } else {
      for (int k = 0; k <= want && !stop; ++k) choose(f, 0, k);
    }
  }

  // Picks `left` more candidates of face f starting at index i.
  void choose(FaceId f, size_t i, int left) {
    if (stop) return;
    if (left == 0) {
      face(f + 1);
      return;
    }
    const auto& cand = candidates[f];
    for (size_t j = i; j < cand.size() && !stop; ++j) {
      const VertexId v = cand[j];
      if (used[v]) continue;
      tick();
      used[v] = true;
      current.emplace_back(v, f);
      choose(f, j + 1, left - 1);
      current.pop_back();
      used[v] = false;
    }
  }
};

}  // namespace

std::uint64_t enumerate_faas(const SuspendedGraph& g, const FaceCornerSpec& spec,
                             const std::function<bool(const FlatAngleAssignment&)>& visit, std::uint64_t budget) {
  const PlaneGraph& pg = g.graph;
  Enumerator en{g, spec, visit, budget, 0, 0, false, {}, {}, {}};
  en.used.assign(pg.num_vertices(), false);
  en.candidates.resize(pg.num_faces());
  for (FaceId f = 0; f < pg.num_faces(); ++f) {
    auto vs = pg.face_vertices(f);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (VertexId v : vs) {
      if (g.is_suspension(v)) continue;
      if (spec.mode == FaceCornerSpec::Mode::Budget && f != pg.outer_face() &&
          pg.vertex_on_face(v, pg.outer_face()))
        continue;
      en.candidates[f].push_back(v);
    }
  }
  en.face(0);
  return en.found;
}

std::vector<FlatAngleAssignment> collect_faas(const SuspendedGraph& g, const FaceCornerSpec& spec,
                                              std::uint64_t budget) {
  std::vector<FlatAngleAssignment> out;
  enumerate_faas(
      g, spec,
      [&](const FlatAngleAssignment& a) {
        out.push_back(a);
        return true;
      },
      budget);
  return out;
}

}  // namespace sltr
