#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <optional>
#include <random>
#include <sstream>

#include "sltr/connectivity.hpp"
#include "sltr/error.hpp"
#include "sltr/faa.hpp"
#include "sltr/harmonic.hpp"
#include "sltr/io.hpp"
#include "sltr/outline.hpp"
#include "sltr/pseudosegments.hpp"
#include "sltr/render.hpp"
#include "sltr/schnyder.hpp"
#include "sltr/stretcher.hpp"
#include "sltr/verify.hpp"

namespace sltr::cli {
namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

int flag(bool b) { return b ? 1 : 0; }

struct GraphInput {
  GraphDocument doc;
  SuspendedGraph g;

  static GraphInput load(const std::string& path) {
    GraphInput in;
    in.doc = parse_graph(read_file(path));
    in.g = to_suspended(in.doc);
    return in;
  }

  // --faa file wins over an assign block in the graph file.
  std::optional<FlatAngleAssignment> assignment(const std::string& faa_path) const {
    if (!faa_path.empty()) return parse_faa(read_file(faa_path), g.graph);
    if (!doc.assignments.empty()) return assignment_of(doc, g.graph);
    return std::nullopt;
  }
};

FaceCornerSpec corner_spec(const std::string& name) {
  return name == "budget" ? FaceCornerSpec::budget() : FaceCornerSpec::exact_triangle();
}

CoStarMode co_star_mode(const std::string& name) {
  return name == "simple" ? CoStarMode::SimpleCycles : CoStarMode::Full;
}

void print_faa(std::ostream& out, const std::string& key, const FlatAngleAssignment& faa) {
  out << key << " :";
  for (const auto& [v, f] : faa.pairs()) out << " " << v << "/" << f;
  out << "\n";
}

void print_report(std::ostream& out, const VerificationReport& r) {
  for (int c = 0; c < kNumChecks; ++c) {
    const CheckResult& res = r.checks[c];
    out << "check." << res.name << "=" << (res.pass ? "pass" : "fail") << "\n";
    if (!res.pass && !res.witness.empty()) out << "check." << res.name << ".witness=" << join(res.witness) << "\n";
  }
  out << "mirrored=" << flag(r.mirrored) << "\n";
}

// Pigeonhole count of exact-triangle mode: flat angles needed vs vertices
// that can give one.
std::pair<int, int> angle_budget(const SuspendedGraph& g) {
  int need = 0, have = 0;
  for (FaceId f = 0; f < g.graph.num_faces(); ++f) need += g.graph.face_size(f) - 3;
  for (VertexId v = 0; v < g.graph.num_vertices(); ++v) have += g.is_suspension(v) ? 0 : 1;
  return {need, have};
}

struct Classified {
  FlatAngleAssignment faa;
  bool conditions = false;  // C_v and C_f
  bool co_star = false;
  bool geometric = false;
  std::optional<OutlineCycle> witness;

  bool combinatorial() const { return conditions && co_star; }
};

std::vector<Classified> classify_all(const SuspendedGraph& g, const FaceCornerSpec& spec, CoStarMode mode,
                                     std::uint64_t budget) {
  std::vector<Classified> res;
  const auto faas = collect_faas(g, spec, budget);
  if (faas.empty()) return res;
  const OutlineCatalog catalog = OutlineCatalog::build(g.graph, mode, budget);
  for (const auto& faa : faas) {
    CoStarResult cs = check_co_star(catalog, g, faa);
    res.push_back({faa, check_assignment_conditions(g, faa, spec).ok(), cs.ok, is_gfaa(g, faa), std::move(cs.witness)});
  }
  return res;
}

int cmd_check(std::ostream& out, const std::string& path, const std::string& faa_path, const std::string& mode,
              const std::string& corners, std::uint64_t budget) {
  const GraphInput in = GraphInput::load(path);
  const bool i3c = check_internally_3connected(in.g);
  out << "internally_3connected=" << flag(i3c) << "\n";
  bool ok = i3c;
  if (const auto faa = in.assignment(faa_path)) {
    const auto spec = corner_spec(corners);
    const AssignmentReport ar = check_assignment_conditions(in.g, *faa, spec);
    out << "cv=" << flag(ar.cv_ok) << "\ncf=" << flag(ar.cf_ok) << "\n";
    for (const auto& v : ar.violations) out << "violation=" << v << "\n";
    const CoStarResult cs = check_co_star(in.g, *faa, co_star_mode(mode), budget);
    out << "co_star=" << flag(cs.ok) << "\nregions_checked=" << cs.regions_checked << "\n";
    if (cs.witness) {
      out << "witness.walk=" << join(cs.witness->walk) << "\n";
      out << "witness.edges=" << join(cs.witness->source_edges) << "\n";
      out << "witness.corners=" << join(cs.witness_corners) << "\n";
    }
    ok = ok && ar.ok() && cs.ok;
  }
  out << "result=" << (ok ? "pass" : "fail") << "\n";
  return ok ? kAffirmative : kNegative;
}

int cmd_segments(std::ostream& out, const std::string& path, const std::string& faa_path) {
  const GraphInput in = GraphInput::load(path);
  const auto faa = in.assignment(faa_path);
  if (!faa) throw Error(ErrorKind::InvalidAssignment, "no assignment given (--faa or assign block)");
  const PseudosegmentFamily fam = pseudosegments_of(in.g, *faa);
  out << "segments=" << fam.size() << "\n";
  for (int i = 0; i < fam.size(); ++i) out << "segment " << i << " : " << join(fam.segments[i].vertices) << "\n";
  out << "contacts=" << fam.contacts.size() << "\n";
  for (const auto& c : fam.contacts)
    out << "contact " << c.segment << " " << c.point << " " << c.other << " " << (c.interior ? "interior" : "end")
        << " " << c.side << "\n";
  const auto bad = contact_family_violations(fam);
  for (const auto& v : bad) out << "violation=" << v << "\n";
  out << "result=" << (bad.empty() ? "contact family" : "not a contact family") << "\n";
  return bad.empty() ? kAffirmative : kNegative;
}

int cmd_search(std::ostream& out, const std::string& path, const std::string& mode, const std::string& corners,
               std::uint64_t budget, const std::string& write_gfaa, const std::string& write_bad) {
  const GraphInput in = GraphInput::load(path);
  const auto all = classify_all(in.g, corner_spec(corners), co_star_mode(mode), budget);
  int gfaas = 0, bad = 0;
  const Classified* first_good = nullptr;
  const Classified* first_bad = nullptr;
  for (size_t i = 0; i < all.size(); ++i) {
    const Classified& c = all[i];
    out << "faa " << i << " co_star=" << flag(c.co_star) << " geometric=" << flag(c.geometric) << "\n";
    if (c.combinatorial()) {
      ++gfaas;
      if (!first_good) first_good = &c;
    } else if (c.conditions) {
      ++bad;
      if (!first_bad) first_bad = &c;
    }
  }
  out << "faas=" << all.size() << "\ngfaas=" << gfaas << "\nbad=" << bad << "\n";
  if (first_good) print_faa(out, "gfaa", first_good->faa);
  if (first_bad && first_bad->witness) out << "bad.witness.walk=" << join(first_bad->witness->walk) << "\n";
  if (!write_gfaa.empty() && first_good) write_file(write_gfaa, serialize_faa(first_good->faa, in.g.graph));
  if (!write_bad.empty() && first_bad) {
    GraphDocument doc = in.doc;
    set_assignment(doc, in.g.graph, first_bad->faa);
    write_file(write_bad, serialize_graph(doc));
  }
  if (gfaas > 0) {
    out << "result=found\n";
    return kAffirmative;
  }
  out << "result=no valid FAA\n";
  if (all.empty() && corners != "budget") {
    const auto [need, have] = angle_budget(in.g);
    out << "witness.flat_angles_needed=" << need << "\nwitness.vertices_available=" << have << "\n";
  }
  return kNegative;
}

int cmd_sltr(std::ostream& out, const std::string& path, const std::string& faa_path, const std::string& svg,
             const std::string& drawing_path, std::optional<std::uint64_t> seed, double tol, bool labels) {
  const GraphInput in = GraphInput::load(path);
  std::optional<FlatAngleAssignment> faa = in.assignment(faa_path);
  if (!faa) {
    enumerate_faas(in.g, FaceCornerSpec::exact_triangle(), [&](const FlatAngleAssignment& a) {
      if (!is_gfaa(in.g, a)) return true;
      faa = a;
      return false;
    });
    if (!faa) {
      out << "result=no valid FAA\n";
      return kNegative;
    }
  }
  print_faa(out, "faa", *faa);
  HarmonicWeights w = weights_of(in.doc);
  if (seed) {
    std::mt19937_64 rng(*seed);
    w = HarmonicWeights::random(in.g.graph, rng);
  }
  const GfaaEvaluation ev = evaluate_gfaa(in.g, *faa, w, poles_of(in.doc), tol);
  if (ev.report) print_report(out, *ev.report);
  if (ev.drawing) out << "residual=" << ev.drawing->residual << "\n";
  if (ev.drawing && !drawing_path.empty()) write_file(drawing_path, serialize_drawing(*ev.drawing));
  if (ev.drawing && !svg.empty()) {
    RenderSpec spec;
    spec.labels = labels;
    const PseudosegmentFamily* fam = ev.family ? &*ev.family : nullptr;
    write_file(svg, render_svg(in.g.graph, *ev.drawing, fam, spec, ev.gfaa));
    out << "svg=" << svg << "\n";
  }
  if (!ev.gfaa) {
    out << "result=not good\nreason=" << ev.reason << "\n";
    const CoStarResult cs = check_co_star(in.g, *faa, CoStarMode::Full);
    if (cs.witness) out << "witness.walk=" << join(cs.witness->walk) << "\n";
    return kNegative;
  }
  out << "result=sltr\n";
  return kAffirmative;
}

int cmd_schnyder(std::ostream& out, const std::string& path, bool count_all, std::uint64_t budget) {
  const GraphInput in = GraphInput::load(path);
  SchnyderWood wood;
  try {
    wood = compute_schnyder_wood(in.g, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Not3Connected) throw;
    out << "result=not 3-connected\n";
    return kNegative;
  }
  const auto& s = wood.suspensions;
  out << "suspensions=" << s[0] << " " << s[1] << " " << s[2] << "\n";
  const PlaneGraph& g = in.g.graph;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    out << "edge " << u << " " << v << " : " << wood.dart_label[2 * e] << " " << wood.dart_label[2 * e + 1] << "\n";
  }
  const SchnyderReport r = verify_schnyder(in.g, wood);
  out << "s1=" << flag(r.s1) << "\ns2=" << flag(r.s2) << "\ns3=" << flag(r.s3) << "\ns4=" << flag(r.s4) << "\n";
  for (const auto& v : r.violations) out << "violation=" << v << "\n";
  if (count_all) out << "woods=" << all_schnyder_woods(in.g, budget).size() << "\n";
  if (!r.ok()) throw Error(ErrorKind::ConstructionFailure, "computed wood fails verification");
  out << "result=wood\n";
  return kAffirmative;
}

int cmd_primal_dual(std::ostream& out, const std::string& path, const std::string& svg, const std::string& dis_path,
                    double tol, bool labels) {
  const GraphInput in = GraphInput::load(path);
  std::optional<Dissection> d;
  try {
    d = primal_dual_representation(in.g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Not3Connected) throw;
    out << "result=not 3-connected\n";
    return kNegative;
  }
  const DissectionReport r = check_dissection(in.g, *d, tol);
  out << "triangles=" << d->triangles.size() << "\ncontacts=" << d->contacts.size() << "\n";
  out << "count_ok=" << flag(r.count_ok) << "\narea_ok=" << flag(r.area_ok) << "\ncoloring_ok=" << flag(r.coloring_ok)
      << "\ncontacts_ok=" << flag(r.contacts_ok) << "\narea_error=" << r.area_error << "\n";
  for (const auto& v : r.violations) out << "violation=" << v << "\n";
  if (!dis_path.empty()) write_file(dis_path, serialize_dissection(*d));
  if (!svg.empty()) {
    RenderSpec spec;
    spec.labels = labels;
    write_file(svg, render_svg(*d, spec));
    out << "svg=" << svg << "\n";
  }
  if (!r.ok()) throw Error(ErrorKind::ConstructionFailure, "dissection fails its checks");
  out << "result=dissection\n";
  return kAffirmative;
}

int cmd_stretch(std::ostream& out, const std::string& path, const std::string& svg, const std::string& drawing_path,
                std::uint64_t budget, double tol, bool labels) {
  const PseudosegmentArrangement a = to_arrangement(parse_arrangement(read_file(path)));
  out << "segments=" << a.family.size() << "\n";
  const StretchCheck chk = check_stretchable(a, budget);
  if (!chk.ok) {
    out << "result=not stretchable\nwitness.segments=" << join(chk.witness) << "\nwitness.extremal="
        << join(chk.extremal) << "\n";
    return kNegative;
  }
  const StretchResult r = stretch(a, {}, tol);
  const auto& aug = r.augmented;
  out << "augmented.vertices=" << aug.graph.graph.num_vertices() << "\naugmented.segments=" << aug.family.size()
      << "\nprotection_points=" << aug.protection_points.size()
      << "\ntriangulation_points=" << aug.triangulation_points.size() << "\n";
  print_report(out, r.report);
  out << "straightness=" << r.straightness << "\ncontacts_preserved=" << flag(r.contacts_preserved())
      << "\ninternally_3connected=" << flag(r.internally_3connected)
      << "\nextremal_are_free=" << flag(r.extremal_are_free) << "\nprotect_all_used=" << flag(r.protect_all_used)
      << "\n";
  Drawing base;
  base.pos = r.pos;
  if (!drawing_path.empty()) write_file(drawing_path, serialize_drawing(r.augmented_drawing));
  if (!svg.empty()) {
    RenderSpec spec;
    spec.labels = labels;
    write_file(svg, render_svg(a.graph, base, &a.family, spec, r.report.all_pass()));
    out << "svg=" << svg << "\n";
  }
  if (!r.report.all_pass() || !r.contacts_preserved() || r.straightness > tol)
    throw Error(ErrorKind::ConstructionFailure, "stretched drawing fails verification");
  out << "result=stretched\n";
  return kAffirmative;
}

struct FixtureReport {
  std::string text;
  bool agree = true;
};

FixtureReport oracle_graph(const std::filesystem::path& p, CoStarMode mode, std::uint64_t budget) {
  std::ostringstream out;
  const std::string name = p.stem().string();
  const GraphInput in = GraphInput::load(p.string());
  const auto all = classify_all(in.g, FaceCornerSpec::exact_triangle(), mode, budget);
  int good = 0, bad = 0;
  std::vector<int> mismatches;
  for (size_t i = 0; i < all.size(); ++i) {
    good += all[i].combinatorial() ? 1 : 0;
    bad += all[i].conditions && !all[i].co_star ? 1 : 0;
    if (all[i].combinatorial() != all[i].geometric) mismatches.push_back(static_cast<int>(i));
  }
  out << "graph " << name << " faas=" << all.size() << " gfaas=" << good << " bad=" << bad
      << " agree=" << flag(mismatches.empty()) << "\n";
  if (!mismatches.empty()) out << "mismatch " << name << " : " << join(mismatches) << "\n";
  return {out.str(), mismatches.empty()};
}

FixtureReport oracle_arrangement(const std::filesystem::path& p, std::uint64_t budget) {
  std::ostringstream out;
  const std::string name = p.stem().string();
  const PseudosegmentArrangement a = to_arrangement(parse_arrangement(read_file(p.string())));
  const bool cond = check_stretchable(a, budget).ok;
  bool stretched = false;
  try {
    const StretchResult r = stretch(a);
    stretched = r.report.all_pass() && r.contacts_preserved();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotStretchable && e.kind() != ErrorKind::ConstructionFailure) throw;
  }
  out << "arrangement " << name << " condition=" << flag(cond) << " stretched=" << flag(stretched)
      << " agree=" << flag(cond == stretched) << "\n";
  return {out.str(), cond == stretched};
}

int cmd_oracle(std::ostream& out, const std::string& dir, const std::string& mode, std::uint64_t budget, int jobs) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(ErrorKind::ParseError, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".graph" || e.path().extension() == ".arr") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  const CoStarMode m = co_star_mode(mode);
  auto one = [&](const fs::path& p) {
    return p.extension() == ".graph" ? oracle_graph(p, m, budget) : oracle_arrangement(p, budget);
  };
  std::vector<FixtureReport> reports(files.size());
  const size_t width = static_cast<size_t>(std::max(1, jobs));
  for (size_t start = 0; start < files.size(); start += width) {
    std::vector<std::future<FixtureReport>> batch;
    for (size_t i = start; i < std::min(files.size(), start + width); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, one, files[i]));
    for (size_t i = 0; i < batch.size(); ++i) reports[start + i] = batch[i].get();
  }
  bool agree = true;
  for (const auto& r : reports) {
    out << r.text;
    agree = agree && r.agree;
  }
  out << "fixtures=" << files.size() << "\nresult=" << (agree ? "equivalent" : "mismatch") << "\n";
  return agree ? kAffirmative : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Straight line triangle representations"};
  app.require_subcommand(1);

  std::string graph, faa, svg, drawing, mode = "full", corners = "exact", write_gfaa, write_bad, dissection, dir;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::optional<std::uint64_t> seed;
  double tol = kDefaultTolerance;
  bool labels = false, count_all = false;
  int jobs = 1;

  auto graph_arg = [&](CLI::App* c) { c->add_option("graph", graph, "graph file")->required(); };
  auto mode_opt = [&](CLI::App* c) {
    c->add_option("--mode", mode, "C_o* region catalog")->check(CLI::IsMember({"full", "simple"}));
  };
  auto corners_opt = [&](CLI::App* c) {
    c->add_option("--corners", corners, "face corner rule")->check(CLI::IsMember({"exact", "budget"}));
  };
  auto budget_opt = [&](CLI::App* c) { c->add_option("--budget", budget, "enumeration budget"); };

  auto* check = app.add_subcommand("check", "internal 3-connectivity and, given an FAA, C_v, C_f and C_o*");
  graph_arg(check);
  check->add_option("--faa", faa, "assignment file");
  mode_opt(check);
  corners_opt(check);
  budget_opt(check);

  auto* segments = app.add_subcommand("segments", "pseudosegment family of an FAA");
  graph_arg(segments);
  segments->add_option("--faa", faa, "assignment file");

  auto* sltr = app.add_subcommand("sltr", "solve, verify and render an SLTR");
  graph_arg(sltr);
  sltr->add_option("--faa", faa, "assignment file (default: first good one found)");
  sltr->add_option("--svg", svg, "SVG output path");
  sltr->add_option("--drawing", drawing, "drawing output path");
  sltr->add_option("--seed", seed, "random weights from this seed");
  sltr->add_option("--tol", tol, "verification tolerance");
  sltr->add_flag("--labels", labels, "vertex labels in the SVG");

  auto* search = app.add_subcommand("search", "enumerate FAAs and report the good ones");
  graph_arg(search);
  mode_opt(search);
  corners_opt(search);
  budget_opt(search);
  search->add_option("--write-gfaa", write_gfaa, "write the first good FAA here");
  search->add_option("--write-bad", write_bad, "write the graph with the first bad FAA here");

  auto* schnyder = app.add_subcommand("schnyder", "Schnyder wood and its verification");
  graph_arg(schnyder);
  schnyder->add_flag("--all", count_all, "also count all woods");
  budget_opt(schnyder);

  auto* pd = app.add_subcommand("primal-dual", "primal-dual triangle contact representation");
  graph_arg(pd);
  pd->add_option("--svg", svg, "SVG output path");
  pd->add_option("--out", dissection, "dissection output path");
  pd->add_option("--tol", tol, "check tolerance");
  pd->add_flag("--labels", labels, "tile labels in the SVG");

  auto* st = app.add_subcommand("stretch", "stretch a pseudosegment arrangement");
  st->add_option("arrangement", graph, "arrangement file")->required();
  st->add_option("--svg", svg, "SVG output path");
  st->add_option("--drawing", drawing, "augmented drawing output path");
  st->add_option("--tol", tol, "verification tolerance");
  st->add_flag("--labels", labels, "vertex labels in the SVG");
  budget_opt(st);

  auto* oracle = app.add_subcommand("oracle", "equivalence suite over a fixtures directory");
  oracle->add_option("dir", dir, "fixtures directory")->required();
  mode_opt(oracle);
  budget_opt(oracle);
  oracle->add_option("--jobs", jobs, "fixtures processed concurrently")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"sltr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kError;
  }

  try {
    if (*check) return cmd_check(out, graph, faa, mode, corners, budget);
    if (*segments) return cmd_segments(out, graph, faa);
    if (*sltr) return cmd_sltr(out, graph, faa, svg, drawing, seed, tol, labels);
    if (*search) return cmd_search(out, graph, mode, corners, budget, write_gfaa, write_bad);
    if (*schnyder) return cmd_schnyder(out, graph, count_all, budget);
    if (*pd) return cmd_primal_dual(out, graph, svg, dissection, tol, labels);
    if (*st) return cmd_stretch(out, graph, svg, drawing, budget, tol, labels);
    if (*oracle) return cmd_oracle(out, dir, mode, budget, jobs);
  } catch (const Error& e) {
    err << "error=" << e.what() << "\n";
    if (!e.payload().empty()) err << "payload=" << join(e.payload()) << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error=" << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace sltr::cli
