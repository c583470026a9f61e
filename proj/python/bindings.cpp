#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "sltr/connectivity.hpp"
#include "sltr/error.hpp"
#include "sltr/faa.hpp"
#include "sltr/harmonic.hpp"
#include "sltr/io.hpp"
#include "sltr/medial.hpp"
#include "sltr/outline.hpp"
#include "sltr/render.hpp"
#include "sltr/schnyder.hpp"
#include "sltr/stretcher.hpp"
#include "sltr/verify.hpp"

namespace py = pybind11;
using namespace sltr;

namespace {

py::list points(const std::vector<Point>& pos) {
  py::list out;
  for (const Point& p : pos) out.append(py::make_tuple(p.x, p.y));
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict checks;
  for (const CheckResult& c : r.checks) checks[py::str(c.name)] = c.pass;
  py::dict out;
  out["checks"] = checks;
  out["all_pass"] = r.all_pass();
  out["all_faces_triangles"] = r.all_faces_triangles;
  out["theta_v"] = r.theta_v;
  return out;
}

std::vector<std::vector<VertexId>> segment_paths(const PseudosegmentFamily& f) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& s : f.segments) out.push_back(s.vertices);
  return out;
}

FaceCornerSpec corner_spec(const std::string& corners) {
  if (corners == "exact") return FaceCornerSpec::exact_triangle();
  if (corners == "budget") return FaceCornerSpec::budget();
  throw std::invalid_argument("corners must be 'exact' or 'budget'");
}

CoStarMode co_star_mode(const std::string& mode) {
  if (mode == "full") return CoStarMode::Full;
  if (mode == "simple") return CoStarMode::SimpleCycles;
  throw std::invalid_argument("mode must be 'full' or 'simple'");
}

const char* tile_kind(Tile::Kind k) {
  switch (k) {
    case Tile::Kind::Vertex: return "vertex";
    case Tile::Kind::Face: return "face";
    case Tile::Kind::Enclosing: return "enclosing";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Straight line triangle representations of plane graphs";

  static py::handle exc = py::exception<Error>(m, "Error", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = exc(py::str(e.what()));
      inst.attr("kind") = std::string(to_string(e.kind()));
      inst.attr("payload") = e.payload();
      inst.attr("line") = e.line();
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  py::class_<FlatAngleAssignment>(m, "FlatAngleAssignment")
      .def(py::init<>())
      .def(py::init<std::vector<std::pair<VertexId, FaceId>>>(), py::arg("pairs"))
      .def_property_readonly("pairs", &FlatAngleAssignment::pairs)
      .def("face_of", &FlatAngleAssignment::face_of)
      .def("__len__", &FlatAngleAssignment::size)
      .def("__eq__", [](const FlatAngleAssignment& a, const FlatAngleAssignment& b) { return a == b; })
      .def("__repr__", [](const FlatAngleAssignment& a) {
        return "FlatAngleAssignment(" + py::repr(py::cast(a.pairs())).cast<std::string>() + ")";
      });

  py::class_<SuspendedGraph>(m, "Graph")
      .def_static("parse", [](const std::string& text) { return to_suspended(parse_graph(text)); })
      .def_static("load", [](const std::string& path) { return to_suspended(parse_graph(read_file(path))); })
      .def_static(
          "from_rotation",
          [](RotationSystem rot, std::pair<VertexId, VertexId> outer, std::array<VertexId, 3> s) {
            return SuspendedGraph::make(PlaneGraph::from_rotation(std::move(rot), outer), s);
          },
          py::arg("rotation"), py::arg("outer"), py::arg("suspensions"))
      .def("serialize", [](const SuspendedGraph& g) { return serialize_graph(to_document(g)); })
      .def_property_readonly("num_vertices", [](const SuspendedGraph& g) { return g.graph.num_vertices(); })
      .def_property_readonly("num_edges", [](const SuspendedGraph& g) { return g.graph.num_edges(); })
      .def_property_readonly("num_faces", [](const SuspendedGraph& g) { return g.graph.num_faces(); })
      .def_property_readonly("outer_face", [](const SuspendedGraph& g) { return g.graph.outer_face(); })
      .def_property_readonly("suspensions", [](const SuspendedGraph& g) { return g.suspensions; })
      .def_property_readonly("rotation", [](const SuspendedGraph& g) { return g.graph.rotation(); })
      .def_property_readonly("edges", [](const SuspendedGraph& g) { return g.graph.edges(); })
      .def("face", [](const SuspendedGraph& g, FaceId f) { return g.graph.face_vertices(f); })
      .def("internally_3connected", [](const SuspendedGraph& g) { return check_internally_3connected(g); })
      .def("parse_faa", [](const SuspendedGraph& g, const std::string& text) { return parse_faa(text, g.graph); })
      .def("serialize_faa",
           [](const SuspendedGraph& g, const FlatAngleAssignment& faa) { return serialize_faa(faa, g.graph); });

  m.def(
      "faas",
      [](const SuspendedGraph& g, const std::string& corners, std::uint64_t budget) {
        return collect_faas(g, corner_spec(corners), budget);
      },
      py::arg("graph"), py::arg("corners") = "exact", py::arg("budget") = kDefaultEnumerationBudget,
      "Every flat angle assignment satisfying the vertex and face conditions.");

  m.def(
      "check",
      [](const SuspendedGraph& g, const FlatAngleAssignment& faa, const std::string& mode) {
        const AssignmentReport a = check_assignment_conditions(g, faa);
        py::dict out;
        out["cv"] = a.cv_ok;
        out["cf"] = a.cf_ok;
        out["violations"] = a.violations;
        const CoStarResult c = check_co_star(g, faa, co_star_mode(mode));
        out["co_star"] = c.ok;
        out["regions_checked"] = c.regions_checked;
        if (c.witness) {
          out["witness_walk"] = c.witness->walk;
          out["witness_corners"] = c.witness_corners;
        }
        out["ok"] = a.ok() && c.ok;
        return out;
      },
      py::arg("graph"), py::arg("faa"), py::arg("mode") = "full");

  m.def(
      "segments",
      [](const SuspendedGraph& g, const FlatAngleAssignment& faa) { return segment_paths(pseudosegments_of(g, faa)); },
      py::arg("graph"), py::arg("faa"), "Vertex paths of the pseudosegments.");

  m.def(
      "sltr",
      [](const SuspendedGraph& g, const FlatAngleAssignment& faa, std::optional<std::uint64_t> seed, double tol) {
        HarmonicWeights w;
        if (seed) {
          std::mt19937_64 rng(*seed);
          w = HarmonicWeights::random(g.graph, rng);
        }
        const GfaaEvaluation ev = evaluate_gfaa(g, faa, w, default_poles(), tol);
        py::dict out;
        out["good"] = ev.gfaa;
        out["reason"] = ev.reason;
        if (ev.family) out["segments"] = segment_paths(*ev.family);
        if (ev.drawing) {
          out["positions"] = points(ev.drawing->pos);
          out["residual"] = ev.drawing->residual;
          out["svg"] = render_svg(g.graph, *ev.drawing, ev.family ? &*ev.family : nullptr, {}, ev.gfaa);
        }
        if (ev.report) out["report"] = report_dict(*ev.report);
        return out;
      },
      py::arg("graph"), py::arg("faa") = FlatAngleAssignment{}, py::arg("seed") = py::none(),
      py::arg("tol") = kDefaultTolerance,
      "Harmonic drawing of the assignment and its verification. A seed draws random weights.");

  m.def(
      "schnyder",
      [](const SuspendedGraph& g) {
        const SchnyderWood w = compute_schnyder_wood(g);
        const SchnyderReport r = verify_schnyder(g, w);
        py::list edges;
        for (EdgeId e = 0; e < g.graph.num_edges(); ++e) {
          const auto [u, v] = g.graph.edge(e);
          edges.append(py::make_tuple(u, v, w.dart_label[2 * e], w.dart_label[2 * e + 1]));
        }
        py::dict out;
        out["suspensions"] = w.suspensions;
        out["edges"] = edges;
        out["ok"] = r.ok();
        out["violations"] = r.violations;
        return out;
      },
      py::arg("graph"), "Schnyder wood: per edge (u, v, label u->v, label v->u), 0 where not oriented.");

  m.def(
      "primal_dual",
      [](const SuspendedGraph& g) {
        const Dissection d = primal_dual_representation(g);
        const DissectionReport r = check_dissection(g, d);
        py::list tris;
        for (const auto& t : d.triangles)
          tris.append(py::make_tuple(tile_kind(t.tile.kind), t.tile.id,
                                     points({t.corners.begin(), t.corners.end()})));
        py::dict out;
        out["enclosing"] = points({d.enclosing.begin(), d.enclosing.end()});
        out["triangles"] = tris;
        out["ok"] = r.ok();
        out["area_error"] = r.area_error;
        out["svg"] = render_svg(d);
        out["text"] = serialize_dissection(d);
        return out;
      },
      py::arg("graph"), "Triangle dissection of the vertices and bounded faces.");

  m.def(
      "stretch",
      [](const std::string& arrangement_text, double tol) {
        const PseudosegmentArrangement a = to_arrangement(parse_arrangement(arrangement_text));
        const StretchCheck c = check_stretchable(a);
        py::dict out;
        out["stretchable"] = c.ok;
        if (!c.ok) {
          out["witness"] = c.witness;
          out["extremal"] = c.extremal;
          return out;
        }
        const StretchResult r = stretch(a, {}, tol);
        out["positions"] = points(r.pos);
        out["straightness"] = r.straightness;
        out["contacts_preserved"] = r.contacts_preserved();
        out["report"] = report_dict(r.report);
        return out;
      },
      py::arg("arrangement"), py::arg("tol") = kDefaultTolerance,
      "Stretch a pseudosegment arrangement given in the sltr-arrangement text format.");

  m.def(
      "medial_roundtrip",
      [](const SuspendedGraph& g) { return embeddings_isomorphic(invert_medial(medial_graph(g).graph).graph.graph, g.graph); },
      py::arg("graph"), "The inverse of the medial graph is isomorphic to the graph.");
}
