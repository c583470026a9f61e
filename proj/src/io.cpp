#include "sltr/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sltr/error.hpp"
#include "text.hpp"

namespace sltr {

using text::fail;
using text::Line;
using text::to_double;
using text::to_int;

std::string format_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

namespace {

// Tokens after the ':' separator of "key v : a b c".
std::vector<VertexId> after_colon(const Line& l) {
  text::expect_min_size(l, 3);
  if (l.tokens[2] != ":") fail(l.number, "expected ':' after vertex id");
  std::vector<VertexId> out;
  for (size_t i = 3; i < l.tokens.size(); ++i) out.push_back(to_int(l, i));
  return out;
}

std::string join(const std::vector<VertexId>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace

GraphDocument parse_graph(std::string_view input) {
  const auto lines = text::tokenize(input);
  text::expect_header(lines, "sltr-graph");
  const size_t end = text::expect_end(lines);
  GraphDocument doc;
  int n = -1;
  std::vector<bool> have_rot;
  bool have_sus = false, have_outer = false;
  for (size_t i = 1; i < end; ++i) {
    const Line& l = lines[i];
    const std::string& key = l.tokens[0];
    if (key == "vertices") {
      text::expect_size(l, 2);
      if (n >= 0) fail(l.number, "duplicate 'vertices'");
      n = to_int(l, 1);
      if (n <= 0) fail(l.number, "vertex count must be positive");
      doc.rotation.assign(n, {});
      have_rot.assign(n, false);
    } else if (key == "rotation") {
      if (n < 0) fail(l.number, "'rotation' before 'vertices'");
      const int v = to_int(l, 1);
      if (v < 0 || v >= n) fail(l.number, "vertex " + std::to_string(v) + " out of range");
      if (have_rot[v]) fail(l.number, "duplicate rotation for vertex " + std::to_string(v));
      have_rot[v] = true;
      doc.rotation[v] = after_colon(l);
      for (VertexId u : doc.rotation[v])
        if (u < 0 || u >= n) fail(l.number, "neighbor " + std::to_string(u) + " out of range");
    } else if (key == "suspensions") {
      text::expect_size(l, 4);
      for (int k = 0; k < 3; ++k) doc.suspensions[k] = to_int(l, 1 + k);
      have_sus = true;
    } else if (key == "outer") {
      text::expect_size(l, 3);
      doc.outer = {to_int(l, 1), to_int(l, 2)};
      have_outer = true;
    } else if (key == "assign") {
      doc.assignments.emplace_back(to_int(l, 1), after_colon(l));
    } else if (key == "lambda") {
      text::expect_size(l, 3);
      doc.lambda.emplace_back(to_int(l, 1), to_double(l, 2));
    } else if (key == "lambda_vu") {
      text::expect_size(l, 4);
      doc.lambda_vu.emplace_back(to_int(l, 1), to_int(l, 2), to_double(l, 3));
    } else if (key == "poles") {
      text::expect_size(l, 7);
      std::array<double, 6> p{};
      for (int k = 0; k < 6; ++k) p[k] = to_double(l, 1 + k);
      doc.poles = p;
    } else {
      fail(l.number, "unknown key '" + key + "'");
    }
  }
  const int last = lines[end].number;
  if (n < 0) fail(last, "missing 'vertices'");
  for (int v = 0; v < n; ++v)
    if (!have_rot[v]) fail(last, "missing rotation for vertex " + std::to_string(v));
  if (!have_sus) fail(last, "missing 'suspensions'");
  if (!have_outer) fail(last, "missing 'outer'");
  return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
  std::ostringstream out;
  out << "sltr-graph " << doc.version << "\n";
  out << "vertices " << doc.rotation.size() << "\n";
  for (size_t v = 0; v < doc.rotation.size(); ++v) out << "rotation " << v << " : " << join(doc.rotation[v]) << "\n";
  out << "suspensions " << doc.suspensions[0] << " " << doc.suspensions[1] << " " << doc.suspensions[2] << "\n";
  out << "outer " << doc.outer.first << " " << doc.outer.second << "\n";
  for (const auto& [v, walk] : doc.assignments) out << "assign " << v << " : " << join(walk) << "\n";
  for (const auto& [v, x] : doc.lambda) out << "lambda " << v << " " << format_double(x) << "\n";
  for (const auto& [v, u, x] : doc.lambda_vu) out << "lambda_vu " << v << " " << u << " " << format_double(x) << "\n";
  if (doc.poles) {
    out << "poles";
    for (double x : *doc.poles) out << " " << format_double(x);
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

SuspendedGraph to_suspended(const GraphDocument& doc) {
  return SuspendedGraph::make(PlaneGraph::from_rotation(doc.rotation, doc.outer), doc.suspensions);
}

namespace {

FaceId resolve_face(const PlaneGraph& g, VertexId v, const std::vector<VertexId>& walk) {
  auto f = g.find_face(walk);
  if (!f)
    throw Error(ErrorKind::InvalidAssignment, "vertex " + std::to_string(v) + " names a walk that is not a face",
                {v});
  return *f;
}

}  // namespace

FlatAngleAssignment assignment_of(const GraphDocument& doc, const PlaneGraph& g) {
  std::vector<std::pair<VertexId, FaceId>> pairs;
  for (const auto& [v, walk] : doc.assignments) pairs.emplace_back(v, resolve_face(g, v, walk));
  return FlatAngleAssignment(std::move(pairs));
}

HarmonicWeights weights_of(const GraphDocument& doc) {
  HarmonicWeights w;
  for (const auto& [v, x] : doc.lambda) w.lambda[v] = x;
  for (const auto& [v, u, x] : doc.lambda_vu) w.lambda_vu[{v, u}] = x;
  return w;
}

PoleTriangle poles_of(const GraphDocument& doc) {
  if (!doc.poles) return default_poles();
  const auto& p = *doc.poles;
  return {Point{p[0], p[1]}, Point{p[2], p[3]}, Point{p[4], p[5]}};
}

GraphDocument to_document(const SuspendedGraph& g) {
  GraphDocument doc;
  doc.rotation = g.graph.rotation();
  doc.suspensions = g.suspensions;
  const Dart d = g.graph.dart_info(g.graph.face_darts(g.graph.outer_face()).front());
  doc.outer = {d.tail, d.head};
  return doc;
}

void set_assignment(GraphDocument& doc, const PlaneGraph& g, const FlatAngleAssignment& faa) {
  doc.assignments.clear();
  for (const auto& [v, f] : faa.pairs()) doc.assignments.emplace_back(v, g.canonical_face_walk(f));
}

FlatAngleAssignment parse_faa(std::string_view input, const PlaneGraph& g) {
  const auto lines = text::tokenize(input);
  text::expect_header(lines, "sltr-faa");
  const size_t end = text::expect_end(lines);
  std::vector<std::pair<VertexId, FaceId>> pairs;
  for (size_t i = 1; i < end; ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "assign") fail(l.number, "unknown key '" + l.tokens[0] + "'");
    const VertexId v = to_int(l, 1);
    const auto walk = after_colon(l);
    auto f = g.find_face(walk);
    if (!f) fail(l.number, "walk is not a face of the graph");
    pairs.emplace_back(v, *f);
  }
  return FlatAngleAssignment(std::move(pairs));
}

std::string serialize_faa(const FlatAngleAssignment& faa, const PlaneGraph& g) {
  std::string s = "sltr-faa 1\n";
  for (const auto& [v, f] : faa.pairs()) s += "assign " + std::to_string(v) + " : " + join(g.canonical_face_walk(f)) + "\n";
  return s + "end\n";
}

ArrangementDocument parse_arrangement(std::string_view input) {
  const auto lines = text::tokenize(input);
  text::expect_header(lines, "sltr-arrangement");
  const size_t end = text::expect_end(lines);
  ArrangementDocument doc;
  int n = -1;
  std::vector<bool> have_rot;
  bool have_outer = false;
  for (size_t i = 1; i < end; ++i) {
    const Line& l = lines[i];
    const std::string& key = l.tokens[0];
    if (key == "vertices") {
      text::expect_size(l, 2);
      if (n >= 0) fail(l.number, "duplicate 'vertices'");
      n = to_int(l, 1);
      if (n <= 0) fail(l.number, "vertex count must be positive");
      doc.rotation.assign(n, {});
      have_rot.assign(n, false);
    } else if (key == "rotation") {
      if (n < 0) fail(l.number, "'rotation' before 'vertices'");
      const int v = to_int(l, 1);
      if (v < 0 || v >= n) fail(l.number, "vertex " + std::to_string(v) + " out of range");
      if (have_rot[v]) fail(l.number, "duplicate rotation for vertex " + std::to_string(v));
      have_rot[v] = true;
      doc.rotation[v] = after_colon(l);
      for (VertexId u : doc.rotation[v])
        if (u < 0 || u >= n) fail(l.number, "neighbor " + std::to_string(u) + " out of range");
    } else if (key == "outer") {
      text::expect_size(l, 3);
      doc.outer = {to_int(l, 1), to_int(l, 2)};
      have_outer = true;
    } else if (key == "segment") {
      if (to_int(l, 1) != static_cast<int>(doc.segments.size())) fail(l.number, "segments must be numbered 0, 1, ...");
      doc.segments.push_back(after_colon(l));
      if (doc.segments.back().empty()) fail(l.number, "empty segment");
    } else {
      fail(l.number, "unknown key '" + key + "'");
    }
  }
  const int last = lines[end].number;
  if (n < 0) fail(last, "missing 'vertices'");
  for (int v = 0; v < n; ++v)
    if (!have_rot[v]) fail(last, "missing rotation for vertex " + std::to_string(v));
  if (!have_outer) fail(last, "missing 'outer'");
  if (doc.segments.empty()) fail(last, "missing 'segment'");
  return doc;
}

std::string serialize_arrangement(const ArrangementDocument& doc) {
  std::ostringstream out;
  out << "sltr-arrangement " << doc.version << "\n";
  out << "vertices " << doc.rotation.size() << "\n";
  for (size_t v = 0; v < doc.rotation.size(); ++v) out << "rotation " << v << " : " << join(doc.rotation[v]) << "\n";
  out << "outer " << doc.outer.first << " " << doc.outer.second << "\n";
  for (size_t i = 0; i < doc.segments.size(); ++i) out << "segment " << i << " : " << join(doc.segments[i]) << "\n";
  out << "end\n";
  return out.str();
}

PseudosegmentArrangement to_arrangement(const ArrangementDocument& doc) {
  PlaneGraph g = PlaneGraph::from_rotation(doc.rotation, doc.outer);
  for (const auto& seg : doc.segments)
    for (EdgeId e : seg)
      if (e < 0 || e >= g.num_edges())
        throw Error(ErrorKind::InvalidArrangement, "edge " + std::to_string(e) + " out of range", {e});
  return PseudosegmentArrangement::make(std::move(g), doc.segments);
}

ArrangementDocument to_document(const PseudosegmentArrangement& a) {
  ArrangementDocument doc;
  doc.rotation = a.graph.rotation();
  const Dart d = a.graph.dart_info(a.graph.face_darts(a.graph.outer_face()).front());
  doc.outer = {d.tail, d.head};
  for (const auto& s : a.family.segments) doc.segments.push_back(s.edges);
  return doc;
}

Drawing parse_drawing(std::string_view input) {
  const auto lines = text::tokenize(input);
  text::expect_header(lines, "sltr-drawing");
  const size_t end = text::expect_end(lines);
  Drawing d;
  int n = -1;
  std::vector<bool> have;
  bool have_poles = false;
  for (size_t i = 1; i < end; ++i) {
    const Line& l = lines[i];
    const std::string& key = l.tokens[0];
    if (key == "vertices") {
      text::expect_size(l, 2);
      n = to_int(l, 1);
      if (n <= 0) fail(l.number, "vertex count must be positive");
      d.pos.assign(n, {});
      have.assign(n, false);
    } else if (key == "pos") {
      text::expect_size(l, 4);
      const int v = to_int(l, 1);
      if (v < 0 || v >= n) fail(l.number, "vertex out of range");
      d.pos[v] = {to_double(l, 2), to_double(l, 3)};
      have[v] = true;
    } else if (key == "poles") {
      text::expect_size(l, 4);
      for (int k = 0; k < 3; ++k) d.poles[k] = to_int(l, 1 + k);
      have_poles = true;
    } else if (key == "residual") {
      text::expect_size(l, 2);
      d.residual = to_double(l, 1);
    } else {
      fail(l.number, "unknown key '" + key + "'");
    }
  }
  const int last = lines[end].number;
  if (n < 0) fail(last, "missing 'vertices'");
  if (std::find(have.begin(), have.end(), false) != have.end()) fail(last, "missing position");
  if (!have_poles) fail(last, "missing 'poles'");
  for (int k = 0; k < 3; ++k) {
    if (d.poles[k] < 0 || d.poles[k] >= n) fail(last, "pole out of range");
    d.pole_positions[k] = d.pos[d.poles[k]];
  }
  return d;
}

std::string serialize_drawing(const Drawing& d) {
  std::ostringstream out;
  out << "sltr-drawing 1\n";
  out << "vertices " << d.pos.size() << "\n";
  for (size_t v = 0; v < d.pos.size(); ++v)
    out << "pos " << v << " " << format_double(d.pos[v].x) << " " << format_double(d.pos[v].y) << "\n";
  out << "poles " << d.poles[0] << " " << d.poles[1] << " " << d.poles[2] << "\n";
  out << "residual " << format_double(d.residual) << "\n";
  out << "end\n";
  return out.str();
}

namespace {

std::string tile_name(const Tile& t) {
  switch (t.kind) {
    case Tile::Kind::Vertex: return "vertex " + std::to_string(t.id);
    case Tile::Kind::Face: return "face " + std::to_string(t.id);
    case Tile::Kind::Enclosing: break;
  }
  return "enclosing -1";
}

}  // namespace

std::string serialize_dissection(const Dissection& d) {
  std::string out = "sltr-dissection 1\nenclosing";
  for (const Point& p : d.enclosing) out += " " + format_double(p.x) + " " + format_double(p.y);
  out += "\n";
  for (const auto& t : d.triangles) {
    out += "triangle " + tile_name(t.tile) + " :";
    for (const Point& p : t.corners) out += " " + format_double(p.x) + " " + format_double(p.y);
    out += "\n";
  }
  for (const auto& c : d.contacts)
    out += std::string("contact ") + (c.kind == TileContact::Kind::Side ? "side " : "point ") + tile_name(c.a) + " " +
           tile_name(c.b) + "\n";
  return out + "end\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << content;
}

}  // namespace sltr
