#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sltr/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sltr::cli::run(args, out, err);
  return {code, out.str()};
}

std::string fx(const std::string& name) { return std::string(SLTR_FIXTURES) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sltr_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

bool has(const Run& r, const std::string& line) { return r.out.find(line) != std::string::npos; }

// K4 with one side subdivided: internally 3-connected, not 3-connected.
const char* kSubdivided = R"(sltr-graph 1
vertices 5
rotation 0 : 4 3 2
rotation 1 : 2 3 4
rotation 2 : 0 3 1
rotation 3 : 0 1 2
rotation 4 : 1 0
suspensions 0 1 2
outer 1 4
end
)";

}  // namespace

TEST_CASE("check") {
  CHECK(run({"check", fx("prism.graph"), "--faa", fx("faa/prism.faa")}).code == 0);
  const Run bad = run({"check", fx("faa/bad7_bad.graph")});
  CHECK(bad.code == 1);
  CHECK(has(bad, "witness.walk="));
  CHECK(has(bad, "co_star=0"));
  CHECK(run({"check", fx("faa/prism_quad_bad.graph"), "--mode", "simple"}).code == 1);
  CHECK(run({"check", fx("cube.graph")}).code == 0);
  CHECK(run({"check", fx("missing.graph")}).code == 2);
  CHECK(run({"check", fx("k4.graph"), "--mode", "bogus"}).code == 2);
}

TEST_CASE("segments") {
  const Run r = run({"segments", fx("prism.graph"), "--faa", fx("faa/prism.faa")});
  CHECK(r.code == 0);
  CHECK(has(r, "segments=6"));
  CHECK(run({"segments", fx("k4.graph")}).code == 2);
}

TEST_CASE("sltr") {
  const fs::path svg = scratch("prism.svg");
  fs::remove(svg);
  const Run r = run({"sltr", fx("prism.graph"), "--faa", fx("faa/prism.faa"), "--svg", svg.string()});
  CHECK(r.code == 0);
  CHECK(has(r, "result=sltr"));
  REQUIRE(fs::exists(svg));
  CHECK(sltr::read_file(svg.string()).rfind("<?xml", 0) == 0);
  CHECK(run({"sltr", fx("k4.graph"), "--seed", "5"}).code == 0);
  const Run cube = run({"sltr", fx("cube.graph")});
  CHECK(cube.code == 1);
  CHECK(has(cube, "no valid FAA"));
  CHECK(run({"sltr", fx("faa/bad7_bad.graph")}).code == 1);
}

TEST_CASE("search") {
  const Run cube = run({"search", fx("cube.graph")});
  CHECK(cube.code == 1);
  CHECK(has(cube, "result=no valid FAA"));
  CHECK(has(cube, "faas=0"));
  const Run prism = run({"search", fx("prism.graph")});
  CHECK(prism.code == 0);
  CHECK(has(prism, "gfaas=2"));
  CHECK(run({"search", fx("bad7.graph"), "--budget", "1"}).code == 2);
}

TEST_CASE("schnyder") {
  const Run r = run({"schnyder", fx("cube.graph"), "--all"});
  CHECK(r.code == 0);
  CHECK(has(r, "woods=2"));
  const fs::path sub = scratch("subdivided.graph");
  sltr::write_file(sub.string(), kSubdivided);
  CHECK(run({"schnyder", sub.string()}).code == 1);
}

TEST_CASE("primal-dual") {
  const fs::path svg = scratch("k4_pd.svg"), out = scratch("k4.dissection");
  const Run r = run({"primal-dual", fx("k4.graph"), "--svg", svg.string(), "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(has(r, "triangles=7"));
  CHECK(fs::exists(svg));
  CHECK(sltr::read_file(out.string()).rfind("sltr-dissection 1", 0) == 0);
  const fs::path sub = scratch("subdivided.graph");
  sltr::write_file(sub.string(), kSubdivided);
  CHECK(run({"primal-dual", sub.string()}).code == 1);
}

TEST_CASE("stretch") {
  const Run ok = run({"stretch", fx("stretchable.arr")});
  CHECK(ok.code == 0);
  CHECK(has(ok, "contacts_preserved=1"));
  const Run no = run({"stretch", fx("not_stretchable.arr")});
  CHECK(no.code == 1);
  CHECK(has(no, "witness.segments=0 1 2"));
  CHECK(run({"stretch", fx("k4.graph")}).code == 2);
}

TEST_CASE("oracle") {
  const Run r = run({"oracle", SLTR_FIXTURES, "--jobs", "4"});
  CHECK(r.code == 0);
  CHECK(has(r, "result=equivalent"));
  CHECK(r.out == run({"oracle", SLTR_FIXTURES}).out);
  CHECK(run({"oracle", fx("nowhere")}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
