#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qsymkit/io.hpp"

using namespace qsym;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / "qsymkit_cli_test";
  fs::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

io::Json report(const std::string& path) { return io::read_json_file(path); }

// Every element in a report re-parses, from JSON and from text, to itself.
void check_roundtrip(const io::Json& r) {
  for (const auto& o : r["outputs"]) {
    io::AnyElement e = io::element_from_json(o["element"]);
    CHECK(io::to_json(e) == o["element"]);
    CHECK(io::parse_element_text(o["text"].get<std::string>()) == e);
  }
}

}  // namespace

TEST_CASE("expand: Schur function in power sums") {
  std::string json = (scratch() / "schur.json").string();
  Run r = run({"expand", "--family", "schur", "--lambda", "3,3", "--basis", "p", "--json", json});
  CHECK(r.code == 0);
  CHECK(r.out.find("- 3*p[2,2,2]/z") != std::string::npos);
  check_roundtrip(report(json));
}

TEST_CASE("expand: a chain gives h_n; plain view") {
  std::string poset = write("chain4.json", R"({"n":4,"covers":[[1,2],[2,3],[3,4]]})");
  Run r = run({"expand", "--kp", poset, "--basis", "h"});
  CHECK(r.code == 0);
  CHECK(r.out == "K_P: h[4]\n");
  std::string json = (scratch() / "chain.json").string();
  r = run({"--plain", "expand", "--kp", poset, "--json", json});
  CHECK(r.out.find("1/4*Psi[4]") != std::string::npos);
  check_roundtrip(report(json));
}

TEST_CASE("kp, family and convert round trip") {
  std::string poset = write("v.json", R"({"n":3,"covers":[[1,3],[2,3]]})");
  std::string graph = write("g.json", R"({"n":4,"edges":[[1,2],[1,3],[4,2],[4,3]]})");
  std::string json = (scratch() / "out.json").string();
  for (std::vector<std::string> args : {
           std::vector<std::string>{"kp", "--poset", poset, "--route", "all"},
           {"kp", "--poset", poset, "--weights", "1,2,1", "--basis", "M"},
           {"family", "chromatic", "--graph", graph, "--check"},
           {"family", "llt", "--graph", graph, "--check"},
           {"family", "bpoly", "--graph", graph, "--check"},
           {"family", "tutte", "--graph", graph, "--check"},
           {"family", "matroid", "--uniform", "4,2", "--check"},
           {"family", "eulerian", "--n", "4", "--check"},
           {"family", "cycle-eulerian", "--n", "4", "--check"},
           {"family", "schur", "--lambda", "3,1", "--check"},
           {"convert", "--text", "Psi[2,1] + Psi[1,2]", "--basis", "s"},
           {"convert", "--text", "s[2,1]", "--basis", "F"},
       }) {
    args.insert(args.end(), {"--json", json});
    Run r = run(args);
    INFO(args[0] << " " << args[1] << "\n" << r.out << r.err);
    CHECK(r.code == 0);
    io::Json rep = report(json);
    CHECK(rep.contains("inputs_digest"));
    CHECK_FALSE(rep.contains("wall_seconds"));
    check_roundtrip(rep);
  }
  // the fixture graph's non-unimodal Psi121 coefficient
  Run r = run({"family", "chromatic", "--graph", graph, "--check"});
  CHECK(r.out.find("4 + 4*q + 4*q^3 + 4*q^4") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  std::string a = (scratch() / "a.json").string(), b = (scratch() / "b.json").string();
  run({"search-positivity", "--n", "4", "--trials", "80", "--seed", "5", "--json", a});
  run({"search-positivity", "--n", "4", "--trials", "80", "--seed", "5", "--json", b});
  CHECK(io::read_file(a) == io::read_file(b));
  run({"search-positivity", "--n", "4", "--trials", "80", "--seed", "6", "--json", b});
  CHECK(report(a)["inputs_digest"] != report(b)["inputs_digest"]);
  run({"search-positivity", "--n", "4", "--trials", "80", "--seed", "5", "--json", b, "--timing"});
  CHECK(report(a)["inputs_digest"] == report(b)["inputs_digest"]);
  CHECK(report(b).contains("wall_seconds"));
}

TEST_CASE("search-positivity on the built-in combinations") {
  std::string json = (scratch() / "cx.json").string();
  Run r = run({"search-positivity", "--builtin", "counterexamples", "--coeffs", "2,3,2,0", "--json", json});
  CHECK(r.code == 0);
  CHECK(r.out.find("combination h: 2*h[4] + 4*h[3,1] - h[2,2] + 2*h[2,1,1]") != std::string::npos);
  io::Json rep = report(json);
  check_roundtrip(rep);
  CHECK(rep["checks"][0]["status"] == "report");
  CHECK(rep["checks"][0]["witness"]["negative"][0]["index"] == io::Json::array({2, 2}));

  r = run({"search-positivity", "--builtin", "counterexamples-corrected", "--coeffs", "1,3,1,3"});
  CHECK(r.out.find("combination s: 8*s[4] + 5*s[3,1] - s[2,2] + s[2,1,1]") != std::string::npos);
  r = run({"search-positivity", "--builtin", "chains"});
  CHECK(r.out.find("pass    combination  Schur-positive, h-positive, p-positive") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "bases", "--n", "1"}).code == 0);
  CHECK(run({"verify", "cons", "--n", "4"}).code == 0);
  CHECK(run({"verify", "nope"}).code == 2);
}

TEST_CASE("input errors exit with 2 and say where") {
  std::string bad = write("bad.json", "{\n  \"n\": 2,\n  \"covers\": [[1,2],]\n}");
  Run r = run({"kp", "--poset", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"kp", "--poset", "/nonexistent/p.json"}).code == 2);
  CHECK(run({"expand"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"convert", "--text", "Psi[2,1]", "--basis", "s"}).code == 2);  // not symmetric
  CHECK(run({"search-positivity", "--n", "4"}).code == 2);                   // random search needs a seed
  CHECK(run({"--help"}).code == 0);
}
