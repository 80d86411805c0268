#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"
#include "sg/catalog.hpp"
#include "sg/coloring.hpp"
#include "sg/embedding.hpp"
#include "sg/factors.hpp"
#include "sg/graph.hpp"
#include "sg/io.hpp"
#include "sg/labeling.hpp"

using namespace sg;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string tool() {
  const char* env = std::getenv("SGTOOL");
  REQUIRE_MESSAGE(env != nullptr, "set SGTOOL to the sgtool binary path");
  return env;
}

RunResult run(const std::string& args) {
  std::string cmd = tool() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Report with the timing field stripped, for determinism comparisons.
json stable_report(const std::string& text) {
  json j = json::parse(text);
  j.erase("wall_time_s");
  return j;
}

}  // namespace

TEST_CASE("version flag") {
  RunResult r = run("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sgtool") != std::string::npos);
}

TEST_CASE("construct emits parsable graph documents") {
  RunResult r = run("construct gadget:3");
  CHECK(r.exit_code == 0);
  GraphDoc doc = graph_from_json(r.out);
  CHECK(doc.graph.n() == 7);
  CHECK(doc.graph.m() == 9);
  REQUIRE(doc.has_vertex_signs());
  CHECK(doc.vertex_signed().negative_vertex_count() == 3);

  RunResult tri = run("construct counterexample-triangulation");
  CHECK(tri.exit_code == 0);
  GraphDoc tdoc = graph_from_json(tri.out);
  CHECK(tdoc.graph.n() == 61);
  CHECK(tdoc.graph.m() == 177);
  REQUIRE(tdoc.has_rotation());
  int negative_edges = 0;
  for (const Edge& e : tdoc.graph.edges())
    if (e.sign < 0) negative_edges++;
  CHECK(negative_edges == 45);
  CHECK(euler_formula_holds(tdoc.embedded()));
}

TEST_CASE("random constructions are seed deterministic") {
  RunResult a = run("construct random-planar-cubic:10 --seed 4");
  RunResult b = run("construct random-planar-cubic:10 --seed 4");
  RunResult c = run("construct random-planar-cubic:10 --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);

  RunResult d = run("construct random-cubic:12 --seed 9");
  CHECK(d.exit_code == 0);
  GraphDoc doc = graph_from_json(d.out);
  for (int v = 0; v < doc.graph.n(); v++) CHECK(doc.graph.degree(v) == 3);
  CHECK(is_connected(doc.graph));
}

TEST_CASE("construct rejects unknown names and sizes") {
  CHECK(run("construct nonsense").exit_code == 2);
  CHECK(run("construct gadget:4").exit_code == 2);
  CHECK(run("construct random-cubic:7").exit_code == 2);
  CHECK(run("construct").exit_code == 2);
}

TEST_CASE("solve color-k writes a report and a checkable artifact") {
  RunResult make = run("construct tutte-signed -o cli_host.json");
  REQUIRE(make.exit_code == 0);
  RunResult r = run("solve -i cli_host.json --mode color-k --k 4 -o cli_colors.json");
  CHECK(r.exit_code == 1);
  json report = json::parse(r.out);
  CHECK(report["command"] == "solve");
  CHECK(report["mode"] == "color-k");
  CHECK(report["verdict"] == "sat");
  CHECK(report["input"]["path"] == "cli_host.json");
  CHECK(report["input"]["fnv1a64"].get<std::string>().size() == 16);
  CHECK(report["wall_time_s"].is_number());

  GraphDoc doc = graph_from_json(read_file("cli_host.json"));
  Coloring coloring = coloring_from_json(read_file("cli_colors.json"));
  CHECK(coloring.k == 4);
  CHECK(is_proper(doc.graph, {4, false}, coloring.colors).proper);
  std::remove("cli_colors.json");
}

TEST_CASE("solve reports are deterministic up to timing") {
  RunResult a = run("solve -i cli_host.json --mode color-k --k 4");
  RunResult b = run("solve -i cli_host.json --mode color-k --k 4");
  REQUIRE(a.exit_code == 1);
  CHECK(stable_report(a.out) == stable_report(b.out));
}

TEST_CASE("solve chromatic finds the smallest k") {
  write_file("cli_triangle.json",
             graph_to_json(SignedGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}})));
  RunResult r = run("solve -i cli_triangle.json --mode chromatic --max-k 6");
  CHECK(r.exit_code == 1);
  json report = json::parse(r.out);
  CHECK(report["found"] == true);
  CHECK(report["chi"] == 3);
  std::remove("cli_triangle.json");
}

TEST_CASE("solve accepts graph6 input") {
  write_file("cli_k3.g6", "Bw\n");
  RunResult r = run("solve -i cli_k3.g6 --mode chromatic --max-k 4");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out)["chi"] == 3);
  std::remove("cli_k3.g6");
}

TEST_CASE("solve weak-label emits a labeling that passes the checker") {
  write_file("cli_wl_host.json",
             graph_to_json(random_planar_cubic_host(12, 7)));
  RunResult r =
      run("solve -i cli_wl_host.json --mode weak-label -o cli_labels.json");
  CHECK(r.exit_code == 1);
  json report = json::parse(r.out);
  REQUIRE(report["verdict"] == "sat");
  CHECK(report["nodes"].is_number());

  GraphDoc doc = graph_from_json(read_file("cli_wl_host.json"));
  EdgeLabeling L = labeling_from_json(read_file("cli_labels.json"));
  CHECK(is_weak_labeling(doc.vertex_signed(), L).ok);
  std::remove("cli_wl_host.json");
  std::remove("cli_labels.json");
}

TEST_CASE("solve two-factors reports counts and a consistent certificate") {
  EmbeddedGraph p = prism(3);
  VertexSignedGraph h(p.graph(), p.rotation(), {-1, 1, 1, -1, 1, 1});
  write_file("cli_tf_host.json", graph_to_json(h));
  RunResult r =
      run("solve -i cli_tf_host.json --mode two-factors -o cli_factor.json");
  CHECK(r.exit_code == 1);
  json report = json::parse(r.out);
  CHECK(report["verdict"] == "sat");
  CHECK(report["two_factors"].get<int>() >= 1);
  CHECK(report["consistent"].get<int>() >= 1);

  json artifact = json::parse(read_file("cli_factor.json"));
  std::vector<int> edges = artifact["edges"].get<std::vector<int>>();
  TwoFactor f = two_factor_from_edges(h.graph(), edges);
  CHECK(is_consistent(h, f).ok);
  std::remove("cli_tf_host.json");
  std::remove("cli_factor.json");
}

TEST_CASE("solve argument validation") {
  CHECK(run("solve -i no_such_file.json --mode chromatic").exit_code == 2);
  CHECK(run("solve -i cli_host.json --mode nonsense").exit_code == 2);
  CHECK(run("solve -i cli_host.json --mode color-k --k 31").exit_code == 2);
  CHECK(run("solve -i cli_host.json").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("fast verification stages pass") {
  for (const std::string stage :
       {"construct", "two-factors", "replay", "gadget", "triangulation"}) {
    RunResult r = run("verify-counterexample --stage " + stage);
    CHECK(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["status"] == "pass");
    CHECK(report["stages"][0]["name"] == stage);
    CHECK(report["stages"][0]["status"] == "pass");
  }
}

TEST_CASE("two-factor verification reports the exhaustive count") {
  RunResult r = run("verify-counterexample --stage two-factors");
  REQUIRE(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["stages"][0]["two_factors"] == 960);
  CHECK(report["stages"][0]["consistent_found"] == false);
}

TEST_CASE("replay verification carries the forcing profile") {
  RunResult r = run("verify-counterexample --stage replay");
  REQUIRE(r.exit_code == 0);
  json stage = json::parse(r.out)["stages"][0];
  CHECK(stage["degree_valid_configs"] == 8);
  CHECK(stage["pool_sizes"] == json::array({1, 1, 0, 0, 1}));
  CHECK(stage["final_pool"] == 2);
  CHECK(stage["confirmed"] == true);
}

TEST_CASE("substituted input diverges the two-factor stage") {
  // This host admits a consistent 2-factor, so the stage's expected UNSAT
  // verdict cannot be reproduced from it.
  EmbeddedGraph p = prism(3);
  VertexSignedGraph h(p.graph(), p.rotation(), {-1, 1, 1, -1, 1, 1});
  write_file("cli_divergent.json", graph_to_json(h));
  RunResult r =
      run("verify-counterexample --stage two-factors -i cli_divergent.json");
  CHECK(r.exit_code == 3);
  json report = json::parse(r.out);
  CHECK(report["status"] == "divergence");
  std::remove("cli_divergent.json");
}

TEST_CASE("verify argument validation") {
  CHECK(run("verify-counterexample --stage nonsense").exit_code == 2);
  // --input only combines with the two-factor stage.
  CHECK(run("verify-counterexample --stage replay -i cli_host.json").exit_code == 2);
}

TEST_CASE("export between formats") {
  // Neither vertex nor edge signs can ride along in graph6.
  RunResult refuse = run("export -i cli_host.json --format graph6");
  CHECK(refuse.exit_code == 2);

  RunResult tri = run("construct counterexample-triangulation -o cli_tri.json");
  REQUIRE(tri.exit_code == 0);
  CHECK(run("export -i cli_tri.json --format graph6").exit_code == 2);
  RunResult g6 = run("export -i cli_tri.json --format graph6 --underlying");
  CHECK(g6.exit_code == 0);
  SignedGraph underlying = graph_from_graph6(g6.out);
  GraphDoc tdoc = graph_from_json(read_file("cli_tri.json"));
  CHECK(underlying.n() == tdoc.graph.n());
  CHECK(underlying.m() == tdoc.graph.m());
  for (int e = 0; e < underlying.m(); e++) {
    CHECK(underlying.edge(e).u == tdoc.graph.edge(e).u);
    CHECK(underlying.edge(e).v == tdoc.graph.edge(e).v);
  }

  RunResult dot = run("export -i cli_tri.json --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.find("graph G {") == 0);
  CHECK(dot.out.find("[style=dashed") != std::string::npos);

  RunResult json_again = run("export -i cli_tri.json --format json");
  CHECK(json_again.exit_code == 0);
  CHECK(json_again.out == read_file("cli_tri.json"));

  CHECK(run("export -i cli_tri.json --format nonsense").exit_code == 2);
  std::remove("cli_tri.json");
  std::remove("cli_host.json");
}
