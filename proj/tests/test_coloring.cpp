#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "sg/catalog.hpp"
#include "sg/coloring.hpp"
#include "sg/constructions.hpp"
#include "sg/graph.hpp"

using namespace sg;

namespace {

SignedGraph triangle(int s01, int s02, int s12) {
  return SignedGraph(3, {{0, 1, s01}, {0, 2, s02}, {1, 2, s12}});
}

SignedGraph k4() {
  return SignedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1},
                         {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

}  // namespace

TEST_CASE("color sets by parity") {
  CHECK(ColorSet{4, false}.colors() == std::vector<int>{-2, -1, 1, 2});
  CHECK(ColorSet{3, false}.colors() == std::vector<int>{-1, 0, 1});
  CHECK(ColorSet{1, false}.colors() == std::vector<int>{0});
  CHECK(ColorSet{2, true}.colors() == std::vector<int>{-2, -1, 0, 1, 2});
  CHECK_THROWS_AS((ColorSet{0, false}.colors()), input_error);

  CHECK(ColorSet{4, false}.contains(2));
  CHECK_FALSE(ColorSet{4, false}.contains(0));
  CHECK_FALSE(ColorSet{4, false}.contains(3));
  CHECK(ColorSet{3, false}.contains(0));
  CHECK(ColorSet{2, true}.contains(0));
  CHECK_FALSE(ColorSet{2, true}.contains(3));
}

TEST_CASE("is_proper enforces the signed constraint") {
  // A positive edge forbids equal colors; a negative edge forbids opposite
  // colors.
  SignedGraph pos(2, {{0, 1, 1}});
  CHECK(is_proper(pos, {4, false}, {1, -1}).proper);
  CHECK_FALSE(is_proper(pos, {4, false}, {1, 1}).proper);

  SignedGraph neg(2, {{0, 1, -1}});
  CHECK(is_proper(neg, {4, false}, {1, 1}).proper);
  CHECK_FALSE(is_proper(neg, {4, false}, {1, -1}).proper);

  // Color 0 conflicts with itself across either edge sign.
  CHECK_FALSE(is_proper(SignedGraph(2, {{0, 1, -1}}), {3, false}, {0, 0}).proper);
}

TEST_CASE("is_proper reports the smallest violating edge") {
  SignedGraph g = triangle(1, 1, 1);
  ProperCheck check = is_proper(g, {4, false}, {2, 2, 2});
  CHECK_FALSE(check.proper);
  CHECK(check.violating_edge == 0);
  CHECK(is_proper(g, {4, false}, {1, -1, 2}).proper);
  CHECK(is_proper(g, {4, false}, {1, -1, 2}).violating_edge == -1);
}

TEST_CASE("is_proper validates the assignment") {
  SignedGraph g = triangle(1, 1, 1);
  CHECK_THROWS_AS(is_proper(g, {4, false}, {1, -1}), input_error);
  CHECK_THROWS_AS(is_proper(g, {4, false}, {1, -1, 0}), input_error);
  CHECK_THROWS_AS(is_proper(g, {4, false}, {1, -1, 3}), input_error);
}

TEST_CASE("solutions from the solver pass is_proper") {
  std::vector<SignedGraph> graphs = {
      triangle(1, 1, 1), triangle(-1, 1, 1), k4(),
      prism(4).graph(), octahedron().graph()};
  for (const SignedGraph& g : graphs) {
    for (int k = 3; k <= 4; k++) {
      ColoringResult r = solve_coloring(g, k);
      if (r.verdict == Verdict::kSat) {
        CHECK(r.coloring.k == k);
        CHECK(is_proper(g, {k, false}, r.coloring.colors).proper);
      }
    }
  }
}

TEST_CASE("known chromatic numbers") {
  // All-positive triangle: odd cycle, so two colors never suffice.
  ChromaticResult r = chromatic_number(triangle(1, 1, 1), 6);
  CHECK(r.found);
  CHECK(r.chi == 3);
  // All-negative triangle: constant color 1 works over {-1, 1}.
  r = chromatic_number(triangle(-1, -1, -1), 6);
  CHECK(r.found);
  CHECK(r.chi == 2);
  // One negative edge also admits a 2-coloring.
  r = chromatic_number(triangle(1, 1, -1), 6);
  CHECK(r.found);
  CHECK(r.chi == 2);
  // K4 needs four pairwise distinct colors.
  r = chromatic_number(k4(), 6);
  CHECK(r.found);
  CHECK(r.chi == 4);
  // K5 exceeds the bound: found stays false.
  SignedGraph k5(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {1, 2, 1},
                     {1, 3, 1}, {1, 4, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
  r = chromatic_number(k5, 4);
  CHECK_FALSE(r.found);
}

TEST_CASE("verdicts are invariant under switching") {
  SignedGraph g = triangle(1, -1, 1);
  for (int v = 0; v < 3; v++) {
    SignedGraph s = switch_vertex(g, v);
    for (int k = 1; k <= 4; k++) {
      CHECK(solve_coloring(g, k).verdict == solve_coloring(s, k).verdict);
    }
  }
}

TEST_CASE("solver verdicts match brute force on small graphs") {
  std::vector<SignedGraph> bases = {
      triangle(1, 1, 1),
      SignedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}),
      SignedGraph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}}),
      k4()};
  for (const SignedGraph& base : bases) {
    for (const SignedGraph& g : signatures_up_to_switching(base)) {
      for (int k = 1; k <= 4; k++) {
        OracleVerdict truth = brute_force_coloring(g, k);
        REQUIRE(truth != OracleVerdict::kRefused);
        Verdict got = solve_coloring(g, k).verdict;
        CHECK((truth == OracleVerdict::kSat) == (got == Verdict::kSat));
      }
    }
  }
}

TEST_CASE("brute force refuses oversized searches") {
  CHECK(brute_force_coloring(k4(), 4, 10) == OracleVerdict::kRefused);
  CHECK(brute_force_coloring(k4(), 4, 1000) == OracleVerdict::kSat);
}

TEST_CASE("solver is deterministic across runs and thread counts") {
  EmbeddedGraph g = prism(5);
  ColoringResult a = solve_coloring(g.graph(), 3);
  ColoringResult b = solve_coloring(g.graph(), 3);
  REQUIRE(a.verdict == Verdict::kSat);
  CHECK(a.coloring.colors == b.coloring.colors);
  CHECK(a.nodes == b.nodes);

  SolveOptions par;
  par.threads = 4;
  ColoringResult c = solve_coloring(g.graph(), 3, par);
  REQUIRE(c.verdict == Verdict::kSat);
  CHECK(c.coloring.colors == a.coloring.colors);
}

TEST_CASE("parallel solve agrees with sequential on unsat input") {
  SolveOptions par;
  par.threads = 4;
  CHECK(solve_coloring(k4(), 3, par).verdict == Verdict::kUnsat);
  CHECK(solve_coloring(triangle(1, 1, 1), 2, par).verdict == Verdict::kUnsat);
}

TEST_CASE("a tight time limit reports budget exhaustion") {
  // Large enough that the search cannot finish before the first deadline
  // probe fires.
  Counterexample cx = build_counterexample();
  SolveOptions opts;
  opts.time_limit_seconds = 1e-6;
  ColoringResult r = solve_coloring(cx.triangulation.graph(), 4, opts);
  CHECK(r.verdict == Verdict::kBudgetExhausted);
}

TEST_CASE("edge cases and invalid arguments") {
  CHECK(solve_coloring(SignedGraph(0, {}), 1).verdict == Verdict::kSat);
  ColoringResult single = solve_coloring(SignedGraph(1, {}), 1);
  CHECK(single.verdict == Verdict::kSat);
  CHECK(single.coloring.colors == std::vector<int>{0});
  CHECK_THROWS_AS(solve_coloring(k4(), 0), input_error);
  CHECK_THROWS_AS(solve_coloring(k4(), 31), input_error);
  CHECK_THROWS_AS(chromatic_number(k4(), 0), input_error);
}
