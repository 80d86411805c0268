#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "sg/catalog.hpp"
#include "sg/coloring.hpp"
#include "sg/embedding.hpp"
#include "sg/graph.hpp"
#include "sg/io.hpp"
#include "sg/labeling.hpp"

using namespace sg;

namespace {

VertexSignedGraph host(const SignedGraph& g, const std::vector<int>& negatives) {
  std::vector<int> signs(g.n(), 1);
  for (int v : negatives) signs[v] = -1;
  return VertexSignedGraph(g, g.incidence(), signs);
}

// Ground truth by running the checker over all 3^m labelings.
struct BruteLabeling {
  bool weak_sat = false;
  bool strong_sat = false;
};

BruteLabeling brute_force_labelings(const VertexSignedGraph& h) {
  int m = h.graph().m();
  BruteLabeling out;
  EdgeLabeling L;
  L.labels.assign(m, kLabel0);
  long long total = 1;
  for (int e = 0; e < m; e++) total *= 3;
  for (long long step = 0; step < total; step++) {
    if (is_weak_labeling(h, L).ok) {
      out.weak_sat = true;
      if (is_strong_labeling(h, L).ok) {
        out.strong_sat = true;
        break;
      }
    }
    for (int e = 0; e < m; e++) {
      if (++L.labels[e] <= kLabelB) break;
      L.labels[e] = kLabel0;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("weak conditions on a single edge") {
  SignedGraph k2(2, {{0, 1, 1}});
  // Positive endpoints: d_a and d_b must be odd at a degree-1 vertex, which
  // two labels on one edge cannot satisfy.
  VertexSignedGraph pos = host(k2, {});
  for (std::uint8_t l : {kLabel0, kLabelA, kLabelB})
    CHECK_FALSE(is_weak_labeling(pos, {{l}}).ok);

  // Negative endpoints: the lone edge must be labeled 0.
  VertexSignedGraph neg = host(k2, {0, 1});
  CHECK(is_weak_labeling(neg, {{kLabel0}}).ok);
  CHECK_FALSE(is_weak_labeling(neg, {{kLabelA}}).ok);
  CHECK_FALSE(is_weak_labeling(neg, {{kLabelB}}).ok);
  // Not strong: the odd-degree endpoints carry only 0 edges.
  VertexCheck strong = is_strong_labeling(neg, {{kLabel0}});
  CHECK_FALSE(strong.ok);
  CHECK(strong.violating_vertex == 0);
}

TEST_CASE("all-zero labeling is weak on even-degree all-positive hosts") {
  VertexSignedGraph t = host(SignedGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}), {});
  EdgeLabeling zeros{{kLabel0, kLabel0, kLabel0}};
  CHECK(is_weak_labeling(t, zeros).ok);
  // Even degrees everywhere, so the strong condition adds nothing.
  CHECK(is_strong_labeling(t, zeros).ok);

  // Edges at vertex 0 are both labeled a, so its parities stay even and the
  // first violation appears at vertex 1 (one a, one 0).
  EdgeLabeling mixed{{kLabelA, kLabelA, kLabel0}};
  VertexCheck check = is_weak_labeling(t, mixed);
  CHECK_FALSE(check.ok);
  CHECK(check.violating_vertex == 1);
}

TEST_CASE("checkers validate their input") {
  VertexSignedGraph t = host(SignedGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}), {});
  CHECK_THROWS_AS(is_weak_labeling(t, {{kLabel0, kLabel0}}), input_error);
  CHECK_THROWS_AS(is_weak_labeling(t, {{kLabel0, kLabel0, 3}}), input_error);
  VertexSignedGraph odd = host(SignedGraph(2, {{0, 1, 1}}), {1});
  CHECK_THROWS_AS(is_weak_labeling(odd, {{kLabel0}}), input_error);
  CHECK_THROWS_AS(solve_weak_labeling(odd), input_error);
  CHECK_THROWS_AS(solve_strong_labeling(odd), input_error);
}

TEST_CASE("solver verdicts match the 3^m oracle on small hosts") {
  int instances = 0;
  for (const SignedGraph& g : connected_graphs_upto(5)) {
    if (g.m() > 9) continue;
    std::vector<std::vector<int>> negative_sets = {{}};
    if (g.n() >= 2) negative_sets.push_back({0, 1});
    if (g.n() >= 4) negative_sets.push_back({0, 1, 2, 3});
    for (const auto& negs : negative_sets) {
      VertexSignedGraph h = host(g, negs);
      BruteLabeling truth = brute_force_labelings(h);
      LabelingResult weak = solve_weak_labeling(h);
      LabelingResult strong = solve_strong_labeling(h);
      CHECK((weak.verdict == Verdict::kSat) == truth.weak_sat);
      CHECK((strong.verdict == Verdict::kSat) == truth.strong_sat);
      if (weak.verdict == Verdict::kSat)
        CHECK(is_weak_labeling(h, weak.labeling).ok);
      if (strong.verdict == Verdict::kSat)
        CHECK(is_strong_labeling(h, strong.labeling).ok);
      instances++;
    }
  }
  CHECK(instances > 60);
}

TEST_CASE("isolated negative vertices make every labeling fail") {
  SignedGraph g(4, {{0, 1, 1}});
  VertexSignedGraph h = host(g, {2, 3});
  CHECK(solve_weak_labeling(h).verdict == Verdict::kUnsat);
}

TEST_CASE("solver is deterministic across runs and thread counts") {
  VertexSignedGraph base = random_planar_cubic_host(14, 5);
  SolveOptions par;
  par.threads = 3;
  int sat_seen = 0;
  for (const auto& negs : {std::vector<int>{}, {0, 1}, {0, 2, 5, 9}}) {
    VertexSignedGraph h = with_negative_vertices(base, negs);
    LabelingResult a = solve_weak_labeling(h);
    LabelingResult b = solve_weak_labeling(h);
    CHECK(a.verdict == b.verdict);
    CHECK(a.nodes == b.nodes);
    LabelingResult c = solve_weak_labeling(h, par);
    CHECK(c.verdict == a.verdict);
    if (a.verdict == Verdict::kSat) {
      sat_seen++;
      CHECK(a.labeling.labels == b.labeling.labels);
      CHECK(c.labeling.labels == a.labeling.labels);
    }
    LabelingResult s1 = solve_strong_labeling(h);
    LabelingResult s3 = solve_strong_labeling(h, par);
    CHECK(s1.verdict == s3.verdict);
    if (s1.verdict == Verdict::kSat)
      CHECK(s1.labeling.labels == s3.labeling.labels);
  }
  CHECK(sat_seen >= 1);
}

TEST_CASE("t_join hits exactly the prescribed odd-degree set") {
  std::vector<SignedGraph> graphs = {
      SignedGraph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}}),
      prism(4).graph(), icosahedron().graph()};
  for (const SignedGraph& g : graphs) {
    std::vector<std::vector<int>> tsets = {{}, {0, 1}, {0, g.n() - 1}};
    if (g.n() >= 4) tsets.push_back({0, 1, 2, 3});
    for (const auto& T : tsets) {
      std::vector<int> join = t_join(g, T);
      std::vector<int> deg(g.n(), 0);
      std::set<int> used;
      for (int e : join) {
        CHECK(used.insert(e).second);
        deg[g.edge(e).u]++;
        deg[g.edge(e).v]++;
      }
      std::set<int> odd;
      for (int v = 0; v < g.n(); v++)
        if (deg[v] % 2) odd.insert(v);
      CHECK(odd == std::set<int>(T.begin(), T.end()));
    }
  }
}

TEST_CASE("t_join rejects bad inputs") {
  SignedGraph path(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK_THROWS_AS(t_join(path, {0}), input_error);
  CHECK_THROWS_AS(t_join(path, {0, 0}), input_error);
  CHECK_THROWS_AS(t_join(path, {0, 3}), input_error);
  SignedGraph split(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(t_join(split, {0, 1}), input_error);
}

TEST_CASE("signature_from_negative_vertices reproduces the vertex signs") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    VertexSignedGraph base = random_planar_cubic_host(12, seed);
    for (const auto& negs :
         {std::vector<int>{}, {0, 1}, {2, 5, 7, 9}, {0, 1, 2, 3, 4, 5}}) {
      VertexSignedGraph h = with_negative_vertices(base, negs);
      PrimalSignature primal = signature_from_negative_vertices(h);
      CHECK(signature_round_trip_matches(h, primal));
      CHECK(euler_formula_holds(primal.graph));
      // The edge map is a bijection onto the primal edges.
      std::set<int> image(primal.edge_map.begin(), primal.edge_map.end());
      CHECK(image.size() == primal.edge_map.size());
      CHECK(primal.graph.graph().m() == h.graph().m());
      if (negs.empty()) {
        for (const Edge& e : primal.graph.graph().edges()) CHECK(e.sign == 1);
      }
    }
  }
}

TEST_CASE("a tampered primal signature fails the round trip") {
  VertexSignedGraph h =
      with_negative_vertices(random_planar_cubic_host(10, 11), {1, 3});
  PrimalSignature primal = signature_from_negative_vertices(h);
  std::vector<Edge> edges = primal.graph.graph().edges();
  edges[0].sign = -edges[0].sign;
  PrimalSignature tampered;
  tampered.graph = EmbeddedGraph(SignedGraph(primal.graph.graph().n(), edges),
                                 primal.graph.rotation());
  tampered.edge_map = primal.edge_map;
  CHECK_FALSE(signature_round_trip_matches(h, tampered));
}

TEST_CASE("coloring converts to a weak labeling of the dual and back") {
  std::mt19937_64 rng(99);
  int sat_seen = 0;
  for (const EmbeddedGraph& base : small_catalog(12)) {
    for (int trial = 0; trial < 4; trial++) {
      EmbeddedGraph g = randomize_signature(base, rng);
      ColoringResult r = solve_coloring(g.graph(), 4);
      if (r.verdict != Verdict::kSat) continue;
      sat_seen++;
      SignedDual d = dual(g);
      EdgeLabeling L = coloring_to_labeling(g, d, r.coloring.colors);
      CHECK(is_weak_labeling(d.graph, L).ok);

      std::vector<int> colors = labeling_to_coloring(g, d, L);
      CHECK(is_proper(g.graph(), {4, false}, colors).proper);
      // Labels are invariant across the colorings compatible with L, so the
      // round trip is exact at the labeling level.
      EdgeLabeling back = coloring_to_labeling(g, d, colors);
      CHECK(back.labels == L.labels);
    }
  }
  CHECK(sat_seen >= 10);
}

TEST_CASE("labeling_to_coloring starts from vertex 0 with color 1") {
  EmbeddedGraph g = tetrahedron();
  ColoringResult r = solve_coloring(g.graph(), 4);
  REQUIRE(r.verdict == Verdict::kSat);
  SignedDual d = dual(g);
  EdgeLabeling L = coloring_to_labeling(g, d, r.coloring.colors);
  std::vector<int> colors = labeling_to_coloring(g, d, L);
  CHECK(colors[0] == 1);
}

TEST_CASE("converters reject invalid input") {
  EmbeddedGraph g = tetrahedron();
  SignedDual d = dual(g);
  // Improper coloring.
  CHECK_THROWS_AS(coloring_to_labeling(g, d, {1, 1, 1, 1}), input_error);
  // Labeling that is not weak on the dual.
  EdgeLabeling bad;
  bad.labels.assign(g.graph().m(), kLabelA);
  CHECK_THROWS_AS(labeling_to_coloring(g, d, bad), input_error);
}

TEST_CASE("weak solution found by the solver converts to a proper coloring") {
  // Drive the correspondence from the labeling side: solve on the dual, then
  // rebuild a coloring of the primal.
  std::mt19937_64 rng(123);
  int converted = 0;
  for (int trial = 0; trial < 8; trial++) {
    EmbeddedGraph g = randomize_signature(octahedron(), rng);
    SignedDual d = dual(g);
    LabelingResult lab = solve_weak_labeling(d.graph);
    ColoringResult col = solve_coloring(g.graph(), 4);
    CHECK((lab.verdict == Verdict::kSat) == (col.verdict == Verdict::kSat));
    if (lab.verdict != Verdict::kSat) continue;
    std::vector<int> colors = labeling_to_coloring(g, d, lab.labeling);
    CHECK(is_proper(g.graph(), {4, false}, colors).proper);
    converted++;
  }
  CHECK(converted >= 2);
}
