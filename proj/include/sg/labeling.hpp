#pragma once

#include <cstdint>
#include <vector>

#include "sg/coloring.hpp"
#include "sg/embedding.hpp"
#include "sg/graph.hpp"

namespace sg {

// Edge labels: 0, a, b.
enum : std::uint8_t { kLabel0 = 0, kLabelA = 1, kLabelB = 2 };

struct EdgeLabeling {
  std::vector<std::uint8_t> labels;  // per edge, values kLabel0/kLabelA/kLabelB
};

char label_char(std::uint8_t label);
std::uint8_t label_from_char(char c);

struct VertexCheck {
  bool ok = true;
  int violating_vertex = -1;  // smallest-id vertex violating a condition
};

// Weak labeling conditions at every vertex v, writing d_x(v) for the number
// of incident edges labeled x and d(v) for the degree:
//   (i)  d_0(v) == d(v) (mod 2)
//   (ii) d_a(v) == d_b(v) == d(v) (mod 2) at positive v,
//        d_a(v) == d_b(v) == d(v)+1 (mod 2) at negative v.
// Requires an even number of negative vertices (input_error otherwise).
VertexCheck is_weak_labeling(const VertexSignedGraph& h, const EdgeLabeling& L);

// Weak, and additionally d_0(v) < d(v) at every odd-degree vertex (no
// odd-degree vertex has all incident edges labeled 0).
VertexCheck is_strong_labeling(const VertexSignedGraph& h, const EdgeLabeling& L);

struct LabelingResult {
  Verdict verdict = Verdict::kUnsat;
  EdgeLabeling labeling;  // valid iff verdict == kSat
  long long nodes = 0;
  long long splits = 0;  // component decompositions taken during search
};

// Backtracking search with per-vertex parity propagation: once a vertex has
// as many unlabeled incident edges as unmet parity residues, the remaining
// edges are pinned to the deficient labels. Independent components of the
// unlabeled subgraph are solved separately (smallest first). Deterministic:
// a fixed static edge order with labels tried 0, a, b; threads > 1 splits on
// the first edge's label and reports the same first solution.
LabelingResult solve_weak_labeling(const VertexSignedGraph& h,
                                   const SolveOptions& opts = {});
LabelingResult solve_strong_labeling(const VertexSignedGraph& h,
                                     const SolveOptions& opts = {});

// Edge set whose odd-degree vertices are exactly T (|T| even, g connected).
// Construction: pair T ascending, connect each pair by a BFS path, take the
// symmetric difference of the paths.
std::vector<int> t_join(const SignedGraph& g, const std::vector<int>& T);
std::vector<int> t_join(const VertexSignedGraph& g, const std::vector<int>& T);

// Builds the primal graph of h (its embedded dual) and signs it so that the
// primal face signs reproduce h's vertex signs: edges dual to a T-join of
// h's negative vertices get sign -1, the rest +1. edge_map[e] is the primal
// edge id of h's edge e.
struct PrimalSignature {
  EmbeddedGraph graph;
  std::vector<int> edge_map;
};
PrimalSignature signature_from_negative_vertices(const VertexSignedGraph& h);

// Round-trip check on a primal signature: the face signs of primal.graph,
// read back through its dual and matched to h by the composed edge
// correspondence, must reproduce h's vertex signs exactly.
bool signature_round_trip_matches(const VertexSignedGraph& h,
                                  const PrimalSignature& primal);

// Labels the dual d.graph from a proper coloring of g over {-2,-1,1,2}:
// primal edge e = uv is labeled 0 if c(u) = -sign(e) * c(v), a if
// sign(e)*c(u)*c(v) = 2, and b if sign(e)*c(u)*c(v) = -2. The result is a
// weak labeling of d.graph.
EdgeLabeling coloring_to_labeling(const EmbeddedGraph& g, const SignedDual& d,
                                  const std::vector<int>& colors);

// Inverse direction: propagates colors over a BFS spanning tree of g rooted
// at vertex 0 (neighbors ascending, root color 1). For a tree edge e = vu
// with v already colored c, the child color is
//   label a:  sign(e) * (3*sgn(c) - c)
//   label b: -sign(e) * (3*sgn(c) - c)
//   label 0: -sign(e) * c
// Requires L weak on d.graph; the result is a proper 4-signed coloring of g.
std::vector<int> labeling_to_coloring(const EmbeddedGraph& g, const SignedDual& d,
                                      const EdgeLabeling& L);

}  // namespace sg
