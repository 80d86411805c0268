#pragma once

#include <functional>
#include <vector>

#include "sg/embedding.hpp"
#include "sg/graph.hpp"
#include "sg/labeling.hpp"

namespace sg {

// Spanning 2-regular subgraph of a cubic graph, with its decomposition into
// vertex-disjoint cycles. Cycles are listed in ascending order of their
// smallest vertex; each cycle starts at its smallest vertex and proceeds
// toward the smaller-id neighbor, so the decomposition is canonical.
struct TwoFactor {
  std::vector<int> edges;
  std::vector<std::vector<int>> cycles;
};

// Decomposes an edge set in which every vertex has degree exactly 2
// (input_error otherwise).
TwoFactor two_factor_from_edges(const SignedGraph& g, const std::vector<int>& edges);

// Enumerates every 2-factor of a cubic graph exactly once, as the complement
// of each perfect matching. Matchings are found by deterministic
// backtracking: always match the lowest uncovered vertex, partners in
// ascending neighbor order. The visitor returns false to stop early.
void enumerate_two_factors(const SignedGraph& g,
                           const std::function<bool(const TwoFactor&)>& visit);
void enumerate_two_factors(const VertexSignedGraph& h,
                           const std::function<bool(const TwoFactor&)>& visit);

struct CycleCheck {
  bool ok = true;
  int violating_cycle = -1;  // index into TwoFactor::cycles
};

// A 2-factor is consistent when every cycle contains an even number of
// positive vertices.
CycleCheck is_consistent(const VertexSignedGraph& h, const TwoFactor& f);

// Labels the non-factor edges 0 and walks each cycle from its lowest-id
// factor edge, which gets label a; the label alternates exactly when the walk
// passes a positive vertex. Consistency makes the alternation close up;
// the result is a strong labeling. Throws input_error on an inconsistent
// 2-factor.
EdgeLabeling strong_labeling_from_two_factor(const VertexSignedGraph& h,
                                             const TwoFactor& f);

// The a/b-labeled edges of a strong labeling of a cubic graph form a
// consistent 2-factor (input_error if L is not strong).
TwoFactor two_factor_from_strong_labeling(const VertexSignedGraph& h,
                                          const EdgeLabeling& L);

}  // namespace sg
