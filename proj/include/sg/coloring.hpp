#pragma once

#include <vector>

#include "sg/graph.hpp"

namespace sg {

// Color set for k-signed colorings. The default variant has exactly k colors:
// {-k/2,...,-1, 1,...,k/2} for even k, {-(k-1)/2,...,0,...,(k-1)/2} for odd k
// (0 occurs iff k is odd). The alternative variant is the symmetric set
// {-k,...,0,...,k} with 2k+1 colors.
struct ColorSet {
  int k = 1;
  bool symmetric_range = false;  // true: {-k..k}; false: the k-element set

  std::vector<int> colors() const;
  bool contains(int c) const;
};

struct Coloring {
  int k = 1;
  std::vector<int> colors;  // per vertex
};

struct ProperCheck {
  bool proper = true;
  int violating_edge = -1;  // lexicographically smallest violating edge id
};

// Checks c(u) != sign(uv) * c(v) on every edge. The assignment must be total
// and every color must belong to cs (input_error otherwise).
ProperCheck is_proper(const SignedGraph& g, const ColorSet& cs,
                      const std::vector<int>& colors);

enum class Verdict { kSat, kUnsat, kBudgetExhausted };

struct SolveOptions {
  int threads = 1;
  double time_limit_seconds = -1.0;  // <= 0: no limit
};

struct ColoringResult {
  Verdict verdict = Verdict::kUnsat;
  Coloring coloring;     // valid iff verdict == kSat
  long long nodes = 0;   // search tree nodes visited
};

// Backtracking search for a proper coloring over the k-element color set.
// Vertices are tried in descending degree order (ties by id), colors in
// ascending numeric order, with forward checking; the first solution found
// under that order is returned, so results are deterministic. threads > 1
// splits on the first vertex's colors and still reports the same solution.
ColoringResult solve_coloring(const SignedGraph& g, int k,
                              const SolveOptions& opts = {});

struct ChromaticResult {
  bool found = false;  // false: every k <= k_max is unsat
  int chi = 0;
  long long nodes = 0;
};

// Smallest k in 1..k_max admitting a proper k-signed coloring. The k-element
// sets of different parity are incomparable, so every k is tried in turn.
ChromaticResult chromatic_number(const SignedGraph& g, int k_max,
                                 const SolveOptions& opts = {});

enum class OracleVerdict { kSat, kUnsat, kRefused };

// Plain exhaustive enumeration of all |colors|^n assignments, used as ground
// truth in tests. Refuses (kRefused) if the assignment count exceeds the
// budget.
OracleVerdict brute_force_coloring(const SignedGraph& g, int k,
                                   long long budget = 100000000);

}  // namespace sg
