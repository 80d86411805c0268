#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sg {

// Bad caller-supplied data: malformed graphs, ids out of range, precondition
// violations. CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result produced by the library contradicts an invariant the library
// itself guarantees. Never caused by user input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  int u = 0;
  int v = 0;
  int sign = 1;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v && a.sign == b.sign;
}

// Simple undirected graph with a +1/-1 sign on every edge. Vertices are
// 0..n-1. Edges are normalized to u < v and stored sorted by (u, v), so an
// edge id is canonical for a given edge set regardless of input order.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  // Edge id for the pair {u, v}, or -1 if absent.
  int edge_id(int u, int v) const;
  // Endpoint of e other than u.
  int other(int e, int u) const;
  // Edge ids incident to each vertex, ascending.
  const std::vector<std::vector<int>>& incidence() const { return inc_; }
  int degree(int v) const { return static_cast<int>(inc_[v].size()); }

  void check_vertex(int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> inc_;
};

bool operator==(const SignedGraph& a, const SignedGraph& b);

// Flips the sign of every edge incident to v; the rest of the graph is
// unchanged. Involution: switching the same vertex twice restores the input.
SignedGraph switch_vertex(const SignedGraph& g, int v);

// Product of edge signs along a closed walk given as a vertex sequence
// (the closing edge back to the start is implied). Throws input_error if a
// consecutive pair is not an edge.
int cycle_sign(const SignedGraph& g, const std::vector<int>& cycle);

// True iff the two signatures give every cycle the same sign. Requires the
// same underlying graph (vertex count and edge pairs); compares signs on a
// fundamental cycle basis from a BFS spanning forest (root 0, neighbors in
// ascending order).
bool switch_equivalent(const SignedGraph& g1, const SignedGraph& g2);

bool is_connected(const SignedGraph& g);

// Vertex connectivity >= 3, by brute force over removed vertex pairs.
bool is_three_connected(const SignedGraph& g);

// Given a bijection edge_map between the edges of a and b, returns the unique
// vertex bijection under which edge_map preserves incidence: vertex u of a
// maps to the vertex of b whose incident edge set is the image of u's.
// Throws internal_error if no such bijection exists, so a successful return
// certifies an isomorphism of the underlying graphs.
std::vector<int> vertex_bijection_from_edges(const SignedGraph& a, const SignedGraph& b,
                                             const std::vector<int>& edge_map);

}  // namespace sg
