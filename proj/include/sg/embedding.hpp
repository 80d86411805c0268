#pragma once

#include <utility>
#include <vector>

#include "sg/graph.hpp"

namespace sg {

// A directed traversal of an edge: leaves `vertex` along `edge`.
struct Dart {
  int vertex = 0;
  int edge = 0;
};

inline bool operator==(const Dart& a, const Dart& b) {
  return a.vertex == b.vertex && a.edge == b.edge;
}

struct Face {
  std::vector<Dart> boundary;
  int sign = 1;  // product of edge signs along the boundary
};

// Signed graph together with a rotation system: for every vertex, a cyclic
// order of its incident edge ids. The rotation is data, not derived; its
// planarity is checked via Euler's formula when faces are traced.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  EmbeddedGraph(SignedGraph graph, std::vector<std::vector<int>> rotation);

  const SignedGraph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }

 private:
  SignedGraph graph_;
  std::vector<std::vector<int>> rotation_;
};

// Unsigned graph with a +1/-1 sign on every vertex (the dual-side object:
// vertices stand for faces of a primal graph). Carries a rotation system of
// its own so it can be dualized back. All stored edges have sign +1.
class VertexSignedGraph {
 public:
  VertexSignedGraph() = default;
  VertexSignedGraph(SignedGraph graph, std::vector<std::vector<int>> rotation,
                    std::vector<int> vertex_signs);

  const SignedGraph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  const std::vector<int>& vertex_signs() const { return vertex_signs_; }
  int vertex_sign(int v) const { return vertex_signs_[v]; }
  int negative_vertex_count() const;

 private:
  SignedGraph graph_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> vertex_signs_;
};

bool operator==(const VertexSignedGraph& a, const VertexSignedGraph& b);

// 0 if the number of negative vertices is even, 1 if odd.
int negative_vertex_count_parity(const VertexSignedGraph& g);

// Traces the faces of the embedding: successor of dart (u, e) arriving at v
// is (v, f) where f follows e in the rotation at v. Every dart lies on
// exactly one face. Throws input_error if the graph is disconnected or the
// face count fails Euler's formula V - E + F = 2.
std::vector<Face> trace_faces(const EmbeddedGraph& g);
std::vector<Face> trace_faces(const VertexSignedGraph& g);

// Faces traced without the Euler check; used by validity probes.
std::vector<Face> trace_faces_unchecked(const SignedGraph& g,
                                        const std::vector<std::vector<int>>& rotation);

bool euler_formula_holds(const EmbeddedGraph& g);
bool euler_formula_holds(const VertexSignedGraph& g);

// Dual of an embedded signed graph: one vertex per face carrying the face
// sign, one edge per primal edge. edge_map[e] is the dual edge id of primal
// edge e. Dual rotations follow face boundary order. Warns on stderr if the
// input is not 3-connected (the embedding, hence the dual, is then not
// unique); throws input_error on disconnected input or a failed Euler check.
struct SignedDual {
  VertexSignedGraph graph;
  std::vector<int> edge_map;
};
SignedDual dual(const EmbeddedGraph& g);

// Dual of the underlying embedding of a vertex-signed graph. Vertex signs of
// the input are ignored; the resulting edges are all +1 (signatures on the
// primal side are chosen separately, see signature_from_negative_vertices).
struct EmbeddedDual {
  EmbeddedGraph graph;
  std::vector<int> edge_map;
};
EmbeddedDual dual(const VertexSignedGraph& g);

}  // namespace sg
