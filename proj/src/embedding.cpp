#include "sg/embedding.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <utility>

namespace sg {

namespace {

void check_rotation(const SignedGraph& g, const std::vector<std::vector<int>>& rotation) {
  if (static_cast<int>(rotation.size()) != g.n())
    throw input_error("rotation must list every vertex");
  for (int v = 0; v < g.n(); v++) {
    std::vector<int> got = rotation[v];
    std::sort(got.begin(), got.end());
    if (got != g.incidence()[v])
      throw input_error("rotation at vertex " + std::to_string(v) +
                        " is not a permutation of its incident edges");
  }
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(SignedGraph graph, std::vector<std::vector<int>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  check_rotation(graph_, rotation_);
}

VertexSignedGraph::VertexSignedGraph(SignedGraph graph,
                                     std::vector<std::vector<int>> rotation,
                                     std::vector<int> vertex_signs)
    : graph_(std::move(graph)),
      rotation_(std::move(rotation)),
      vertex_signs_(std::move(vertex_signs)) {
  check_rotation(graph_, rotation_);
  if (static_cast<int>(vertex_signs_.size()) != graph_.n())
    throw input_error("vertex sign list must cover every vertex");
  for (int s : vertex_signs_)
    if (s != 1 && s != -1) throw input_error("vertex sign must be +1 or -1");
  for (const Edge& e : graph_.edges())
    if (e.sign != 1)
      throw input_error("vertex-signed graphs carry unsigned (+1) edges");
}

int VertexSignedGraph::negative_vertex_count() const {
  int count = 0;
  for (int s : vertex_signs_)
    if (s < 0) count++;
  return count;
}

bool operator==(const VertexSignedGraph& a, const VertexSignedGraph& b) {
  return a.graph() == b.graph() && a.rotation() == b.rotation() &&
         a.vertex_signs() == b.vertex_signs();
}

int negative_vertex_count_parity(const VertexSignedGraph& g) {
  return g.negative_vertex_count() % 2;
}

std::vector<Face> trace_faces_unchecked(const SignedGraph& g,
                                        const std::vector<std::vector<int>>& rotation) {
  check_rotation(g, rotation);
  // Position of each edge in each endpoint's rotation.
  std::vector<std::vector<int>> pos(g.n());
  for (int v = 0; v < g.n(); v++) {
    pos[v].resize(g.m() > 0 ? g.m() : 0, -1);
    for (int i = 0; i < static_cast<int>(rotation[v].size()); i++)
      pos[v][rotation[v][i]] = i;
  }
  std::vector<std::vector<char>> seen(2, std::vector<char>(g.m(), 0));
  auto side = [&](int u, int e) { return u == g.edge(e).u ? 0 : 1; };
  std::vector<Face> faces;
  for (int e0 = 0; e0 < g.m(); e0++) {
    for (int u0 : {g.edge(e0).u, g.edge(e0).v}) {
      if (seen[side(u0, e0)][e0]) continue;
      Face face;
      int u = u0, e = e0;
      while (!seen[side(u, e)][e]) {
        seen[side(u, e)][e] = 1;
        face.boundary.push_back({u, e});
        face.sign *= g.edge(e).sign;
        int v = g.other(e, u);
        int i = pos[v][e];
        int next = rotation[v][(i + 1) % rotation[v].size()];
        u = v;
        e = next;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

namespace {

std::vector<Face> trace_checked(const SignedGraph& g,
                                const std::vector<std::vector<int>>& rotation) {
  if (g.n() <= 1 && g.m() == 0) return {};
  if (!is_connected(g)) throw input_error("face tracing requires a connected graph");
  std::vector<Face> faces = trace_faces_unchecked(g, rotation);
  int euler = g.n() - g.m() + static_cast<int>(faces.size());
  if (euler != 2)
    throw input_error("embedding is not planar: V - E + F = " + std::to_string(euler));
  return faces;
}

}  // namespace

std::vector<Face> trace_faces(const EmbeddedGraph& g) {
  return trace_checked(g.graph(), g.rotation());
}

std::vector<Face> trace_faces(const VertexSignedGraph& g) {
  return trace_checked(g.graph(), g.rotation());
}

namespace {

bool euler_holds(const SignedGraph& g, const std::vector<std::vector<int>>& rotation) {
  if (g.n() <= 1 && g.m() == 0) return true;
  if (!is_connected(g)) return false;
  std::vector<Face> faces = trace_faces_unchecked(g, rotation);
  return g.n() - g.m() + static_cast<int>(faces.size()) == 2;
}

struct DualCore {
  SignedGraph graph;          // dual edges, signs all +1
  std::vector<int> edge_map;  // primal edge -> dual edge
  std::vector<std::vector<int>> rotation;
  std::vector<int> face_signs;
};

DualCore dual_core(const SignedGraph& g, const std::vector<std::vector<int>>& rotation) {
  std::vector<Face> faces = trace_checked(g, rotation);
  std::vector<std::array<int, 2>> face_of(g.m(), {-1, -1});  // by edge side
  for (int f = 0; f < static_cast<int>(faces.size()); f++)
    for (const Dart& d : faces[f].boundary)
      face_of[d.edge][d.vertex == g.edge(d.edge).u ? 0 : 1] = f;

  std::vector<Edge> dual_edges;
  for (int e = 0; e < g.m(); e++) {
    if (face_of[e][0] == face_of[e][1])
      throw input_error("dual undefined: edge " + std::to_string(e) +
                        " is a bridge (both sides on one face)");
    dual_edges.push_back({face_of[e][0], face_of[e][1], 1});
  }
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : dual_edges)
    pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw input_error("dual undefined: two faces share more than one edge");
  DualCore core;
  core.graph = SignedGraph(static_cast<int>(faces.size()), dual_edges);
  core.edge_map.resize(g.m());
  for (int e = 0; e < g.m(); e++)
    core.edge_map[e] = core.graph.edge_id(face_of[e][0], face_of[e][1]);
  for (const Face& f : faces) {
    std::vector<int> rot;
    for (const Dart& d : f.boundary) rot.push_back(core.edge_map[d.edge]);
    core.rotation.push_back(std::move(rot));
    core.face_signs.push_back(f.sign);
  }
  return core;
}

}  // namespace

bool euler_formula_holds(const EmbeddedGraph& g) {
  return euler_holds(g.graph(), g.rotation());
}

bool euler_formula_holds(const VertexSignedGraph& g) {
  return euler_holds(g.graph(), g.rotation());
}

SignedDual dual(const EmbeddedGraph& g) {
  if (!is_three_connected(g.graph()))
    std::fprintf(stderr,
                 "warning: dual of a graph that is not 3-connected; the "
                 "embedding is not unique\n");
  DualCore core = dual_core(g.graph(), g.rotation());
  SignedDual result;
  result.graph = VertexSignedGraph(std::move(core.graph), std::move(core.rotation),
                                   std::move(core.face_signs));
  result.edge_map = std::move(core.edge_map);
  return result;
}

EmbeddedDual dual(const VertexSignedGraph& g) {
  DualCore core = dual_core(g.graph(), g.rotation());
  EmbeddedDual result;
  result.graph = EmbeddedGraph(std::move(core.graph), std::move(core.rotation));
  result.edge_map = std::move(core.edge_map);
  return result;
}

}  // namespace sg
