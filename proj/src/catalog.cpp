#include "sg/catalog.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace sg {

namespace {

// Builds an embedded graph from per-vertex neighbor lists in rotation order.
// The SignedGraph and EmbeddedGraph constructors validate symmetry and the
// permutation structure.
EmbeddedGraph from_neighbor_rotations(const std::vector<std::vector<int>>& nbrs) {
  int n = static_cast<int>(nbrs.size());
  std::vector<Edge> edges;
  for (int v = 0; v < n; v++)
    for (int w : nbrs[v])
      if (v < w) edges.push_back({v, w, 1});
  SignedGraph g(n, edges);
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; v++)
    for (int w : nbrs[v]) rot[v].push_back(g.edge_id(v, w));
  return EmbeddedGraph(std::move(g), std::move(rot));
}

}  // namespace

EmbeddedGraph tetrahedron() {
  return from_neighbor_rotations({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

EmbeddedGraph prism(int n) {
  if (n < 3) throw input_error("prism needs at least 3 outer vertices");
  std::vector<std::vector<int>> nbrs(2 * n);
  for (int i = 0; i < n; i++) {
    int prev = (i + n - 1) % n, next = (i + 1) % n;
    nbrs[i] = {next, n + i, prev};
    nbrs[n + i] = {n + prev, i, n + next};
  }
  return from_neighbor_rotations(nbrs);
}

EmbeddedGraph antiprism(int n) {
  if (n < 3) throw input_error("antiprism needs at least 3 outer vertices");
  std::vector<std::vector<int>> nbrs(2 * n);
  for (int i = 0; i < n; i++) {
    int prev = (i + n - 1) % n, next = (i + 1) % n;
    nbrs[i] = {next, n + i, n + prev, prev};
    nbrs[n + i] = {n + prev, i, next, n + next};
  }
  return from_neighbor_rotations(nbrs);
}

EmbeddedGraph cube() { return prism(4); }

EmbeddedGraph octahedron() { return antiprism(3); }

EmbeddedGraph icosahedron() {
  auto U = [](int i) { return 1 + (i + 5) % 5; };
  auto L = [](int i) { return 6 + (i + 5) % 5; };
  std::vector<std::vector<int>> nbrs(12);
  nbrs[0] = {U(4), U(3), U(2), U(1), U(0)};
  for (int i = 0; i < 5; i++) {
    nbrs[U(i)] = {0, U(i + 1), L(i + 1), L(i), U(i - 1)};
    nbrs[L(i)] = {U(i - 1), U(i), L(i + 1), 11, L(i - 1)};
  }
  nbrs[11] = {L(0), L(1), L(2), L(3), L(4)};
  return from_neighbor_rotations(nbrs);
}

EmbeddedGraph dodecahedron() {
  SignedDual d = dual(icosahedron());
  return EmbeddedGraph(d.graph.graph(), d.graph.rotation());
}

std::vector<EmbeddedGraph> small_catalog(int max_n) {
  std::vector<EmbeddedGraph> all;
  all.push_back(tetrahedron());
  for (int s = 3; s <= 8; s++) {
    all.push_back(prism(s));
    all.push_back(antiprism(s));
  }
  all.push_back(icosahedron());
  all.push_back(dodecahedron());
  std::stable_sort(all.begin(), all.end(),
                   [](const EmbeddedGraph& a, const EmbeddedGraph& b) {
                     return a.graph().n() < b.graph().n();
                   });
  std::vector<EmbeddedGraph> kept;
  for (auto& g : all)
    if (g.graph().n() <= max_n) kept.push_back(std::move(g));
  return kept;
}

EmbeddedGraph randomize_signature(const EmbeddedGraph& g, std::mt19937_64& rng) {
  std::vector<Edge> edges = g.graph().edges();
  for (Edge& e : edges) e.sign = (rng() & 1) ? -1 : 1;
  return EmbeddedGraph(SignedGraph(g.graph().n(), std::move(edges)), g.rotation());
}

VertexSignedGraph random_cubic_host(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw input_error("cubic graphs need an even vertex count of at least 4");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000000; attempt++) {
    std::vector<int> darts(3 * n);
    for (int i = 0; i < 3 * n; i++) darts[i] = i;
    for (int i = 3 * n - 1; i > 0; i--)
      std::swap(darts[i], darts[rng() % (i + 1)]);

    std::vector<std::pair<int, int>> pairs;
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) {
      int u = darts[i] / 3, v = darts[i + 1] / 3;
      if (u == v) simple = false;
      else pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) continue;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;

    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v, 1});
    SignedGraph g(n, edges);
    if (!is_connected(g)) continue;
    std::vector<std::vector<int>> rot(g.incidence().begin(), g.incidence().end());
    return VertexSignedGraph(std::move(g), std::move(rot), std::vector<int>(n, 1));
  }
  throw internal_error("pairing model failed to produce a simple connected graph");
}

VertexSignedGraph random_planar_cubic_host(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw input_error("cubic graphs need an even vertex count of at least 4");
  std::mt19937_64 rng(seed);

  std::vector<std::vector<int>> nbrs = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  std::vector<std::array<int, 3>> faces;
  for (const Face& f : trace_faces(tetrahedron()))
    faces.push_back({f.boundary[0].vertex, f.boundary[1].vertex, f.boundary[2].vertex});

  int target = (n + 4) / 2;
  while (static_cast<int>(nbrs.size()) < target) {
    size_t pick = rng() % faces.size();
    auto [x, y, z] = faces[pick];
    int w = static_cast<int>(nbrs.size());
    nbrs.push_back({z, y, x});
    for (auto [corner, after] : {std::pair{x, y}, {y, z}, {z, x}}) {
      auto& r = nbrs[corner];
      r.insert(std::find(r.begin(), r.end(), after), w);
    }
    faces[pick] = {x, y, w};
    faces.push_back({y, z, w});
    faces.push_back({z, x, w});
  }

  SignedDual d = dual(from_neighbor_rotations(nbrs));
  return d.graph;
}

VertexSignedGraph with_negative_vertices(const VertexSignedGraph& h,
                                         const std::vector<int>& negatives) {
  std::vector<int> signs(h.graph().n(), 1);
  for (int v : negatives) {
    h.graph().check_vertex(v);
    if (signs[v] < 0) throw input_error("duplicate negative vertex");
    signs[v] = -1;
  }
  return VertexSignedGraph(h.graph(), h.rotation(), std::move(signs));
}

std::vector<SignedGraph> connected_graphs_upto(int max_n) {
  if (max_n > 6) throw input_error("graph enumeration is limited to 6 vertices");
  std::vector<SignedGraph> out;
  for (int n = 1; n <= max_n; n++) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++) slots.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); mask++) {
      std::vector<Edge> edges;
      for (size_t i = 0; i < slots.size(); i++)
        if (mask >> i & 1) edges.push_back({slots[i].first, slots[i].second, 1});
      SignedGraph g(n, edges);
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<SignedGraph> signatures_up_to_switching(const SignedGraph& g) {
  std::vector<char> in_forest(g.m(), 0);
  std::vector<char> seen(g.n(), 0);
  for (int root = 0; root < g.n(); root++) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      std::vector<std::pair<int, int>> nbrs;
      for (int e : g.incidence()[v]) nbrs.emplace_back(g.other(e, v), e);
      std::sort(nbrs.begin(), nbrs.end());
      for (auto [w, e] : nbrs)
        if (!seen[w]) {
          seen[w] = 1;
          in_forest[e] = 1;
          stack.push_back(w);
        }
    }
  }
  std::vector<int> cotree;
  for (int e = 0; e < g.m(); e++)
    if (!in_forest[e]) cotree.push_back(e);
  if (cotree.size() > 20)
    throw input_error("too many switching classes to enumerate");

  std::vector<SignedGraph> out;
  for (std::uint32_t mask = 0; mask < (1u << cotree.size()); mask++) {
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) e.sign = 1;
    for (size_t i = 0; i < cotree.size(); i++)
      if (mask >> i & 1) edges[cotree[i]].sign = -1;
    out.emplace_back(g.n(), std::move(edges));
  }
  return out;
}

}  // namespace sg
