#include "sg/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace sg {

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw input_error("vertex count must be nonnegative");
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw input_error("edge endpoint out of range: (" + std::to_string(e.u) +
                        ", " + std::to_string(e.v) + ")");
    if (e.u == e.v) throw input_error("loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1)
      throw input_error("edge sign must be +1 or -1");
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges_.size(); i++)
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw input_error("parallel edge (" + std::to_string(edges_[i].u) + ", " +
                        std::to_string(edges_[i].v) + ")");
  inc_.resize(n_);
  for (int e = 0; e < m(); e++) {
    inc_[edges_[e].u].push_back(e);
    inc_[edges_[e].v].push_back(e);
  }
}

int SignedGraph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                             [](const Edge& e, const std::pair<int, int>& p) {
                               return e.u != p.first ? e.u < p.first : e.v < p.second;
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return -1;
  return static_cast<int>(it - edges_.begin());
}

int SignedGraph::other(int e, int u) const {
  const Edge& ed = edges_[e];
  return ed.u == u ? ed.v : ed.u;
}

void SignedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw input_error("unknown vertex id " + std::to_string(v));
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  return a.n() == b.n() && a.edges() == b.edges();
}

SignedGraph switch_vertex(const SignedGraph& g, int v) {
  g.check_vertex(v);
  std::vector<Edge> edges = g.edges();
  for (int e : g.incidence()[v]) edges[e].sign = -edges[e].sign;
  return SignedGraph(g.n(), std::move(edges));
}

int cycle_sign(const SignedGraph& g, const std::vector<int>& cycle) {
  if (cycle.empty()) throw input_error("empty cycle");
  int sign = 1;
  for (size_t i = 0; i < cycle.size(); i++) {
    int u = cycle[i];
    int v = cycle[(i + 1) % cycle.size()];
    g.check_vertex(u);
    g.check_vertex(v);
    int e = g.edge_id(u, v);
    if (e < 0)
      throw input_error("walk uses non-edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ")");
    sign *= g.edge(e).sign;
  }
  return sign;
}

namespace {

// BFS spanning forest from vertex 0 upward, neighbors visited in ascending
// vertex id. Returns per-vertex parent edge, -1 at roots.
std::vector<int> bfs_forest(const SignedGraph& g) {
  std::vector<int> parent_edge(g.n(), -1);
  std::vector<char> seen(g.n(), 0);
  std::queue<int> queue;
  for (int root = 0; root < g.n(); root++) {
    if (seen[root]) continue;
    seen[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      std::vector<std::pair<int, int>> nbrs;  // (vertex, edge)
      for (int e : g.incidence()[u]) nbrs.emplace_back(g.other(e, u), e);
      std::sort(nbrs.begin(), nbrs.end());
      for (auto [w, e] : nbrs) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent_edge[w] = e;
        queue.push(w);
      }
    }
  }
  return parent_edge;
}

// Sign of the tree path from v up to the forest root.
int root_path_sign(const SignedGraph& g, const std::vector<int>& parent_edge, int v) {
  int sign = 1;
  while (parent_edge[v] >= 0) {
    int e = parent_edge[v];
    sign *= g.edge(e).sign;
    v = g.other(e, v);
  }
  return sign;
}

}  // namespace

bool switch_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
  if (g1.n() != g2.n() || g1.m() != g2.m())
    throw input_error("switch_equivalent requires the same underlying graph");
  for (int e = 0; e < g1.m(); e++)
    if (g1.edge(e).u != g2.edge(e).u || g1.edge(e).v != g2.edge(e).v)
      throw input_error("switch_equivalent requires the same underlying graph");

  // Fundamental cycle of a non-tree edge uv: the edge plus the tree paths
  // from u and v to their common root. Shared path segments contribute
  // twice and cancel, so the product of the two root-path signs and the
  // edge sign is the cycle sign.
  std::vector<int> parent_edge = bfs_forest(g1);
  for (int e = 0; e < g1.m(); e++) {
    int u = g1.edge(e).u, v = g1.edge(e).v;
    if (parent_edge[u] == e || parent_edge[v] == e) continue;
    int s1 = g1.edge(e).sign * root_path_sign(g1, parent_edge, u) *
             root_path_sign(g1, parent_edge, v);
    int s2 = g2.edge(e).sign * root_path_sign(g2, parent_edge, u) *
             root_path_sign(g2, parent_edge, v);
    if (s1 != s2) return false;
  }
  return true;
}

namespace {

// Connectivity of the graph with the marked vertices removed.
bool connected_without(const SignedGraph& g, const std::vector<char>& removed) {
  int start = -1, alive = 0;
  for (int v = 0; v < g.n(); v++)
    if (!removed[v]) {
      alive++;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::queue<int> queue;
  seen[start] = 1;
  queue.push(start);
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int e : g.incidence()[u]) {
      int w = g.other(e, u);
      if (removed[w] || seen[w]) continue;
      seen[w] = 1;
      reached++;
      queue.push(w);
    }
  }
  return reached == alive;
}

}  // namespace

bool is_connected(const SignedGraph& g) {
  if (g.n() == 0) return true;
  return connected_without(g, std::vector<char>(g.n(), 0));
}

bool is_three_connected(const SignedGraph& g) {
  if (g.n() < 4) return false;
  std::vector<char> removed(g.n(), 0);
  if (!connected_without(g, removed)) return false;
  for (int a = 0; a < g.n(); a++) {
    removed[a] = 1;
    if (!connected_without(g, removed)) return false;
    for (int b = a + 1; b < g.n(); b++) {
      removed[b] = 1;
      if (!connected_without(g, removed)) return false;
      removed[b] = 0;
    }
    removed[a] = 0;
  }
  return true;
}

std::vector<int> vertex_bijection_from_edges(const SignedGraph& a, const SignedGraph& b,
                                             const std::vector<int>& edge_map) {
  if (a.n() != b.n() || a.m() != b.m() ||
      static_cast<int>(edge_map.size()) != a.m())
    throw internal_error("edge correspondence does not fit the two graphs");
  std::vector<char> hit(b.m(), 0);
  for (int e : edge_map) {
    if (e < 0 || e >= b.m() || hit[e])
      throw internal_error("edge correspondence is not a bijection");
    hit[e] = 1;
  }

  std::map<std::vector<int>, int> by_incidence;
  for (int v = 0; v < b.n(); v++) {
    if (!by_incidence.emplace(b.incidence()[v], v).second)
      throw internal_error("two vertices share an incident edge set");
  }
  std::vector<int> bijection(a.n());
  std::vector<char> used(b.n(), 0);
  for (int v = 0; v < a.n(); v++) {
    std::vector<int> image;
    for (int e : a.incidence()[v]) image.push_back(edge_map[e]);
    std::sort(image.begin(), image.end());
    auto it = by_incidence.find(image);
    if (it == by_incidence.end() || used[it->second])
      throw internal_error("edge correspondence induces no vertex bijection");
    bijection[v] = it->second;
    used[it->second] = 1;
  }
  for (int e = 0; e < a.m(); e++) {
    const Edge& ea = a.edge(e);
    const Edge& eb = b.edge(edge_map[e]);
    if (std::min(bijection[ea.u], bijection[ea.v]) != eb.u ||
        std::max(bijection[ea.u], bijection[ea.v]) != eb.v)
      throw internal_error("edge correspondence does not respect adjacency");
  }
  return bijection;
}

}  // namespace sg
