#include "sg/constructions.hpp"

#include <algorithm>
#include <utility>

#include "sg/catalog.hpp"

namespace sg {

Gadget build_gadget(int k) {
  if (k < 3 || k % 2 == 0)
    throw input_error("gadget degree must be odd and at least 3");
  int center = 2 * k;
  std::vector<Edge> edges;
  for (int i = 0; i < 2 * k; i++) edges.push_back({i, (i + 1) % (2 * k), 1});
  for (int i = 0; i < k; i++) edges.push_back({2 * i + 1, center, 1});
  SignedGraph g(2 * k + 1, edges);

  std::vector<std::vector<int>> rot(2 * k + 1);
  for (int i = 0; i < 2 * k; i++) {
    int next = g.edge_id(i, (i + 1) % (2 * k));
    int prev = g.edge_id(i, (i + 2 * k - 1) % (2 * k));
    if (i % 2 == 0) rot[i] = {next, prev};
    else rot[i] = {next, g.edge_id(i, center), prev};
  }
  for (int i = 0; i < k; i++) rot[center].push_back(g.edge_id(2 * i + 1, center));

  std::vector<int> signs(2 * k + 1, 1);
  for (int i = 1; i < 2 * k; i += 2) signs[i] = -1;

  Gadget out;
  out.graph = VertexSignedGraph(std::move(g), std::move(rot), std::move(signs));
  for (int i = 0; i < k; i++) out.attachment_points.push_back(2 * i);
  out.k = k;
  return out;
}

namespace {

struct GadgetPlan {
  std::vector<int> ring;  // 2k ids, even positions are attachments
  int center = -1;
  int host_vertex = -1;
  int k = 0;
};

// Shared assembly for both installation entry points. new_u/new_v give the
// endpoint replacements of every host edge (pendant targets at replaced
// vertices); vertex_of maps a kept host vertex to its new id.
GadgetInstall assemble(const VertexSignedGraph& h, const std::vector<GadgetPlan>& plans,
                       const std::vector<int>& new_u, const std::vector<int>& new_v,
                       const std::vector<int>& vertex_of, int total_vertices) {
  const SignedGraph& hg = h.graph();
  std::vector<Edge> edges;
  for (int e = 0; e < hg.m(); e++) edges.push_back({new_u[e], new_v[e], 1});
  for (const GadgetPlan& p : plans) {
    int len = 2 * p.k;
    for (int i = 0; i < len; i++) edges.push_back({p.ring[i], p.ring[(i + 1) % len], 1});
    for (int i = 0; i < p.k; i++) edges.push_back({p.ring[2 * i + 1], p.center, 1});
  }
  SignedGraph g(total_vertices, edges);

  std::vector<int> edge_map(hg.m());
  for (int e = 0; e < hg.m(); e++) edge_map[e] = g.edge_id(new_u[e], new_v[e]);

  std::vector<std::vector<int>> rot(total_vertices);
  std::vector<int> signs(total_vertices, 1);
  std::vector<char> replaced(hg.n(), 0);
  for (const GadgetPlan& p : plans) replaced[p.host_vertex] = 1;
  for (int v = 0; v < hg.n(); v++) {
    if (replaced[v]) continue;
    for (int e : h.rotation()[v]) rot[vertex_of[v]].push_back(edge_map[e]);
    signs[vertex_of[v]] = h.vertex_sign(v);
  }
  for (const GadgetPlan& p : plans) {
    int len = 2 * p.k;
    const std::vector<int>& host_rot = h.rotation()[p.host_vertex];
    for (int i = 0; i < len; i++) {
      int next = g.edge_id(p.ring[i], p.ring[(i + 1) % len]);
      int prev = g.edge_id(p.ring[i], p.ring[(i + len - 1) % len]);
      if (i % 2 == 0) rot[p.ring[i]] = {edge_map[host_rot[i / 2]], next, prev};
      else {
        rot[p.ring[i]] = {next, g.edge_id(p.ring[i], p.center), prev};
        signs[p.ring[i]] = -1;
      }
    }
    for (int i = 0; i < p.k; i++)
      rot[p.center].push_back(g.edge_id(p.ring[2 * i + 1], p.center));
  }

  GadgetInstall out;
  out.graph = VertexSignedGraph(std::move(g), std::move(rot), std::move(signs));
  for (const GadgetPlan& p : plans) {
    GadgetRegion region;
    region.vertices = p.ring;
    region.vertices.push_back(p.center);
    std::sort(region.vertices.begin(), region.vertices.end());
    for (int i = 0; i < p.k; i++)
      region.pendant_edges.push_back(edge_map[h.rotation()[p.host_vertex][i]]);
    region.k = p.k;
    region.host_vertex = p.host_vertex;
    out.regions.push_back(std::move(region));
  }
  out.edge_map = std::move(edge_map);
  return out;
}

// gadget_ids[j] lists the 2k+1 ids of the j-th target's gadget, ring slots
// first (even slots are the attachments) and the center last.
GadgetInstall install_gadgets(const VertexSignedGraph& h,
                              const std::vector<int>& targets,
                              const std::vector<int>& vertex_of,
                              const std::vector<std::vector<int>>& gadget_ids,
                              int total_vertices) {
  const SignedGraph& hg = h.graph();
  std::vector<int> new_u(hg.m()), new_v(hg.m());
  for (int e = 0; e < hg.m(); e++) {
    new_u[e] = vertex_of[hg.edge(e).u];
    new_v[e] = vertex_of[hg.edge(e).v];
  }
  std::vector<GadgetPlan> plans;
  for (size_t j = 0; j < targets.size(); j++) {
    int v = targets[j];
    int deg = hg.degree(v);
    if (h.vertex_sign(v) >= 0) throw input_error("vertex is not negative");
    if (deg % 2 == 0 || deg < 3)
      throw input_error("replaced vertices need odd degree at least 3");
    GadgetPlan p;
    p.k = deg;
    p.host_vertex = v;
    p.ring.assign(gadget_ids[j].begin(), gadget_ids[j].end() - 1);
    p.center = gadget_ids[j].back();
    const std::vector<int>& host_rot = h.rotation()[v];
    for (int i = 0; i < deg; i++) {
      int e = host_rot[i];
      (hg.edge(e).u == v ? new_u[e] : new_v[e]) = p.ring[2 * i];
    }
    plans.push_back(std::move(p));
  }
  return assemble(h, plans, new_u, new_v, vertex_of, total_vertices);
}

}  // namespace

GadgetInstall replace_vertex_with_gadget(const VertexSignedGraph& h, int v) {
  h.graph().check_vertex(v);
  int n = h.graph().n(), deg = h.graph().degree(v);
  std::vector<int> vertex_of(n);
  for (int u = 0; u < n; u++) vertex_of[u] = u;
  // Ring slot 0 takes over id v; the remaining gadget vertices go to the top.
  std::vector<int> ids = {v};
  for (int i = 0; i < 2 * deg; i++) ids.push_back(n + i);
  return install_gadgets(h, {v}, vertex_of, {ids}, n + 2 * deg);
}

GadgetInstall replace_all_negative_vertices(const VertexSignedGraph& h) {
  std::vector<int> targets;
  for (int v = 0; v < h.graph().n(); v++)
    if (h.vertex_sign(v) < 0) targets.push_back(v);
  std::vector<int> vertex_of(h.graph().n(), -1);
  int next = 0;
  for (int v = 0; v < h.graph().n(); v++)
    if (h.vertex_sign(v) >= 0) vertex_of[v] = next++;
  std::vector<std::vector<int>> gadget_ids;
  for (int v : targets) {
    std::vector<int> ids;
    for (int i = 0; i <= 2 * h.graph().degree(v); i++) ids.push_back(next++);
    gadget_ids.push_back(std::move(ids));
  }
  return install_gadgets(h, targets, vertex_of, gadget_ids, next);
}

ContractResult contract_gadget(const VertexSignedGraph& h, const GadgetRegion& region) {
  const SignedGraph& g = h.graph();
  int size = 2 * region.k + 1;
  if (region.k < 3 || static_cast<int>(region.vertices.size()) != size)
    throw input_error("region does not describe an installed gadget");
  std::vector<char> in_region(g.n(), 0);
  for (int v : region.vertices) {
    g.check_vertex(v);
    if (in_region[v]) throw input_error("region lists a vertex twice");
    in_region[v] = 1;
  }
  if (static_cast<int>(region.pendant_edges.size()) != region.k)
    throw input_error("region needs one pendant edge per attachment");
  std::vector<char> pendant(g.m(), 0);
  for (int e : region.pendant_edges) {
    if (e < 0 || e >= g.m()) throw input_error("edge id out of range");
    if (in_region[g.edge(e).u] == in_region[g.edge(e).v])
      throw input_error("pendant edge must leave the region");
    pendant[e] = 1;
  }
  for (int v : region.vertices)
    for (int e : g.incidence()[v])
      if (!pendant[e] && !(in_region[g.edge(e).u] && in_region[g.edge(e).v]))
        throw input_error("region has a stray incident edge");

  // The contracted vertex takes the lowest region id; the other region ids
  // disappear and everything above shifts down.
  int anchor = region.vertices[0];
  std::vector<int> vmap(g.n());
  int next = 0;
  for (int v = 0; v < g.n(); v++)
    if (!in_region[v] || v == anchor) vmap[v] = next++;
  for (int v : region.vertices) vmap[v] = vmap[anchor];

  std::vector<Edge> edges;
  std::vector<int> kept_edges;
  for (int e = 0; e < g.m(); e++) {
    if (in_region[g.edge(e).u] && in_region[g.edge(e).v]) continue;
    edges.push_back({vmap[g.edge(e).u], vmap[g.edge(e).v], 1});
    kept_edges.push_back(e);
  }
  SignedGraph out_g(next, edges);
  std::vector<int> edge_map(g.m(), -1);
  for (size_t i = 0; i < kept_edges.size(); i++) {
    const Edge& e = g.edge(kept_edges[i]);
    edge_map[kept_edges[i]] = out_g.edge_id(vmap[e.u], vmap[e.v]);
  }

  std::vector<std::vector<int>> rot(next);
  std::vector<int> signs(next, 1);
  for (int v = 0; v < g.n(); v++) {
    if (in_region[v]) continue;
    for (int e : h.rotation()[v]) rot[vmap[v]].push_back(edge_map[e]);
    signs[vmap[v]] = h.vertex_sign(v);
  }
  for (int e : region.pendant_edges) rot[vmap[anchor]].push_back(edge_map[e]);
  signs[vmap[anchor]] = -1;

  ContractResult out;
  out.graph = VertexSignedGraph(std::move(out_g), std::move(rot), std::move(signs));
  out.edge_map = std::move(edge_map);
  return out;
}

VertexSignedGraph contract_all_gadgets(const VertexSignedGraph& host,
                                       const GadgetInstall& install) {
  const SignedGraph& ig = install.graph.graph();
  std::vector<int> vmap(ig.n(), -1);
  std::vector<char> replaced(host.graph().n(), 0);
  for (const GadgetRegion& region : install.regions) {
    replaced[region.host_vertex] = 1;
    for (int v : region.vertices) {
      if (v < 0 || v >= ig.n() || vmap[v] != -1)
        throw input_error("install regions overlap or leave the graph");
      vmap[v] = region.host_vertex;
    }
  }
  int next = 0;
  for (int v = 0; v < host.graph().n(); v++) {
    if (replaced[v]) continue;
    while (next < ig.n() && vmap[next] != -1) next++;
    if (next == ig.n()) throw input_error("install does not cover the host");
    vmap[next++] = v;
  }

  std::vector<int> inverse(ig.m(), -1);
  if (static_cast<int>(install.edge_map.size()) != host.graph().m())
    throw input_error("install does not cover the host");
  for (int e = 0; e < host.graph().m(); e++) {
    int me = install.edge_map[e];
    if (me < 0 || me >= ig.m() || inverse[me] != -1)
      throw input_error("install edge map is not injective");
    inverse[me] = e;
  }

  std::vector<Edge> edges(host.graph().m(), Edge{0, 0, 1});
  for (int me = 0; me < ig.m(); me++) {
    if (inverse[me] < 0) continue;
    edges[inverse[me]] = {vmap[ig.edge(me).u], vmap[ig.edge(me).v], 1};
  }
  SignedGraph out_g(host.graph().n(), edges);

  std::vector<std::vector<int>> rot(host.graph().n());
  std::vector<int> signs(host.graph().n(), 1);
  auto mapped = [&](int me) {
    if (inverse[me] < 0) throw input_error("gadget edge in a kept rotation");
    return out_g.edge_id(vmap[ig.edge(me).u], vmap[ig.edge(me).v]);
  };
  for (int v = 0; v < host.graph().n(); v++) {
    if (replaced[v]) continue;
    int iv = -1;
    for (int x = 0; x < ig.n(); x++)
      if (vmap[x] == v) iv = x;
    for (int me : install.graph.rotation()[iv]) rot[v].push_back(mapped(me));
    signs[v] = install.graph.vertex_sign(iv);
  }
  for (const GadgetRegion& region : install.regions) {
    for (int me : region.pendant_edges) rot[region.host_vertex].push_back(mapped(me));
    signs[region.host_vertex] = -1;
  }

  VertexSignedGraph out(std::move(out_g), std::move(rot), std::move(signs));
  if (!(out == host))
    throw internal_error("contracting the install does not restore the host");
  return out;
}

EdgeLabeling restrict_labeling(const EdgeLabeling& L, const std::vector<int>& edge_map) {
  EdgeLabeling out;
  for (int e : edge_map) {
    if (e < 0 || e >= static_cast<int>(L.labels.size()))
      throw input_error("edge map leaves the labeling");
    out.labels.push_back(L.labels[e]);
  }
  return out;
}

namespace {

// Fragment of Tutte's graph used to assemble the full counterexample host.
// rotation rows follow the planar embedding; -1/-2/-3 mark where the
// attachment half-edges e1/e2/e3 sit.
constexpr std::array<std::array<int, 3>, 15> kFragmentRotation = {{
    {-1, 1, 7}, {0, 2, 14}, {1, 3, 10}, {2, -2, 8}, {8, -3, 5},
    {4, 6, 13}, {5, 7, 12}, {6, 0, 14}, {3, 4, 9}, {10, 8, 13},
    {11, 2, 9}, {14, 10, 12}, {13, 6, 11}, {9, 5, 12}, {7, 1, 11},
}};

struct NamedPair {
  int u, v;
  const char* name;
};

constexpr NamedPair kFragmentEdges[] = {
    {0, 1, "e4"},   {0, 7, "e5"},   {1, 2, "e17"},  {1, 14, "e7"},
    {2, 3, "e8"},   {2, 10, "e14"}, {3, 8, "e12"},  {4, 5, "e13"},
    {4, 8, "e6"},   {5, 6, "e19"},  {5, 13, "e11"}, {6, 7, "e23"},
    {6, 12, "e21"}, {7, 14, "e15"}, {8, 9, "e25"},  {9, 10, "e10"},
    {9, 13, "e18"}, {10, 11, "e22"}, {11, 12, "e24"}, {11, 14, "e9"},
    {12, 13, "e16"},
};

constexpr int kFragmentNegatives[] = {1, 2, 5, 8};

}  // namespace

int FragmentTemplate::edge_by_name(const std::string& name) const {
  for (size_t e = 0; e < edge_names.size(); e++)
    if (edge_names[e] == name) return static_cast<int>(e);
  throw input_error("unknown fragment edge " + name);
}

FragmentTemplate build_tutte_fragment() {
  std::vector<Edge> edges;
  for (const NamedPair& p : kFragmentEdges) edges.push_back({p.u, p.v, 1});
  SignedGraph g(15, edges);

  std::vector<std::vector<int>> rot(15);
  for (int v = 0; v < 15; v++)
    for (int w : kFragmentRotation[v])
      if (w >= 0) rot[v].push_back(g.edge_id(v, w));
  std::vector<int> signs(15, 1);
  for (int v : kFragmentNegatives) signs[v] = -1;

  FragmentTemplate out;
  out.graph = VertexSignedGraph(std::move(g), std::move(rot), std::move(signs));
  out.apex = 0;
  out.attach2 = 3;
  out.attach3 = 4;
  out.rotation = kFragmentRotation;
  out.edge_names.resize(out.graph.graph().m());
  for (const NamedPair& p : kFragmentEdges)
    out.edge_names[out.graph.graph().edge_id(p.u, p.v)] = p.name;
  out.negative_vertices.assign(std::begin(kFragmentNegatives),
                               std::end(kFragmentNegatives));
  return out;
}

namespace {

int fragment_vertex(int copy, int t) { return 1 + 15 * copy + t; }

}  // namespace

int TutteGraph::copy_edge(int copy, const std::string& name) const {
  if (copy < 0 || copy > 2) throw input_error("fragment copy out of range");
  if (name == "e1") return e1_edges[copy];
  const SignedGraph& g = graph.graph();
  if (name == "e2")
    return g.edge_id(copy_vertices[copy][3], copy_vertices[(copy + 1) % 3][4]);
  if (name == "e3")
    return g.edge_id(copy_vertices[(copy + 2) % 3][3], copy_vertices[copy][4]);
  FragmentTemplate frag = build_tutte_fragment();
  const Edge& e = frag.graph.graph().edge(frag.edge_by_name(name));
  return g.edge_id(copy_vertices[copy][e.u], copy_vertices[copy][e.v]);
}

TutteGraph build_tutte_graph() {
  std::vector<Edge> edges;
  for (int c = 0; c < 3; c++) {
    for (const NamedPair& p : kFragmentEdges)
      edges.push_back({fragment_vertex(c, p.u), fragment_vertex(c, p.v), 1});
    edges.push_back({0, fragment_vertex(c, 0), 1});
    edges.push_back({fragment_vertex(c, 3), fragment_vertex((c + 1) % 3, 4), 1});
  }
  SignedGraph g(46, edges);

  std::array<int, 3> e1{}, cross{};
  for (int c = 0; c < 3; c++) {
    e1[c] = g.edge_id(0, fragment_vertex(c, 0));
    cross[c] = g.edge_id(fragment_vertex(c, 3), fragment_vertex((c + 1) % 3, 4));
  }

  std::vector<std::vector<int>> rot(46);
  rot[0] = {e1[0], e1[2], e1[1]};
  for (int c = 0; c < 3; c++)
    for (int t = 0; t < 15; t++) {
      int v = fragment_vertex(c, t);
      for (int w : kFragmentRotation[t]) {
        if (w == -1) rot[v].push_back(e1[c]);
        else if (w == -2) rot[v].push_back(cross[c]);
        else if (w == -3) rot[v].push_back(cross[(c + 2) % 3]);
        else rot[v].push_back(g.edge_id(v, fragment_vertex(c, w)));
      }
    }

  std::vector<int> signs(46, 1);
  for (int c = 0; c < 3; c++)
    for (int t : kFragmentNegatives) signs[fragment_vertex(c, t)] = -1;

  TutteGraph out;
  out.graph = VertexSignedGraph(std::move(g), std::move(rot), std::move(signs));
  out.e1_edges = e1;
  for (int c = 0; c < 3; c++)
    for (int t = 0; t < 15; t++) out.copy_vertices[c][t] = fragment_vertex(c, t);
  return out;
}

TwoFactorSearch verify_no_consistent_two_factor(const VertexSignedGraph& h) {
  TwoFactorSearch out;
  enumerate_two_factors(h, [&](const TwoFactor& f) {
    out.examined++;
    if (is_consistent(h, f).ok) {
      out.verdict = Verdict::kSat;
      out.certificate = f;
      return false;
    }
    return true;
  });
  return out;
}

Counterexample build_counterexample() {
  TutteGraph tutte = build_tutte_graph();
  GadgetInstall install = replace_all_negative_vertices(tutte.graph);
  PrimalSignature primal = signature_from_negative_vertices(install.graph);

  Counterexample out;
  out.cubic = std::move(install.graph);
  out.triangulation = std::move(primal.graph);
  out.edge_map = std::move(primal.edge_map);
  return out;
}

namespace {

// Fragment configurations are subsets of the 21 internal edges plus the
// three attachment half-edges, packed into one bitmask.
struct ReplayContext {
  FragmentTemplate frag;
  int m = 0;  // internal edge count; half-edges get ids m, m+1, m+2
  std::vector<int> half_vertex;  // per half-edge, its fragment endpoint

  bool in(std::uint32_t mask, int item) const { return mask >> item & 1; }

  // A configuration is consistent when every complete internal cycle (all
  // vertices of the component have internal degree 2 and carry no selected
  // half-edge) has an even number of positive vertices.
  bool consistent(std::uint32_t mask) const {
    const SignedGraph& g = frag.graph.graph();
    std::vector<int> ideg(g.n(), 0);
    for (int e = 0; e < m; e++)
      if (in(mask, e)) {
        ideg[g.edge(e).u]++;
        ideg[g.edge(e).v]++;
      }
    std::vector<char> has_half(g.n(), 0);
    for (int i = 0; i < 3; i++)
      if (in(mask, m + i)) has_half[half_vertex[i]] = 1;

    std::vector<char> seen(g.n(), 0);
    for (int start = 0; start < g.n(); start++) {
      if (seen[start] || ideg[start] == 0) continue;
      std::vector<int> comp, stack = {start};
      seen[start] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int e : g.incidence()[v])
          if (in(mask, e) && !seen[g.other(e, v)]) {
            seen[g.other(e, v)] = 1;
            stack.push_back(g.other(e, v));
          }
      }
      bool cycle = true;
      int positives = 0;
      for (int v : comp) {
        if (ideg[v] != 2 || has_half[v]) cycle = false;
        if (frag.graph.vertex_sign(v) > 0) positives++;
      }
      if (cycle && positives % 2 != 0) return false;
    }
    return true;
  }
};

void enum_configs(const ReplayContext& ctx, int item, std::uint32_t mask,
                  std::vector<int>& deg, std::vector<std::uint32_t>& out) {
  const SignedGraph& g = ctx.frag.graph.graph();
  if (item == ctx.m + 3) {
    for (int v = 0; v < g.n(); v++)
      if (deg[v] != 2) return;
    out.push_back(mask);
    return;
  }
  int u = item < ctx.m ? g.edge(item).u : ctx.half_vertex[item - ctx.m];
  int v = item < ctx.m ? g.edge(item).v : u;
  enum_configs(ctx, item + 1, mask, deg, out);
  if (item == ctx.m) return;  // the half-edge toward the center stays out
  if (deg[u] < 2 && (u == v || deg[v] < 2)) {
    deg[u]++;
    if (u != v) deg[v]++;
    enum_configs(ctx, item + 1, mask | (1u << item), deg, out);
    deg[u]--;
    if (u != v) deg[v]--;
  }
}

}  // namespace

FragmentReplay fragment_forcing_replay() {
  ReplayContext ctx;
  ctx.frag = build_tutte_fragment();
  ctx.m = ctx.frag.graph.graph().m();
  ctx.half_vertex = {ctx.frag.apex, ctx.frag.attach2, ctx.frag.attach3};

  std::vector<std::uint32_t> configs;
  std::vector<int> deg(ctx.frag.graph.graph().n(), 0);
  enum_configs(ctx, 0, 0, deg, configs);

  FragmentReplay out;
  out.claims = {"e21", "e9", "e17", "e15", "e14"};
  out.degree_valid_configs = static_cast<int>(configs.size());
  out.confirmed = true;

  std::uint32_t premises = (1u << (ctx.m + 1)) | (1u << (ctx.m + 2)) |
                           (1u << ctx.frag.edge_by_name("e4")) |
                           (1u << ctx.frag.edge_by_name("e5"));
  std::uint32_t established = premises;
  for (const std::string& claim : out.claims) {
    std::uint32_t bit = 1u << ctx.frag.edge_by_name(claim);
    int pool = 0;
    for (std::uint32_t mask : configs) {
      if ((mask & established) != established || (mask & bit)) continue;
      pool++;
      if (ctx.consistent(mask)) out.confirmed = false;
    }
    out.pool_sizes.push_back(pool);
    established |= bit;
  }
  for (std::uint32_t mask : configs) {
    if ((mask & established) != established) continue;
    out.final_pool++;
    if (ctx.consistent(mask)) out.confirmed = false;
  }
  return out;
}

void search_negative_placements(const VertexSignedGraph& h, int t, long long budget,
                                const std::function<bool(const std::vector<int>&)>& visit) {
  int n = h.graph().n();
  if (t < 0 || t > n) throw input_error("placement size out of range");
  std::vector<int> subset(t);
  for (int i = 0; i < t; i++) subset[i] = i;
  long long examined = 0;
  for (;;) {
    if (budget >= 0 && examined >= budget) return;
    examined++;
    VertexSignedGraph placed = with_negative_vertices(h, subset);
    if (verify_no_consistent_two_factor(placed).verdict == Verdict::kUnsat &&
        !visit(subset))
      return;
    int i = t - 1;
    while (i >= 0 && subset[i] == n - t + i) i--;
    if (i < 0) return;
    subset[i]++;
    for (int j = i + 1; j < t; j++) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace sg
