#include "sg/labeling.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <thread>
#include <tuple>

namespace sg {

char label_char(std::uint8_t label) {
  switch (label) {
    case kLabel0: return '0';
    case kLabelA: return 'a';
    case kLabelB: return 'b';
  }
  throw input_error("label value out of range");
}

std::uint8_t label_from_char(char c) {
  switch (c) {
    case '0': return kLabel0;
    case 'a': return kLabelA;
    case 'b': return kLabelB;
  }
  throw input_error(std::string("unknown label '") + c + "'");
}

namespace {

struct DegreeProfile {
  int d0 = 0, da = 0, db = 0;
};

void check_labeling_shape(const VertexSignedGraph& h, const EdgeLabeling& L) {
  if (static_cast<int>(L.labels.size()) != h.graph().m())
    throw input_error("labeling must assign every edge");
  for (std::uint8_t l : L.labels)
    if (l > kLabelB) throw input_error("label value out of range");
  if (negative_vertex_count_parity(h) != 0)
    throw input_error("labeling requires an even number of negative vertices");
}

DegreeProfile profile_at(const VertexSignedGraph& h, const EdgeLabeling& L, int v) {
  DegreeProfile p;
  for (int e : h.graph().incidence()[v]) {
    if (L.labels[e] == kLabel0) p.d0++;
    else if (L.labels[e] == kLabelA) p.da++;
    else p.db++;
  }
  return p;
}

bool weak_at(const VertexSignedGraph& h, const DegreeProfile& p, int v) {
  int d = h.graph().degree(v);
  int target_ab = (d + (h.vertex_sign(v) < 0 ? 1 : 0)) % 2;
  return p.d0 % 2 == d % 2 && p.da % 2 == target_ab && p.db % 2 == target_ab;
}

}  // namespace

VertexCheck is_weak_labeling(const VertexSignedGraph& h, const EdgeLabeling& L) {
  check_labeling_shape(h, L);
  for (int v = 0; v < h.graph().n(); v++)
    if (!weak_at(h, profile_at(h, L, v), v)) return {false, v};
  return {true, -1};
}

VertexCheck is_strong_labeling(const VertexSignedGraph& h, const EdgeLabeling& L) {
  check_labeling_shape(h, L);
  for (int v = 0; v < h.graph().n(); v++) {
    DegreeProfile p = profile_at(h, L, v);
    if (!weak_at(h, p, v)) return {false, v};
    int d = h.graph().degree(v);
    if (d % 2 == 1 && p.d0 == d) return {false, v};
  }
  return {true, -1};
}

namespace {

// Backtracking labeler over 3-bit edge domains. At each vertex the residual
// parities r_0/r_a/r_b say whether the count of each label among the not yet
// assigned incident edges must be odd; a vertex with exactly as many free
// edges as odd residues pins those edges. The static edge order groups edges
// around vertices (fewest unordered edges first) and pushes everything that
// touches a negative vertex behind the rest; combined with solving the
// connected components of the unassigned subgraph separately, this keeps the
// independent negative pockets from multiplying the search space.
class LabelSolver {
 public:
  LabelSolver(const SignedGraph& g, const std::vector<int>& vsign, bool strong,
              std::chrono::steady_clock::time_point deadline, bool has_deadline)
      : g_(g), strong_(strong), deadline_(deadline), has_deadline_(has_deadline) {
    n_ = g.n();
    m_ = g.m();
    deg_.resize(n_);
    t0_.resize(n_);
    tab_.resize(n_);
    for (int v = 0; v < n_; v++) {
      deg_[v] = g.degree(v);
      t0_[v] = deg_[v] & 1;
      tab_[v] = (deg_[v] & 1) ^ (vsign[v] < 0 ? 1 : 0);
    }
    lab_.assign(m_, -1);
    dom_.assign(m_, 7);
    cnt_.assign(n_, {0, 0, 0});
    un_ = deg_;
    build_order(vsign);
    rank_.assign(m_, 0);
    for (int i = 0; i < m_; i++) rank_[order_[i]] = i;
    comp_stamp_.assign(m_, 0);
  }

  int first_edge() const { return m_ > 0 ? order_[0] : -1; }

  int first_label() const { return m_ > 0 ? lab_[order_[0]] : -1; }

  // Assigns the first edge in search order (thread split entry).
  bool pin_first(int label) {
    nodes++;
    return propagate(order_[0], label);
  }

  Verdict solve(bool skip_init) {
    if (!skip_init && !init_propagate())
      return out_of_time_ ? Verdict::kBudgetExhausted : Verdict::kUnsat;
    if (search(order_)) return Verdict::kSat;
    return out_of_time_ ? Verdict::kBudgetExhausted : Verdict::kUnsat;
  }

  bool init_propagate() {
    force_queue_.clear();
    for (int v = 0; v < n_; v++)
      if (!vertex_rule(v)) return false;
    return flush_forced();
  }

  EdgeLabeling extract() const {
    EdgeLabeling L;
    L.labels.reserve(m_);
    for (int8_t l : lab_) L.labels.push_back(static_cast<std::uint8_t>(l));
    return L;
  }

  long long nodes = 0, splits = 0;

 private:
  const SignedGraph& g_;
  bool strong_;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_;
  bool out_of_time_ = false;
  int n_ = 0, m_ = 0;
  std::vector<int> deg_, t0_, tab_, un_, order_, rank_;
  std::vector<int8_t> lab_;
  std::vector<std::uint8_t> dom_;
  std::vector<std::array<int, 3>> cnt_;
  struct DomChange {
    int e;
    std::uint8_t old;
  };
  std::vector<int> assign_trail_;
  std::vector<DomChange> dom_trail_;
  std::vector<int> force_queue_;
  std::vector<std::uint32_t> comp_stamp_;
  std::uint32_t comp_gen_ = 0;
  std::vector<std::vector<int>> comp_store_;
  std::vector<int> comp_stack_;

  void build_order(const std::vector<int>& vsign) {
    std::vector<int> left = deg_;
    std::vector<char> used(m_, 0);
    std::vector<int> vcls(n_, 0);
    for (int v = 0; v < n_; v++)
      for (int e : g_.incidence()[v])
        if (vsign[v] < 0 || vsign[g_.other(e, v)] < 0) vcls[v] = 1;
    for (;;) {
      int best = -1;
      auto key = [&](int v) { return std::tuple(vcls[v], left[v], v); };
      for (int v = 0; v < n_; v++)
        if (left[v] > 0 && (best < 0 || key(v) < key(best))) best = v;
      if (best < 0) break;
      for (int e : g_.incidence()[best])
        if (!used[e]) {
          order_.push_back(e);
          used[e] = 1;
          left[g_.edge(e).u]--;
          left[g_.edge(e).v]--;
        }
    }
  }

  bool shrink_dom(int e, std::uint8_t keep) {
    std::uint8_t nd = dom_[e] & keep;
    if (nd == dom_[e]) return true;
    dom_trail_.push_back({e, dom_[e]});
    dom_[e] = nd;
    if (nd == 0) return false;
    if (lab_[e] < 0 && (nd == 1 || nd == 2 || nd == 4)) force_queue_.push_back(e);
    return true;
  }

  bool vertex_rule(int v) {
    int r0 = (t0_[v] - cnt_[v][0]) & 1;
    int ra = (tab_[v] - cnt_[v][1]) & 1;
    int rb = (tab_[v] - cnt_[v][2]) & 1;
    int s = r0 + ra + rb;
    if (un_[v] < s) return false;
    if (strong_ && (deg_[v] & 1) && cnt_[v][1] + cnt_[v][2] == 0) {
      if (un_[v] == 0) return false;
      if (un_[v] == s && ra == 0 && rb == 0) return false;
    }
    if (un_[v] == s) {
      std::uint8_t keep =
          static_cast<std::uint8_t>((r0 ? 1 : 0) | (ra ? 2 : 0) | (rb ? 4 : 0));
      for (int e : g_.incidence()[v])
        if (lab_[e] < 0 && !shrink_dom(e, keep)) return false;
    }
    return true;
  }

  bool assign(int e, int label) {
    if (!(dom_[e] & (1 << label))) return false;
    lab_[e] = static_cast<int8_t>(label);
    assign_trail_.push_back(e);
    if (dom_[e] != (1 << label)) {
      dom_trail_.push_back({e, dom_[e]});
      dom_[e] = static_cast<std::uint8_t>(1 << label);
    }
    for (int v : {g_.edge(e).u, g_.edge(e).v}) {
      cnt_[v][label]++;
      un_[v]--;
    }
    for (int v : {g_.edge(e).u, g_.edge(e).v})
      if (!vertex_rule(v)) return false;
    return true;
  }

  bool flush_forced() {
    for (size_t qi = 0; qi < force_queue_.size(); qi++) {
      int fe = force_queue_[qi];
      if (lab_[fe] >= 0) continue;
      int label = dom_[fe] == 1 ? 0 : dom_[fe] == 2 ? 1 : 2;
      if (!assign(fe, label)) return false;
    }
    return true;
  }

  bool propagate(int e, int label) {
    force_queue_.clear();
    return assign(e, label) && flush_forced();
  }

  void undo(size_t a_mark, size_t d_mark) {
    while (assign_trail_.size() > a_mark) {
      int e = assign_trail_.back();
      assign_trail_.pop_back();
      int label = lab_[e];
      for (int v : {g_.edge(e).u, g_.edge(e).v}) {
        cnt_[v][label]--;
        un_[v]++;
      }
      lab_[e] = -1;
    }
    while (dom_trail_.size() > d_mark) {
      dom_[dom_trail_.back().e] = dom_trail_.back().old;
      dom_trail_.pop_back();
    }
  }

  // Splits the given unassigned edges into connected components (edges share
  // a vertex), each sorted by static rank, components ordered smallest
  // first. Returns the component count; comp_store_[0..k) holds them.
  int components(const std::vector<int>& edges) {
    comp_gen_++;
    int k = 0;
    for (int e0 : edges) {
      if (comp_stamp_[e0] == comp_gen_) continue;
      if (static_cast<int>(comp_store_.size()) == k) comp_store_.emplace_back();
      auto& comp = comp_store_[k++];
      comp.clear();
      comp_stack_.push_back(e0);
      comp_stamp_[e0] = comp_gen_;
      while (!comp_stack_.empty()) {
        int e = comp_stack_.back();
        comp_stack_.pop_back();
        comp.push_back(e);
        for (int v : {g_.edge(e).u, g_.edge(e).v})
          for (int e2 : g_.incidence()[v])
            if (lab_[e2] < 0 && comp_stamp_[e2] != comp_gen_) {
              comp_stamp_[e2] = comp_gen_;
              comp_stack_.push_back(e2);
            }
      }
      if (k == 1 && comp.size() == edges.size()) return 1;
    }
    for (int i = 0; i < k; i++)
      std::sort(comp_store_[i].begin(), comp_store_[i].end(),
                [&](int a, int b) { return rank_[a] < rank_[b]; });
    std::sort(comp_store_.begin(), comp_store_.begin() + k,
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return rank_[a[0]] < rank_[b[0]];
              });
    return k;
  }

  bool search(const std::vector<int>& eligible) {
    std::vector<int> live;
    live.reserve(eligible.size());
    for (int e : eligible)
      if (lab_[e] < 0) live.push_back(e);
    if (live.empty()) return true;
    int k = components(live);
    if (k > 1) {
      splits++;
      // The shared component store would be clobbered by recursion; splits
      // are rare enough that copying is cheap.
      std::vector<std::vector<int>> comps(comp_store_.begin(), comp_store_.begin() + k);
      for (const auto& comp : comps)
        if (!search(comp)) return false;
      return true;
    }
    int e = live[0];
    for (int label = 0; label < 3; label++) {
      if (!(dom_[e] & (1 << label))) continue;
      nodes++;
      if (has_deadline_ && (nodes & 4095) == 0 &&
          std::chrono::steady_clock::now() > deadline_) {
        out_of_time_ = true;
        return false;
      }
      size_t a_mark = assign_trail_.size(), d_mark = dom_trail_.size();
      if (propagate(e, label) && search(live)) return true;
      undo(a_mark, d_mark);
      if (out_of_time_) return false;
    }
    return false;
  }
};

LabelingResult solve_labeling(const VertexSignedGraph& h, bool strong,
                              const SolveOptions& opts) {
  if (negative_vertex_count_parity(h) != 0)
    throw input_error("labeling requires an even number of negative vertices");

  bool has_deadline = opts.time_limit_seconds > 0;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(
                          has_deadline ? opts.time_limit_seconds : 0.0));

  const SignedGraph& g = h.graph();
  LabelingResult result;

  if (opts.threads <= 1 || g.m() < 2) {
    LabelSolver solver(g, h.vertex_signs(), strong, deadline, has_deadline);
    result.verdict = solver.solve(false);
    result.nodes = solver.nodes;
    result.splits = solver.splits;
    if (result.verdict == Verdict::kSat) result.labeling = solver.extract();
  } else {
    // Split on the first edge's three labels; every branch runs to
    // completion and the lowest satisfiable label wins, matching the
    // sequential first solution.
    std::vector<LabelSolver> branches;
    branches.reserve(3);
    for (int label = 0; label < 3; label++)
      branches.emplace_back(g, h.vertex_signs(), strong, deadline, has_deadline);
    std::vector<Verdict> verdicts(3, Verdict::kUnsat);
    std::vector<std::thread> pool;
    for (int label = 0; label < 3; label++)
      pool.emplace_back([&, label] {
        LabelSolver& s = branches[label];
        if (!s.init_propagate()) {
          verdicts[label] = Verdict::kUnsat;
          return;
        }
        // Initial propagation may already have fixed the split edge, in
        // which case only the matching branch carries on.
        int fixed = s.first_label();
        if (fixed >= 0)
          verdicts[label] = fixed == label ? s.solve(true) : Verdict::kUnsat;
        else
          verdicts[label] = s.pin_first(label) ? s.solve(true) : Verdict::kUnsat;
      });
    for (auto& t : pool) t.join();
    result.verdict = Verdict::kUnsat;
    for (int label = 0; label < 3; label++) {
      result.nodes += branches[label].nodes;
      result.splits += branches[label].splits;
    }
    for (int label = 0; label < 3; label++) {
      if (verdicts[label] == Verdict::kSat) {
        result.verdict = Verdict::kSat;
        result.labeling = branches[label].extract();
        break;
      }
      if (verdicts[label] == Verdict::kBudgetExhausted)
        result.verdict = Verdict::kBudgetExhausted;
    }
  }

  if (result.verdict == Verdict::kSat) {
    VertexCheck check = strong ? is_strong_labeling(h, result.labeling)
                               : is_weak_labeling(h, result.labeling);
    if (!check.ok)
      throw internal_error("solver produced an invalid labeling at vertex " +
                           std::to_string(check.violating_vertex));
  }
  return result;
}

}  // namespace

LabelingResult solve_weak_labeling(const VertexSignedGraph& h, const SolveOptions& opts) {
  return solve_labeling(h, false, opts);
}

LabelingResult solve_strong_labeling(const VertexSignedGraph& h, const SolveOptions& opts) {
  return solve_labeling(h, true, opts);
}

namespace {

// BFS path between two vertices, neighbors in ascending id order.
std::vector<int> bfs_path_edges(const SignedGraph& g, int from, int to) {
  std::vector<int> parent_edge(g.n(), -1);
  std::vector<char> seen(g.n(), 0);
  std::queue<int> queue;
  seen[from] = 1;
  queue.push(from);
  while (!queue.empty() && !seen[to]) {
    int u = queue.front();
    queue.pop();
    std::vector<std::pair<int, int>> nbrs;
    for (int e : g.incidence()[u]) nbrs.emplace_back(g.other(e, u), e);
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [w, e] : nbrs) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent_edge[w] = e;
      queue.push(w);
    }
  }
  if (!seen[to]) throw input_error("t_join requires a connected graph");
  std::vector<int> path;
  int v = to;
  while (parent_edge[v] >= 0) {
    path.push_back(parent_edge[v]);
    v = g.other(parent_edge[v], v);
  }
  return path;
}

}  // namespace

std::vector<int> t_join(const SignedGraph& g, const std::vector<int>& T) {
  if (T.size() % 2 != 0) throw input_error("t_join requires an even vertex set");
  if (!is_connected(g)) throw input_error("t_join requires a connected graph");
  std::vector<int> terminals = T;
  std::sort(terminals.begin(), terminals.end());
  for (size_t i = 0; i < terminals.size(); i++) {
    g.check_vertex(terminals[i]);
    if (i > 0 && terminals[i] == terminals[i - 1])
      throw input_error("t_join vertex set has duplicates");
  }
  std::vector<char> in_join(g.m(), 0);
  for (size_t i = 0; i + 1 < terminals.size(); i += 2)
    for (int e : bfs_path_edges(g, terminals[i], terminals[i + 1]))
      in_join[e] ^= 1;

  std::vector<int> join;
  std::vector<int> odd_deg(g.n(), 0);
  for (int e = 0; e < g.m(); e++)
    if (in_join[e]) {
      join.push_back(e);
      odd_deg[g.edge(e).u] ^= 1;
      odd_deg[g.edge(e).v] ^= 1;
    }
  for (int v = 0; v < g.n(); v++) {
    bool should = std::binary_search(terminals.begin(), terminals.end(), v);
    if ((odd_deg[v] == 1) != should)
      throw internal_error("t_join parity postcondition failed at vertex " +
                           std::to_string(v));
  }
  return join;
}

std::vector<int> t_join(const VertexSignedGraph& g, const std::vector<int>& T) {
  return t_join(g.graph(), T);
}

PrimalSignature signature_from_negative_vertices(const VertexSignedGraph& h) {
  std::vector<int> negatives;
  for (int v = 0; v < h.graph().n(); v++)
    if (h.vertex_sign(v) < 0) negatives.push_back(v);
  if (negatives.size() % 2 != 0)
    throw input_error("signature requires an even number of negative vertices");

  EmbeddedDual d = dual(h);
  std::vector<int> join = t_join(h.graph(), negatives);

  std::vector<Edge> edges = d.graph.graph().edges();
  for (int e : join) edges[d.edge_map[e]].sign = -1;
  PrimalSignature result;
  result.graph = EmbeddedGraph(SignedGraph(d.graph.graph().n(), std::move(edges)),
                               d.graph.rotation());
  result.edge_map = std::move(d.edge_map);
  return result;
}

bool signature_round_trip_matches(const VertexSignedGraph& h,
                                  const PrimalSignature& primal) {
  if (static_cast<int>(primal.edge_map.size()) != h.graph().m())
    throw input_error("primal correspondence does not match the graph");
  SignedDual back = dual(primal.graph);
  std::vector<int> composed(h.graph().m());
  for (int e = 0; e < h.graph().m(); e++)
    composed[e] = back.edge_map[primal.edge_map[e]];
  std::vector<int> bijection =
      vertex_bijection_from_edges(h.graph(), back.graph.graph(), composed);
  for (int v = 0; v < h.graph().n(); v++)
    if (back.graph.vertex_sign(bijection[v]) != h.vertex_sign(v)) return false;
  return true;
}

EdgeLabeling coloring_to_labeling(const EmbeddedGraph& g, const SignedDual& d,
                                  const std::vector<int>& colors) {
  if (static_cast<int>(d.edge_map.size()) != g.graph().m())
    throw input_error("dual correspondence does not match the graph");
  ProperCheck check = is_proper(g.graph(), ColorSet{4, false}, colors);
  if (!check.proper)
    throw input_error("coloring is not proper at edge " +
                      std::to_string(check.violating_edge));

  EdgeLabeling L;
  L.labels.assign(d.graph.graph().m(), kLabel0);
  for (int e = 0; e < g.graph().m(); e++) {
    const Edge& ed = g.graph().edge(e);
    int cu = colors[ed.u], cv = colors[ed.v];
    std::uint8_t label;
    if (cu == -ed.sign * cv) {
      label = kLabel0;
    } else {
      int p = ed.sign * cu * cv;
      if (p == 2) label = kLabelA;
      else if (p == -2) label = kLabelB;
      else
        throw internal_error("edge " + std::to_string(e) +
                             " admits no label for a proper coloring");
    }
    L.labels[d.edge_map[e]] = label;
  }
  VertexCheck weak = is_weak_labeling(d.graph, L);
  if (!weak.ok)
    throw internal_error("labeling induced by a proper coloring is not weak at vertex " +
                         std::to_string(weak.violating_vertex));
  return L;
}

std::vector<int> labeling_to_coloring(const EmbeddedGraph& g, const SignedDual& d,
                                      const EdgeLabeling& L) {
  if (static_cast<int>(d.edge_map.size()) != g.graph().m())
    throw input_error("dual correspondence does not match the graph");
  VertexCheck weak = is_weak_labeling(d.graph, L);
  if (!weak.ok)
    throw input_error("labeling is not weak at vertex " +
                      std::to_string(weak.violating_vertex));
  if (!is_connected(g.graph()))
    throw input_error("coloring propagation requires a connected graph");
  if (g.graph().n() == 0) return {};

  std::vector<int> colors(g.graph().n(), 0);
  std::vector<char> seen(g.graph().n(), 0);
  colors[0] = 1;
  seen[0] = 1;
  std::queue<int> queue;
  queue.push(0);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    std::vector<std::pair<int, int>> nbrs;
    for (int e : g.graph().incidence()[v]) nbrs.emplace_back(g.graph().other(e, v), e);
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [u, e] : nbrs) {
      if (seen[u]) continue;
      int c = colors[v];
      int s = g.graph().edge(e).sign;
      int mirror = (c > 0 ? 3 : -3) - c;  // 1<->2 and -1<->-2
      switch (L.labels[d.edge_map[e]]) {
        case kLabelA: colors[u] = s * mirror; break;
        case kLabelB: colors[u] = -s * mirror; break;
        default: colors[u] = -s * c; break;
      }
      seen[u] = 1;
      queue.push(u);
    }
  }
  ProperCheck check = is_proper(g.graph(), ColorSet{4, false}, colors);
  if (!check.proper)
    throw internal_error("coloring propagated from a weak labeling is improper at edge " +
                         std::to_string(check.violating_edge));
  return colors;
}

}  // namespace sg
