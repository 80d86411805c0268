#include "sg/factors.hpp"

#include <algorithm>

namespace sg {

TwoFactor two_factor_from_edges(const SignedGraph& g, const std::vector<int>& edges) {
  std::vector<char> in_factor(g.m(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.m()) throw input_error("edge id out of range");
    if (in_factor[e]) throw input_error("duplicate edge in 2-factor");
    in_factor[e] = 1;
  }
  std::vector<std::array<int, 2>> next(g.n(), {-1, -1});
  for (int v = 0; v < g.n(); v++) {
    int found = 0;
    for (int e : g.incidence()[v])
      if (in_factor[e]) {
        if (found == 2) throw input_error("vertex " + std::to_string(v) +
                                          " has degree above 2 in the 2-factor");
        next[v][found++] = g.other(e, v);
      }
    if (found != 2)
      throw input_error("vertex " + std::to_string(v) +
                        " has degree below 2 in the 2-factor");
    if (next[v][0] > next[v][1]) std::swap(next[v][0], next[v][1]);
  }

  TwoFactor f;
  f.edges = edges;
  std::sort(f.edges.begin(), f.edges.end());
  std::vector<char> seen(g.n(), 0);
  for (int start = 0; start < g.n(); start++) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int prev = -1, v = start;
    do {
      cycle.push_back(v);
      seen[v] = 1;
      int w = next[v][0] == prev ? next[v][1] : next[v][0];
      prev = v;
      v = w;
    } while (v != start);
    f.cycles.push_back(std::move(cycle));
  }
  return f;
}

namespace {

bool match_from(const SignedGraph& g, std::vector<char>& covered,
                std::vector<char>& in_matching,
                const std::function<bool(const TwoFactor&)>& visit, bool& stopped) {
  int v = -1;
  for (int u = 0; u < g.n(); u++)
    if (!covered[u]) {
      v = u;
      break;
    }
  if (v < 0) {
    std::vector<int> factor;
    for (int e = 0; e < g.m(); e++)
      if (!in_matching[e]) factor.push_back(e);
    if (!visit(two_factor_from_edges(g, factor))) stopped = true;
    return !stopped;
  }
  std::vector<std::pair<int, int>> partners;
  for (int e : g.incidence()[v])
    if (!covered[g.other(e, v)]) partners.emplace_back(g.other(e, v), e);
  std::sort(partners.begin(), partners.end());
  for (auto [w, e] : partners) {
    covered[v] = covered[w] = 1;
    in_matching[e] = 1;
    bool keep_going = match_from(g, covered, in_matching, visit, stopped);
    covered[v] = covered[w] = 0;
    in_matching[e] = 0;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void enumerate_two_factors(const SignedGraph& g,
                           const std::function<bool(const TwoFactor&)>& visit) {
  for (int v = 0; v < g.n(); v++)
    if (g.degree(v) != 3)
      throw input_error("2-factor enumeration requires a cubic graph");
  std::vector<char> covered(g.n(), 0);
  std::vector<char> in_matching(g.m(), 0);
  bool stopped = false;
  match_from(g, covered, in_matching, visit, stopped);
}

void enumerate_two_factors(const VertexSignedGraph& h,
                           const std::function<bool(const TwoFactor&)>& visit) {
  enumerate_two_factors(h.graph(), visit);
}

CycleCheck is_consistent(const VertexSignedGraph& h, const TwoFactor& f) {
  TwoFactor canonical = two_factor_from_edges(h.graph(), f.edges);
  for (size_t i = 0; i < canonical.cycles.size(); i++) {
    int positives = 0;
    for (int v : canonical.cycles[i])
      if (h.vertex_sign(v) > 0) positives++;
    if (positives % 2 != 0) return {false, static_cast<int>(i)};
  }
  return {true, -1};
}

EdgeLabeling strong_labeling_from_two_factor(const VertexSignedGraph& h,
                                             const TwoFactor& f) {
  CycleCheck check = is_consistent(h, f);
  if (!check.ok)
    throw input_error("2-factor is inconsistent at cycle " +
                      std::to_string(check.violating_cycle));
  TwoFactor canonical = two_factor_from_edges(h.graph(), f.edges);

  EdgeLabeling L;
  L.labels.assign(h.graph().m(), kLabel0);
  for (const auto& cycle : canonical.cycles) {
    size_t len = cycle.size();
    std::vector<int> cycle_edges(len);
    for (size_t i = 0; i < len; i++)
      cycle_edges[i] = h.graph().edge_id(cycle[i], cycle[(i + 1) % len]);
    // flips[i] = parity of label changes between cycle_edges[0] and
    // cycle_edges[i]; the walk flips when it passes a positive vertex.
    std::vector<int> flips(len, 0);
    for (size_t i = 1; i < len; i++)
      flips[i] = (flips[i - 1] + (h.vertex_sign(cycle[i]) > 0 ? 1 : 0)) % 2;
    size_t anchor = 0;
    for (size_t i = 1; i < len; i++)
      if (cycle_edges[i] < cycle_edges[anchor]) anchor = i;
    for (size_t i = 0; i < len; i++)
      L.labels[cycle_edges[i]] = (flips[i] ^ flips[anchor]) ? kLabelB : kLabelA;
  }

  VertexCheck strong = is_strong_labeling(h, L);
  if (!strong.ok)
    throw internal_error("labeling built from a consistent 2-factor is not strong "
                         "at vertex " + std::to_string(strong.violating_vertex));
  return L;
}

TwoFactor two_factor_from_strong_labeling(const VertexSignedGraph& h,
                                          const EdgeLabeling& L) {
  VertexCheck strong = is_strong_labeling(h, L);
  if (!strong.ok)
    throw input_error("labeling is not strong at vertex " +
                      std::to_string(strong.violating_vertex));
  std::vector<int> factor;
  for (int e = 0; e < h.graph().m(); e++)
    if (L.labels[e] != kLabel0) factor.push_back(e);
  TwoFactor f = two_factor_from_edges(h.graph(), factor);
  CycleCheck check = is_consistent(h, f);
  if (!check.ok)
    throw internal_error("2-factor from a strong labeling is inconsistent at cycle " +
                         std::to_string(check.violating_cycle));
  return f;
}

}  // namespace sg
