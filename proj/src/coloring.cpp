#include "sg/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

namespace sg {

std::vector<int> ColorSet::colors() const {
  if (k < 1) throw input_error("k must be at least 1");
  std::vector<int> out;
  if (symmetric_range) {
    for (int c = -k; c <= k; c++) out.push_back(c);
    return out;
  }
  int half = k / 2;
  if (k % 2 == 0) {
    for (int c = -half; c <= -1; c++) out.push_back(c);
    for (int c = 1; c <= half; c++) out.push_back(c);
  } else {
    for (int c = -half; c <= half; c++) out.push_back(c);
  }
  return out;
}

bool ColorSet::contains(int c) const {
  if (symmetric_range) return c >= -k && c <= k;
  if (c == 0) return k % 2 == 1;
  return c >= -(k / 2) && c <= k / 2;
}

ProperCheck is_proper(const SignedGraph& g, const ColorSet& cs,
                      const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n())
    throw input_error("coloring must assign every vertex");
  for (int v = 0; v < g.n(); v++)
    if (!cs.contains(colors[v]))
      throw input_error("color " + std::to_string(colors[v]) + " at vertex " +
                        std::to_string(v) + " is outside the color set");
  for (int e = 0; e < g.m(); e++) {
    const Edge& ed = g.edge(e);
    if (colors[ed.u] == ed.sign * colors[ed.v]) return {false, e};
  }
  return {true, -1};
}

namespace {

class ColorSearch {
 public:
  // Colors are handled by index into the ascending MRS color list; the list
  // is symmetric, so the negation of color index i is k-1-i. For an edge of
  // sign s, a vertex colored ci forbids index ci (s positive) or k-1-ci
  // (s negative) at the other endpoint.
  ColorSearch(const SignedGraph& g, int k, std::chrono::steady_clock::time_point deadline,
              bool has_deadline)
      : g_(g), k_(k), deadline_(deadline), has_deadline_(has_deadline) {
    if (k > 30) throw input_error("k larger than 30 is not supported");
    full_ = (1u << k) - 1;
    color_.assign(g.n(), -1);
    dom_.assign(g.n(), full_);
    order_.resize(g.n());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
  }

  // Pins the first vertex in search order to one color index (thread split).
  bool pin_first(int ci) {
    force_queue_.clear();
    return assign(order_[0], ci) && flush();
  }

  Verdict run(int from) {
    if (search(from)) return Verdict::kSat;
    return out_of_time_ ? Verdict::kBudgetExhausted : Verdict::kUnsat;
  }

  std::vector<int> extract(const std::vector<int>& palette) const {
    std::vector<int> out(g_.n());
    for (int v = 0; v < g_.n(); v++) out[v] = palette[color_[v]];
    return out;
  }

  long long nodes = 0;

 private:
  const SignedGraph& g_;
  int k_;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_;
  bool out_of_time_ = false;
  unsigned full_;
  std::vector<int> color_, order_;
  std::vector<unsigned> dom_;
  struct DomChange {
    int v;
    unsigned old;
  };
  std::vector<int> assign_trail_, force_queue_;
  std::vector<DomChange> dom_trail_;

  int forbidden(int ci, int s) const { return s > 0 ? ci : k_ - 1 - ci; }

  bool assign(int v, int ci) {
    if (!(dom_[v] & (1u << ci))) return false;
    color_[v] = ci;
    assign_trail_.push_back(v);
    if (dom_[v] != (1u << ci)) {
      dom_trail_.push_back({v, dom_[v]});
      dom_[v] = 1u << ci;
    }
    for (int e : g_.incidence()[v]) {
      int u = g_.other(e, v);
      int bad = forbidden(ci, g_.edge(e).sign);
      if (color_[u] >= 0) {
        if (color_[u] == bad) return false;
        continue;
      }
      unsigned nd = dom_[u] & ~(1u << bad);
      if (nd != dom_[u]) {
        dom_trail_.push_back({u, dom_[u]});
        dom_[u] = nd;
        if (nd == 0) return false;
        if ((nd & (nd - 1)) == 0) force_queue_.push_back(u);
      }
    }
    return true;
  }

  bool flush() {
    for (size_t qi = 0; qi < force_queue_.size(); qi++) {
      int v = force_queue_[qi];
      if (color_[v] >= 0) continue;
      int ci = 0;
      while (!(dom_[v] & (1u << ci))) ci++;
      if (!assign(v, ci)) return false;
    }
    return true;
  }

  void undo(size_t a_mark, size_t d_mark) {
    while (assign_trail_.size() > a_mark) {
      color_[assign_trail_.back()] = -1;
      assign_trail_.pop_back();
    }
    while (dom_trail_.size() > d_mark) {
      dom_[dom_trail_.back().v] = dom_trail_.back().old;
      dom_trail_.pop_back();
    }
  }

  bool search(int oi) {
    while (oi < g_.n() && color_[order_[oi]] >= 0) oi++;
    if (oi >= g_.n()) return true;
    int v = order_[oi];
    for (int ci = 0; ci < k_; ci++) {
      if (!(dom_[v] & (1u << ci))) continue;
      nodes++;
      if (has_deadline_ && (nodes & 4095) == 0 &&
          std::chrono::steady_clock::now() > deadline_) {
        out_of_time_ = true;
        return false;
      }
      size_t a_mark = assign_trail_.size(), d_mark = dom_trail_.size();
      force_queue_.clear();
      if (assign(v, ci) && flush() && search(oi + 1)) return true;
      undo(a_mark, d_mark);
      if (out_of_time_) return false;
    }
    return false;
  }
};

}  // namespace

ColoringResult solve_coloring(const SignedGraph& g, int k, const SolveOptions& opts) {
  if (k < 1) throw input_error("k must be at least 1");
  std::vector<int> palette = ColorSet{k, false}.colors();
  ColoringResult result;
  result.coloring.k = k;
  if (g.n() == 0) {
    result.verdict = Verdict::kSat;
    return result;
  }

  bool has_deadline = opts.time_limit_seconds > 0;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(
                          has_deadline ? opts.time_limit_seconds : 0.0));

  if (opts.threads <= 1 || g.n() == 1) {
    ColorSearch search(g, k, deadline, has_deadline);
    result.verdict = search.run(0);
    result.nodes = search.nodes;
    if (result.verdict == Verdict::kSat) result.coloring.colors = search.extract(palette);
    return result;
  }

  // Parallel split on the first vertex's color choices. Every branch runs to
  // completion and the lowest-color satisfiable branch wins, which is the
  // same solution the sequential order finds first.
  std::vector<ColorSearch> branches;
  branches.reserve(k);
  for (int ci = 0; ci < k; ci++) branches.emplace_back(g, k, deadline, has_deadline);
  std::vector<Verdict> verdicts(k, Verdict::kUnsat);
  std::vector<std::thread> pool;
  for (int ci = 0; ci < k; ci++)
    pool.emplace_back([&, ci] {
      branches[ci].nodes++;
      verdicts[ci] =
          branches[ci].pin_first(ci) ? branches[ci].run(1) : Verdict::kUnsat;
    });
  for (auto& t : pool) t.join();

  result.verdict = Verdict::kUnsat;
  for (int ci = 0; ci < k; ci++) result.nodes += branches[ci].nodes;
  for (int ci = 0; ci < k; ci++) {
    if (verdicts[ci] == Verdict::kSat) {
      result.verdict = Verdict::kSat;
      result.coloring.colors = branches[ci].extract(palette);
      break;
    }
    if (verdicts[ci] == Verdict::kBudgetExhausted)
      result.verdict = Verdict::kBudgetExhausted;
  }
  return result;
}

ChromaticResult chromatic_number(const SignedGraph& g, int k_max, const SolveOptions& opts) {
  if (k_max < 1) throw input_error("k_max must be at least 1");
  ChromaticResult result;
  for (int k = 1; k <= k_max; k++) {
    ColoringResult r = solve_coloring(g, k, opts);
    result.nodes += r.nodes;
    if (r.verdict == Verdict::kSat) {
      result.found = true;
      result.chi = k;
      return result;
    }
  }
  result.found = false;
  return result;
}

OracleVerdict brute_force_coloring(const SignedGraph& g, int k, long long budget) {
  std::vector<int> palette = ColorSet{k, false}.colors();
  long long c = static_cast<long long>(palette.size());
  long long total = 1;
  for (int v = 0; v < g.n(); v++) {
    if (total > budget / c) return OracleVerdict::kRefused;
    total *= c;
  }
  std::vector<int> idx(g.n(), 0);
  for (long long step = 0; step < total; step++) {
    bool proper = true;
    for (int e = 0; e < g.m() && proper; e++) {
      const Edge& ed = g.edge(e);
      proper = palette[idx[ed.u]] != ed.sign * palette[idx[ed.v]];
    }
    if (proper) return OracleVerdict::kSat;
    for (int v = g.n() - 1; v >= 0; v--) {
      if (++idx[v] < static_cast<int>(palette.size())) break;
      idx[v] = 0;
    }
  }
  return OracleVerdict::kUnsat;
}

}  // namespace sg
