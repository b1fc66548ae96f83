#include "edgecol/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <string>

namespace edgecol {

namespace {

struct Timeout {};

class Search {
 public:
  Search(const Multigraph& g, int k, const OracleBudget& budget)
      : g_(g), k_(k), n_(g.vertex_count()), used_(n_, 0), uncolored_at_(n_, 0), color_(g.edge_count(), 0),
        class_count_(k + 1, 0), deadline_(std::chrono::steady_clock::now() +
                                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                              std::chrono::duration<double>(budget.max_seconds))) {
    full_ = k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    for (int v = 0; v < n_; ++v) {
      uncolored_at_[v] = g.degree(v);
      if (g.degree(v) > 0) ++active_;
    }
    uncolored_ = g.edge_count();
  }

  bool run() {
    if (g_.edge_count() == 0) return true;
    if (g_.max_degree() > k_) return false;
    // Fix the star of a maximum-degree vertex to colors 1..d.
    int hub = 0;
    for (int v = 1; v < n_; ++v)
      if (g_.degree(v) > g_.degree(hub)) hub = v;
    int c = 0;
    for (int e : g_.incident(hub)) {
      const auto [u, v] = g_.ends(e);
      if (used_[u] & used_[v] & (std::uint64_t{1} << c)) return false;
      set(e, c);
      ++c;
    }
    return dfs();
  }

  long long nodes() const { return nodes_; }
  std::vector<int> colors() const {
    std::vector<int> out(color_.size());
    for (std::size_t e = 0; e < color_.size(); ++e) out[e] = color_[e];
    return out;
  }

 private:
  void set(int e, int c) {
    const auto [u, v] = g_.ends(e);
    const std::uint64_t bit = std::uint64_t{1} << c;
    used_[u] |= bit;
    used_[v] |= bit;
    color_[e] = c + 1;
    --uncolored_at_[u];
    --uncolored_at_[v];
    --uncolored_;
    ++colored_;
    ++class_count_[c];
  }

  void clear(int e) {
    const auto [u, v] = g_.ends(e);
    const int c = color_[e] - 1;
    const std::uint64_t bit = std::uint64_t{1} << c;
    used_[u] &= ~bit;
    used_[v] &= ~bit;
    color_[e] = 0;
    ++uncolored_at_[u];
    ++uncolored_at_[v];
    ++uncolored_;
    --colored_;
    --class_count_[c];
  }

  // Each class inside a vertex set X holds at most floor(|X|/2) edges.
  bool capacity_ok() const {
    const long long half = active_ / 2;
    if (uncolored_ > k_ * half - colored_) return false;
    const long long half_minus = (active_ - 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if (g_.degree(v) == 0) continue;
      const long long inside = uncolored_ - uncolored_at_[v];
      const long long cap = k_ * half_minus - colored_ + std::popcount(used_[v]);
      if (inside > cap) return false;
    }
    return true;
  }

  bool dfs() {
    if (uncolored_ == 0) return true;
    if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) throw Timeout{};
    if (!capacity_ok()) return false;
    int best = -1, best_size = 65, best_weight = -1;
    for (int e = 0; e < g_.edge_count(); ++e) {
      if (color_[e]) continue;
      const auto [u, v] = g_.ends(e);
      const int size = std::popcount(~(used_[u] | used_[v]) & full_);
      const int weight = g_.degree(u) + g_.degree(v);
      if (size < best_size || (size == best_size && weight > best_weight)) {
        best = e;
        best_size = size;
        best_weight = weight;
      }
    }
    if (best_size == 0) return false;
    const auto [u, v] = g_.ends(best);
    std::uint64_t dom = ~(used_[u] | used_[v]) & full_;
    bool fresh_tried = false;
    while (dom) {
      const int c = std::countr_zero(dom);
      dom &= dom - 1;
      if (class_count_[c] == 0) {
        if (fresh_tried) continue;  // unused colors are interchangeable
        fresh_tried = true;
      }
      set(best, c);
      if (dfs()) return true;
      clear(best);
    }
    return false;
  }

  const Multigraph& g_;
  long long k_;
  int n_;
  int active_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> used_;
  std::vector<int> uncolored_at_;
  std::vector<int> color_;
  std::vector<int> class_count_;
  long long uncolored_ = 0;
  long long colored_ = 0;
  long long nodes_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

void check_budget(int vertices, const OracleBudget& budget) {
  if (vertices > budget.max_vertices)
    throw OracleBudgetError("oracle budget is " + std::to_string(budget.max_vertices) + " vertices, graph has " +
                            std::to_string(vertices));
}

}  // namespace

OracleResult colorable_with(const Multigraph& g, int k, const OracleBudget& budget) {
  check_budget(g.vertex_count(), budget);
  if (k > 63) throw OracleBudgetError("oracle supports at most 63 colors");
  OracleResult r;
  Search s(g, k, budget);
  try {
    if (s.run()) {
      r.chromatic_index = k;
      r.coloring = s.colors();
    }
  } catch (const Timeout&) {
    r.status = OracleStatus::timeout;
  }
  r.nodes = s.nodes();
  return r;
}

OracleResult exact_chromatic_index(const Multigraph& g, const OracleBudget& budget) {
  check_budget(g.vertex_count(), budget);
  const auto start = std::chrono::steady_clock::now();
  long long nodes = 0;
  for (int k = g.max_degree();; ++k) {
    OracleBudget left = budget;
    left.max_seconds = budget.max_seconds - std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (left.max_seconds <= 0) return {OracleStatus::timeout, -1, {}, nodes};
    auto r = colorable_with(g, k, left);
    nodes += r.nodes;
    r.nodes = nodes;
    if (r.status == OracleStatus::timeout || r.chromatic_index == k) return r;
  }
}

OracleResult exact_chromatic_index(const SimpleGraph& g, const OracleBudget& budget) {
  check_budget(g.order(), budget);
  // Drop inactive vertices so the budget applies to the real order.
  const auto verts = g.vertices();
  std::vector<int> idx(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) idx[verts[i]] = i;
  Multigraph m(static_cast<int>(verts.size()));
  for (const auto& e : g.edges()) m.add_edge(idx[e.u], idx[e.v]);
  return exact_chromatic_index(m, budget);
}

std::vector<std::vector<VertexId>> exhaustive_overfull_scan(const SimpleGraph& g, int delta_ref,
                                                            const OracleBudget& budget) {
  const auto verts = g.vertices();
  const int m = static_cast<int>(verts.size());
  check_budget(m, budget);
  std::vector<std::uint32_t> adj(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && g.has_edge(verts[i], verts[j])) adj[i] |= 1u << j;
  std::vector<std::vector<VertexId>> out;
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    const int size = std::popcount(s);
    if (size % 2 == 0) continue;
    long long twice = 0;
    for (std::uint32_t r = s; r; r &= r - 1) twice += std::popcount(adj[std::countr_zero(r)] & s);
    if (twice / 2 > static_cast<long long>(delta_ref) * (size / 2)) {
      std::vector<VertexId> w;
      for (std::uint32_t r = s; r; r &= r - 1) w.push_back(verts[std::countr_zero(r)]);
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace edgecol
