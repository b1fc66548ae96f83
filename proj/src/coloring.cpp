#include "edgecol/coloring.hpp"

#include <algorithm>
#include <string>

#include "edgecol/error.hpp"

namespace edgecol {

EdgeColoring::EdgeColoring(const Multigraph& g, int palette) : g_(&g), k_(0) {
  const int n = g.vertex_count();
  at_.assign(n, std::vector<int>(1, -1));
  missing_.assign(n, DynBitset(1));
  class_size_.assign(1, 0);
  set_palette(palette);
}

void EdgeColoring::set_palette(int k) {
  if (k < 0) throw ContractViolation("negative palette");
  if (k < k_) {
    for (int c = k + 1; c <= k_; ++c)
      if (class_size_[c] > 0) throw ContractViolation("cannot drop color " + std::to_string(c) + " in use");
  }
  const int n = g_->vertex_count();
  for (int v = 0; v < n; ++v) {
    at_[v].resize(k + 1, -1);
    missing_[v].resize(k + 1);
    for (int c = k_ + 1; c <= k; ++c) missing_[v].set(c);
  }
  class_size_.resize(k + 1, 0);
  k_ = k;
}

VertexId EdgeColoring::mate(VertexId v, int c) const {
  const int e = at_[v][c];
  return e < 0 ? -1 : g_->other(e, v);
}

int EdgeColoring::first_missing(VertexId v) const {
  const int c = missing_[v].find_first();
  return c == DynBitset::npos ? 0 : c;
}

void EdgeColoring::assign(int e, int c) {
  if (e < 0 || e >= g_->edge_count()) throw ContractViolation("edge index out of range");
  if (c < 1 || c > k_) throw ContractViolation("color " + std::to_string(c) + " outside palette");
  if (color(e) != 0) throw ContractViolation("edge already colored");
  const auto [u, v] = g_->ends(e);
  if (!missing_[u].test(c) || !missing_[v].test(c))
    throw ContractViolation("color " + std::to_string(c) + " already present at an endpoint");
  if (static_cast<int>(color_.size()) <= e) color_.resize(g_->edge_count(), 0);
  color_[e] = c;
  at_[u][c] = e;
  at_[v][c] = e;
  missing_[u].reset(c);
  missing_[v].reset(c);
  ++class_size_[c];
  ++colored_;
}

void EdgeColoring::unassign(int e) {
  const int c = color(e);
  if (c == 0) return;
  const auto [u, v] = g_->ends(e);
  color_[e] = 0;
  at_[u][c] = -1;
  at_[v][c] = -1;
  missing_[u].set(c);
  missing_[v].set(c);
  --class_size_[c];
  --colored_;
}

std::vector<int> EdgeColoring::colors() const {
  std::vector<int> out(g_->edge_count(), 0);
  for (std::size_t e = 0; e < color_.size() && e < out.size(); ++e) out[e] = color_[e];
  return out;
}

int EdgeColoring::colors_used() const {
  int used = 0;
  for (int c = 1; c <= k_; ++c) used += class_size_[c] > 0;
  return used;
}

ProperCheck validate_proper(const Multigraph& g, std::span<const int> colors) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> seen(n);
  for (int v = 0; v < n; ++v) {
    auto& s = seen[v];
    for (int e : g.incident(v)) {
      const int c = e < static_cast<int>(colors.size()) ? colors[e] : 0;
      if (c == 0) continue;
      if (c < 0) return {false, v, c};
      if (static_cast<int>(s.size()) <= c) s.resize(c + 1, 0);
      if (s[c]++) return {false, v, c};
    }
  }
  return {};
}

ProperCheck validate_proper(const EdgeColoring& c) {
  const auto cols = c.colors();
  return validate_proper(c.graph(), cols);
}

bool consistent(const EdgeColoring& c) {
  const auto& g = c.graph();
  const int k = c.palette();
  std::vector<int> sizes(k + 1, 0);
  int colored = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const int col = c.color(e);
    if (col < 0 || col > k) return false;
    if (col) {
      ++sizes[col];
      ++colored;
    }
  }
  if (colored != c.colored_count()) return false;
  for (int col = 1; col <= k; ++col)
    if (sizes[col] != c.class_size(col)) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> at(k + 1, -1);
    for (int e : g.incident(v)) {
      const int col = c.color(e);
      if (!col) continue;
      if (at[col] != -1) return false;
      at[col] = e;
    }
    for (int col = 1; col <= k; ++col) {
      if (c.edge_at(v, col) != at[col]) return false;
      if (c.is_missing(v, col) != (at[col] == -1)) return false;
    }
    if (c.missing(v).test(0)) return false;
  }
  return true;
}

std::vector<int> kempe_swap(EdgeColoring& c, VertexId start, int i, int j) {
  std::vector<int> comp;
  if (i == j) return comp;
  std::vector<VertexId> stack{start};
  std::vector<VertexId> seen{start};
  auto visit = [&](VertexId v) {
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
      seen.push_back(v);
      stack.push_back(v);
    }
  };
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (int col : {i, j}) {
      const int e = c.edge_at(v, col);
      if (e < 0) continue;
      if (std::find(comp.begin(), comp.end(), e) == comp.end()) comp.push_back(e);
      visit(c.graph().other(e, v));
    }
  }
  std::vector<int> old(comp.size());
  for (std::size_t t = 0; t < comp.size(); ++t) {
    old[t] = c.color(comp[t]);
    c.unassign(comp[t]);
  }
  for (std::size_t t = 0; t < comp.size(); ++t) c.assign(comp[t], old[t] == i ? j : i);
  return comp;
}

namespace {

std::vector<int> scoped_sizes(const EdgeColoring& c, int lo, int hi, const std::optional<DynBitset>& scope) {
  std::vector<int> sizes(hi - lo + 1, 0);
  if (!scope) {
    for (int col = lo; col <= hi; ++col) sizes[col - lo] = c.class_size(col);
    return sizes;
  }
  scope->for_each([&](int v) {
    for (int col = lo; col <= hi; ++col)
      if (c.edge_at(v, col) >= 0) ++sizes[col - lo];
  });
  for (auto& s : sizes) s /= 2;
  return sizes;
}

}  // namespace

std::vector<int> class_sizes(const EdgeColoring& c, int lo, int hi) {
  return scoped_sizes(c, lo, hi, std::nullopt);
}

int equalize(EdgeColoring& c, const EqualizeOptions& opts) {
  const int lo = opts.lo;
  const int hi = opts.hi < 0 ? c.palette() : opts.hi;
  if (hi < lo) return 0;
  const int n = c.graph().vertex_count();
  const long long width = hi - lo + 1;
  const long long max_rounds = width * width * n + 1;
  int swaps = 0;
  for (long long round = 0; round < max_rounds; ++round) {
    const auto sizes = scoped_sizes(c, lo, hi, opts.scope);
    int small = 0, large = 0;
    for (int t = 1; t < width; ++t) {
      if (sizes[t] < sizes[small]) small = t;
      if (sizes[t] > sizes[large]) large = t;
    }
    if (sizes[large] - sizes[small] <= 1) break;
    const int i = lo + small, j = lo + large;
    bool swapped = false;
    for (int v = 0; v < n && !swapped; ++v) {
      if (opts.scope && !opts.scope->test(v)) continue;
      if (!c.is_missing(v, i) || c.is_missing(v, j)) continue;
      // Walk the (i,j)-path from v; it starts with a j-edge.
      int len = 0;
      VertexId cur = v;
      int col = j;
      while (true) {
        const int e = c.edge_at(cur, col);
        if (e < 0) break;
        ++len;
        cur = c.graph().other(e, cur);
        col = col == i ? j : i;
      }
      if (len % 2 == 1) {
        kempe_swap(c, v, i, j);
        ++swaps;
        swapped = true;
      }
    }
    if (!swapped) throw std::logic_error("equalize: no majority path found");
  }
  return swaps;
}

bool parity_check(const EdgeColoring& c, const std::optional<DynBitset>& scope) {
  const auto& g = c.graph();
  const int n = g.vertex_count();
  int delta = 0;
  int size = 0;
  for (int v = 0; v < n; ++v) {
    if (scope && !scope->test(v)) continue;
    delta = std::max(delta, g.degree(v));
    ++size;
  }
  const int top = std::min(delta, c.palette());
  for (int i = 1; i <= top; ++i) {
    int missing = 0;
    for (int v = 0; v < n; ++v) {
      if (scope && !scope->test(v)) continue;
      missing += c.is_missing(v, i);
    }
    if ((missing - size) % 2 != 0) return false;
  }
  return true;
}

}  // namespace edgecol
