#include "edgecol/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <string>

#include "edgecol/classic.hpp"
#include "edgecol/error.hpp"

namespace edgecol {

std::string to_string(ConditionTag t) {
  switch (t) {
    case ConditionTag::a: return "a";
    case ConditionTag::b: return "b";
    case ConditionTag::c: return "c";
  }
  return "?";
}

int SideState::cross_edge(VertexId u, VertexId v) const {
  if (in_a.test(u) == in_a.test(v)) return -1;
  const auto& list = gstar->edges_between(u, v);
  for (int e : list)
    if (kind[e] == EdgeKind::cross) return e;
  return -1;
}

std::vector<Edge> condition_pairs(const SimpleGraph& g, ConditionTag tag) {
  if (tag == ConditionTag::a) return {};
  const int delta = g.max_degree();
  const int low = g.min_degree();
  std::vector<VertexId> lightest, other;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == delta) continue;
    (g.degree(v) == low ? lightest : other).push_back(v);
  }
  if (tag == ConditionTag::b) {
    if (lightest.size() != 2 || !other.empty())
      throw ContractViolation("condition (b) needs exactly two vertices below max degree");
    return {{lightest[0], lightest[1]}};
  }
  const int heavy = g.order() - static_cast<int>(lightest.size() + other.size());
  const int count = (g.order() - heavy) / 2;
  std::vector<VertexId> order = lightest;
  order.insert(order.end(), other.begin(), other.end());
  std::vector<Edge> pairs;
  for (int t = 0; t < count; ++t) pairs.push_back({order[2 * t], order[2 * t + 1]});
  return pairs;
}

SideState make_state(const SimpleGraph& g, ConditionTag tag, const ConstantsProfile& profile, const PartitionAB& p) {
  SideState st;
  st.base = &g;
  st.tag = tag;
  st.profile = profile;
  st.n = g.order() / 2;
  st.delta = g.max_degree();
  st.partition = p;
  const int nv = g.vertex_count();
  st.in_a = p.in_a;
  st.in_b = g.active_set();
  st.in_b.subtract(st.in_a);
  st.s = DynBitset(nv);
  st.s_a = DynBitset(nv);
  st.s_b = DynBitset(nv);
  st.lightest = DynBitset(nv);
  const int low = g.min_degree();
  for (VertexId v : g.vertices())
    if (g.degree(v) == low) st.lightest.set(v);

  st.gstar = std::make_unique<Multigraph>(nv);
  const auto edges = g.edges();
  // Side edges first, then the cross edges.
  for (int pass = 0; pass < 2; ++pass) {
    for (int idx = 0; idx < static_cast<int>(edges.size()); ++idx) {
      const auto [u, v] = edges[idx];
      const bool same = st.in_a.test(u) == st.in_a.test(v);
      if (same != (pass == 0)) continue;
      st.gstar->add_edge(u, v);
      st.kind.push_back(!same ? EdgeKind::cross : st.in_a.test(u) ? EdgeKind::side_a : EdgeKind::side_b);
      st.base_edge.push_back(idx);
    }
  }
  st.residual_degree.assign(nv, 0);
  st.missing_extra.assign(nv, 0);
  st.report.condition = to_string(tag);
  st.report.profile = profile.name;
  st.report.order = g.order();
  st.report.max_degree = st.delta;
  st.report.min_degree = low;
  st.report.partition_certificate = p.certificate;
  st.report.partition_threshold = p.threshold;
  st.report.partition_random_tries = p.attempts;
  st.report.partition_polished = p.polished;
  return st;
}

namespace {

[[noreturn]] void fail(SideState& st, const std::string& step, const std::string& msg) {
  throw PipelineError(step, msg, st.report);
}

int side_max_degree(const SideState& st, bool side_a) {
  int best = 0;
  const auto& side = side_a ? st.in_a : st.in_b;
  side.for_each([&](int v) {
    int d = 0;
    for (int e : st.gstar->incident(v))
      if (st.kind[e] != EdgeKind::cross) ++d;
    best = std::max(best, d);
  });
  return best;
}

int side_degree(const SideState& st, VertexId v) {
  int d = 0;
  for (int e : st.gstar->incident(v))
    if (st.kind[e] != EdgeKind::cross) ++d;
  return d;
}

long long side_edge_count(const SideState& st, bool side_a) {
  long long m = 0;
  for (int e = 0; e < st.gstar->edge_count(); ++e) m += side_a ? st.on_a(e) : st.on_b(e);
  return m;
}

// Renames colors lo..hi on side A so that, ranked by class size, each A
// color takes the name of the B color of the same rank. A shuffle seed
// breaks ties between equal sizes at random.
void align_by_rank(SideState& st, int lo, int hi) {
  auto& col = *st.coloring;
  const int width = hi - lo + 1;
  if (width <= 0) return;
  std::vector<int> size_a(width, 0), size_b(width, 0);
  for (int e = 0; e < st.gstar->edge_count(); ++e) {
    const int c = col.color(e);
    if (c < lo || c > hi) continue;
    if (st.on_a(e)) ++size_a[c - lo];
    if (st.on_b(e)) ++size_b[c - lo];
  }
  std::vector<int> rank_a(width), rank_b(width);
  std::iota(rank_a.begin(), rank_a.end(), 0);
  std::iota(rank_b.begin(), rank_b.end(), 0);
  if (st.shuffle_seed) {
    std::mt19937_64 rng(derive_seed(st.shuffle_seed, 300 + lo));
    std::shuffle(rank_a.begin(), rank_a.end(), rng);
  }
  std::stable_sort(rank_a.begin(), rank_a.end(), [&](int x, int y) { return size_a[x] < size_a[y]; });
  std::stable_sort(rank_b.begin(), rank_b.end(), [&](int x, int y) { return size_b[x] < size_b[y]; });
  std::vector<int> rename(width);
  bool identity = true;
  for (int r = 0; r < width; ++r) {
    rename[rank_a[r]] = rank_b[r];
    identity = identity && rank_a[r] == rank_b[r];
  }
  if (identity) return;
  std::vector<std::pair<int, int>> moved;
  for (int e = 0; e < st.gstar->edge_count(); ++e) {
    const int c = col.color(e);
    if (c < lo || c > hi || !st.on_a(e)) continue;
    moved.push_back({e, lo + rename[c - lo]});
    col.unassign(e);
  }
  for (const auto& [e, c] : moved) col.assign(e, c);
}

// Per-color class sizes on each side must satisfy A == B, or A <= B for (c).
bool aligned(const SideState& st, int lo, int hi) {
  const auto& col = *st.coloring;
  std::vector<int> size_a(hi - lo + 1, 0), size_b(hi - lo + 1, 0);
  for (int e = 0; e < st.gstar->edge_count(); ++e) {
    const int c = col.color(e);
    if (c < lo || c > hi) continue;
    if (st.on_a(e)) ++size_a[c - lo];
    if (st.on_b(e)) ++size_b[c - lo];
  }
  for (int t = 0; t <= hi - lo; ++t) {
    if (st.tag == ConditionTag::c ? size_a[t] > size_b[t] : size_a[t] != size_b[t]) return false;
  }
  return true;
}

void swap_sides(SideState& st) {
  std::swap(st.in_a, st.in_b);
  for (auto& k : st.kind) {
    switch (k) {
      case EdgeKind::side_a: k = EdgeKind::side_b; break;
      case EdgeKind::side_b: k = EdgeKind::side_a; break;
      case EdgeKind::aug_a: k = EdgeKind::aug_b; break;
      case EdgeKind::aug_b: k = EdgeKind::aug_a; break;
      case EdgeKind::cross: break;
    }
  }
  std::swap(st.report.aug_edges_a, st.report.aug_edges_b);
}

// ---- step 2 helpers ----

class PathFinder {
 public:
  PathFinder(SideState& st, int color) : st_(st), col_(*st.coloring), i_(color), cap_(st.report.good_cap) {}

  // End of the good side edge colored i at w on w's side, or -1.
  VertexId good_mate(VertexId w, bool relaxed) const {
    const int e = col_.edge_at(w, i_);
    if (e < 0 || st_.kind[e] == EdgeKind::cross) return -1;
    const VertexId m = st_.gstar->other(e, w);
    if (relaxed) return m;
    if (st_.residual_degree[w] >= cap_ || st_.residual_degree[m] >= cap_) return -1;
    const auto& excluded = st_.in_a.test(w) ? st_.s_a : st_.s_b;
    if (excluded.test(w) || excluded.test(m)) return -1;
    return m;
  }

  int open_cross(VertexId u, VertexId v) const {
    const int e = st_.cross_edge(u, v);
    return e >= 0 && col_.color(e) == 0 ? e : -1;
  }

  // Vertices on the other side joined to v by an uncolored cross edge.
  std::vector<VertexId> open_cross_neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (int e : st_.gstar->incident(v))
      if (st_.kind[e] == EdgeKind::cross && col_.color(e) == 0) out.push_back(st_.gstar->other(e, v));
    std::sort(out.begin(), out.end());
    return out;
  }

  // a b1 b2 a2 a1 b with a, a1, a2 on one side and b, b1, b2 on the other.
  std::vector<int> shape_cross(VertexId a, VertexId b, bool relaxed) const {
    for (VertexId a1 : open_cross_neighbors(b)) {
      const VertexId a2 = good_mate(a1, relaxed);
      if (a2 < 0) continue;
      for (VertexId b2 : open_cross_neighbors(a2)) {
        const VertexId b1 = good_mate(b2, relaxed);
        if (b1 < 0) continue;
        const int first = open_cross(a, b1);
        if (first < 0) continue;
        return {first, col_.edge_at(b1, i_), open_cross(b2, a2), col_.edge_at(a2, i_), open_cross(a1, b)};
      }
    }
    return {};
  }

  // p y1 y2 x2 x2* y2* y1* q with p, q, x2, x2* on one side.
  std::vector<int> shape_same(VertexId p, VertexId q, bool relaxed) const {
    for (VertexId y1s : open_cross_neighbors(q)) {
      const VertexId y2s = good_mate(y1s, relaxed);
      if (y2s < 0) continue;
      for (VertexId x2s : open_cross_neighbors(y2s)) {
        const VertexId x2 = good_mate(x2s, relaxed);
        if (x2 < 0) continue;
        for (VertexId y2 : open_cross_neighbors(x2)) {
          if (y2 == y1s || y2 == y2s) continue;
          const VertexId y1 = good_mate(y2, relaxed);
          if (y1 < 0) continue;
          const int first = open_cross(p, y1);
          if (first < 0) continue;
          return {first,
                  col_.edge_at(y1, i_),
                  open_cross(y2, x2),
                  col_.edge_at(x2, i_),
                  open_cross(x2s, y2s),
                  col_.edge_at(y2s, i_),
                  open_cross(y1s, q)};
        }
      }
    }
    return {};
  }

  // Shortest alternating path from p to q: uncolored edges of G* alternate
  // with i-edges that are cross edges or good side edges.
  std::vector<int> search(VertexId p, VertexId q, bool relaxed) const {
    const int nv = st_.gstar->vertex_count();
    std::vector<int> via(nv, -2);  // edge that reached the vertex
    std::vector<VertexId> from(nv, -1);
    std::deque<VertexId> queue{p};
    via[p] = -1;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (int e : st_.gstar->incident(x)) {
        if (col_.color(e) != 0) continue;
        const VertexId w = st_.gstar->other(e, x);
        if (via[w] != -2) continue;
        if (w == q) {
          std::vector<int> path{e};
          for (VertexId cur = x; cur != p;) {
            const VertexId mid = from[cur];
            path.push_back(via[cur]);
            path.push_back(via[mid]);
            cur = from[mid];
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        const int f = col_.edge_at(w, i_);
        if (f < 0) continue;
        const VertexId m = st_.gstar->other(f, w);
        if (via[m] != -2) continue;
        if (st_.kind[f] != EdgeKind::cross && good_mate(w, relaxed) < 0) continue;
        via[w] = e;
        from[w] = x;
        via[m] = f;
        from[m] = w;
        queue.push_back(m);
      }
    }
    return {};
  }

 private:
  SideState& st_;
  const EdgeColoring& col_;
  int i_;
  int cap_;
};

// Colors the even-position edges i and uncolors the odd ones.
void exchange(SideState& st, const std::vector<int>& path, int i) {
  auto& col = *st.coloring;
  for (std::size_t t = 1; t < path.size(); t += 2) {
    const int e = path[t];
    col.unassign(e);
    if (st.side_edge(e)) {
      const auto [u, v] = st.gstar->ends(e);
      ++st.residual_degree[u];
      ++st.residual_degree[v];
      st.report.max_residual_degree =
          std::max({st.report.max_residual_degree, st.residual_degree[u], st.residual_degree[v]});
    }
  }
  for (std::size_t t = 0; t < path.size(); t += 2) {
    const int e = path[t];
    col.assign(e, i);
    if (st.side_edge(e)) {
      const auto [u, v] = st.gstar->ends(e);
      --st.residual_degree[u];
      --st.residual_degree[v];
    }
  }
  ++st.report.paths_by_length[static_cast<int>(path.size())];
}

std::string pair_name(const SideState& st, VertexId u, VertexId v) {
  auto side = [&](VertexId w) { return st.in_a.test(w) ? "A" : "B"; };
  return std::to_string(u) + side(u) + "-" + std::to_string(v) + side(v);
}

void relocate(SideState& st, const DynBitset& from, bool from_a) {
  auto& col = *st.coloring;
  from.for_each([&](int a) {
    for (int i = 1; i <= st.k; ++i) {
      if (!col.is_missing(a, i)) continue;
      PathFinder pf(st, i);
      bool done = false;
      for (VertexId b1 : pf.open_cross_neighbors(a)) {
        const VertexId b2 = pf.good_mate(b1, false);
        if (b2 < 0) continue;
        exchange(st, {pf.open_cross(a, b1), col.edge_at(b1, i)}, i);
        ++st.report.relocations;
        done = true;
        break;
      }
      if (!done) {
        if (st.profile.strict_bounds)
          fail(st, "step2", "no relocation edge for color " + std::to_string(i) + " at " + (from_a ? "A" : "B") +
                                " vertex " + std::to_string(a));
        ++st.report.relocations_skipped;
      }
    }
  });
}

// ---- step 3 helpers ----

struct SideResidual {
  Multigraph graph;
  std::vector<int> edge;  // residual edge -> G* edge
};

SideResidual residual_of(const SideState& st, bool side_a) {
  SideResidual r{Multigraph(st.gstar->vertex_count()), {}};
  for (int e = 0; e < st.gstar->edge_count(); ++e) {
    if (st.coloring->color(e) != 0) continue;
    if (side_a ? !st.on_a(e) : !st.on_b(e)) continue;
    const auto [u, v] = st.gstar->ends(e);
    r.graph.add_edge(u, v);
    r.edge.push_back(e);
  }
  return r;
}

std::vector<int> color_order(const SideState& st, int lo, int hi) {
  std::vector<int> order(hi - lo + 1);
  std::iota(order.begin(), order.end(), lo);
  if (st.shuffle_seed) {
    std::mt19937_64 rng(derive_seed(st.shuffle_seed, lo));
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

std::optional<std::vector<int>> color_residual(const Multigraph& r, int palette) {
  if (r.edge_count() == 0) return std::vector<int>{};
  if (r.max_degree() > palette) return std::nullopt;
  auto greedy = greedy_multigraph_color(r, palette, true);
  if (greedy) return greedy;
  if (r.max_multiplicity() <= 1 && palette >= r.max_degree() + 1) return vizing_color(r);
  return std::nullopt;
}

}  // namespace

void step1(SideState& st) {
  auto& rep = st.report;
  const int n = st.n;
  const SimpleGraph& g = *st.base;
  rep.s_threshold = st.profile.s_threshold(n);
  for (VertexId v : g.vertices())
    if (st.delta - g.degree(v) >= rep.s_threshold) st.s.set(v);
  rep.s_size = st.s.count();
  st.k = std::max(side_max_degree(st, true), side_max_degree(st, false)) + 1;
  rep.k = st.k;
  st.coloring = std::make_unique<EdgeColoring>(*st.gstar, st.k);
  auto& col = *st.coloring;

  std::vector<int> side_edges;
  for (int e = 0; e < st.gstar->edge_count(); ++e)
    if (st.side_edge(e)) side_edges.push_back(e);
  vizing_extend(col, side_edges);

  // Join S-vertices of one side that share a missing color.
  for (bool changed = true; changed;) {
    changed = false;
    for (int side = 0; side < 2; ++side) {
      DynBitset members = st.s;
      members &= side == 0 ? st.in_a : st.in_b;
      const auto list = members.to_vector();
      for (std::size_t x = 0; x < list.size(); ++x) {
        for (std::size_t y = x + 1; y < list.size(); ++y) {
          const VertexId u = list[x], v = list[y];
          if (st.gstar->degree(u) >= st.delta || st.gstar->degree(v) >= st.delta) continue;
          const int c = col.missing(u).find_first_common(col.missing(v));
          if (c == DynBitset::npos || c == 0 || c > st.k) continue;
          const int e = st.gstar->add_edge(u, v);
          st.kind.push_back(side == 0 ? EdgeKind::aug_a : EdgeKind::aug_b);
          st.base_edge.push_back(-1);
          col.assign(e, c);
          ++(side == 0 ? rep.aug_edges_a : rep.aug_edges_b);
          changed = true;
        }
      }
    }
  }
  st.residual_degree.assign(st.gstar->vertex_count(), 0);

  rep.equalize_swaps += equalize(col, {1, st.k, st.in_a});
  rep.equalize_swaps += equalize(col, {1, st.k, st.in_b});

  if (st.tag == ConditionTag::c && side_edge_count(st, true) > side_edge_count(st, false)) {
    swap_sides(st);
    rep.sides_swapped = true;
  }
  align_by_rank(st, 1, st.k);
  if (!aligned(st, 1, st.k)) fail(st, "step1", "side color classes cannot be aligned");
  if (!parity_check(col, st.in_a) || !parity_check(col, st.in_b))
    fail(st, "step1", "missing-color parity differs from side size parity");

  for (int side = 0; side < 2; ++side) {
    const auto& members = side == 0 ? st.in_a : st.in_b;
    long long sum = 0;
    int worst = 0;
    members.for_each([&](int v) { sum += col.missing_count(v) - (col.palette() - st.k); });
    for (int i = 1; i <= st.k; ++i) {
      int cnt = 0;
      members.for_each([&](int v) { cnt += col.is_missing(v, i); });
      worst = std::max(worst, cnt);
    }
    (side == 0 ? rep.missing_sum_a : rep.missing_sum_b) = sum;
    (side == 0 ? rep.max_class_missing_a : rep.max_class_missing_b) = worst;
  }
  rep.missing_sum_bound = 4.0 * std::pow(n, 5.0 / 3.0) - 2.0 * n;
  rep.class_missing_bound = 4.0 * std::pow(n, 2.0 / 3.0);
  rep.step1_bounds_hold = std::max(rep.missing_sum_a, rep.missing_sum_b) <= rep.missing_sum_bound &&
                          std::max(rep.max_class_missing_a, rep.max_class_missing_b) <= rep.class_missing_bound;
  if (st.profile.strict_bounds && !rep.step1_bounds_hold) fail(st, "step1", "missing-color bounds exceeded");

  rep.side_slack = st.profile.side_slack(n);
  st.s.for_each([&](int v) {
    if (side_degree(st, v) <= st.k - rep.side_slack) (st.in_a.test(v) ? st.s_a : st.s_b).set(v);
  });
  rep.s_a = st.s_a.count();
  rep.s_b = st.s_b.count();
}

void step2(SideState& st) {
  auto& rep = st.report;
  auto& col = *st.coloring;
  rep.good_cap = st.profile.good_cap(st.n);
  relocate(st, st.s_a, true);
  relocate(st, st.s_b, false);

  const bool fallback = st.profile.general_path_fallback;
  for (int i : color_order(st, 1, st.k)) {
    std::vector<VertexId> miss_a, miss_b;
    st.in_a.for_each([&](int v) {
      if (col.is_missing(v, i)) miss_a.push_back(v);
    });
    st.in_b.for_each([&](int v) {
      if (col.is_missing(v, i)) miss_b.push_back(v);
    });
    if (st.shuffle_seed) {
      std::mt19937_64 rng(derive_seed(st.shuffle_seed, 100 + i));
      std::shuffle(miss_a.begin(), miss_a.end(), rng);
      std::shuffle(miss_b.begin(), miss_b.end(), rng);
    }
    std::vector<Edge> pairs;
    const std::size_t cross = std::min(miss_a.size(), miss_b.size());
    for (std::size_t t = 0; t < cross; ++t) pairs.push_back({miss_a[t], miss_b[t]});
    const auto& rest = miss_a.size() > cross ? miss_a : miss_b;
    if ((rest.size() - cross) % 2) fail(st, "step2", "odd number of unpaired vertices missing color " + std::to_string(i));
    for (std::size_t t = cross; t + 1 < rest.size(); t += 2) pairs.push_back({rest[t], rest[t + 1]});

    for (const auto& [p, q] : pairs) {
      const bool is_cross = st.in_a.test(p) != st.in_a.test(q);
      if (is_cross) ++rep.pairs_ab;
      else ++(st.in_a.test(p) ? rep.pairs_aa : rep.pairs_bb);
      PathFinder pf(st, i);
      std::vector<int> path;
      if (st.profile.prefer_direct_paths && is_cross) {
        const int e = pf.open_cross(p, q);
        if (e >= 0) {
          path = {e};
          ++rep.direct_paths;
        }
      }
      for (int relaxed = 0; relaxed < (fallback ? 2 : 1) && path.empty(); ++relaxed) {
        path = is_cross ? pf.shape_cross(st.in_a.test(p) ? p : q, st.in_a.test(p) ? q : p, relaxed)
                        : pf.shape_same(p, q, relaxed);
        if (!path.empty()) {
          ++(relaxed ? rep.relaxed_paths : rep.shape_paths);
          break;
        }
        if (!fallback) break;
        path = pf.search(p, q, relaxed);
        if (!path.empty()) ++(relaxed ? rep.relaxed_paths : rep.search_paths);
      }
      if (path.empty()) fail(st, "step2", "no alternating path for color " + std::to_string(i) + " pair " + pair_name(st, p, q));
      exchange(st, path, i);
    }
    if (col.class_size(i) != st.n)
      fail(st, "step2", "color " + std::to_string(i) + " is not a perfect matching after pairing");
  }
}

void step3(SideState& st) {
  auto& rep = st.report;
  auto& col = *st.coloring;
  const int n = st.n;
  SideResidual ra = residual_of(st, true), rb = residual_of(st, false);
  rep.residual_a_edges = ra.graph.edge_count();
  rep.residual_b_edges = rb.graph.edge_count();
  rep.residual_a_max_degree = ra.graph.max_degree();
  rep.residual_b_max_degree = rb.graph.max_degree();
  rep.residual_cap = st.profile.residual_cap(n);
  rep.ell_paper = st.profile.ell(n);
  if (st.profile.strict_bounds &&
      std::max(rep.residual_a_edges, rep.residual_b_edges) >= rep.residual_cap)
    fail(st, "step3", "residual side graphs exceed the size cap");

  const int room = st.delta - st.k;
  std::optional<std::vector<int>> ca, cb;
  if (st.profile.adaptive_ell && !st.profile.ell_override) {
    for (int ell = std::max(rep.residual_a_max_degree, rep.residual_b_max_degree); ell <= room; ++ell) {
      ca = color_residual(ra.graph, ell);
      cb = ca ? color_residual(rb.graph, ell) : std::nullopt;
      if (ca && cb) {
        st.ell = ell;
        break;
      }
    }
    if (!ca || !cb) fail(st, "step3", "no extra palette up to " + std::to_string(room) + " colors the residual graphs");
  } else {
    st.ell = rep.ell_paper;
    if (st.ell > room)
      fail(st, "step3", "extra palette " + std::to_string(st.ell) + " exceeds max degree minus k (" +
                            std::to_string(room) + ")");
    ca = color_residual(ra.graph, st.ell);
    cb = color_residual(rb.graph, st.ell);
    if (!ca || !cb) fail(st, "step3", "residual graphs not colorable with " + std::to_string(st.ell) + " colors");
  }
  rep.ell = st.ell;
  const int k = st.k, top = st.k + st.ell;
  col.set_palette(top);
  for (std::size_t t = 0; t < ra.edge.size(); ++t) col.assign(ra.edge[t], k + (*ca)[t]);
  for (std::size_t t = 0; t < rb.edge.size(); ++t) col.assign(rb.edge[t], k + (*cb)[t]);
  st.residual_degree.assign(st.gstar->vertex_count(), 0);
  if (st.ell > 0) {
    rep.equalize_swaps += equalize(col, {k + 1, top, st.in_a});
    rep.equalize_swaps += equalize(col, {k + 1, top, st.in_b});
    align_by_rank(st, k + 1, top);
    if (!aligned(st, k + 1, top)) fail(st, "step3", "extra color classes cannot be aligned");
  }

  const int nv = st.gstar->vertex_count();
  st.missing_extra.assign(nv, 0);
  auto slack = [&](VertexId v) { return st.delta - st.gstar->degree(v) - st.missing_extra[v]; };
  struct Plan {
    bool balanced = false;
    DynBitset excluded, x, y;
    std::vector<VertexId> balance, unmatched;
    MatchingResult m;
  };
  auto plan_for = [&](int i) {
    Plan pl;
    pl.excluded = DynBitset(nv);
    int covered_a = 0, covered_b = 0;
    for (int v = 0; v < nv; ++v) {
      if (col.is_missing(v, i) || (!st.in_a.test(v) && !st.in_b.test(v))) continue;
      pl.excluded.set(v);
      ++(st.in_a.test(v) ? covered_a : covered_b);
    }
    // Balance the sides by letting slack vertices miss color i.
    const auto& side = covered_a < covered_b ? st.in_a : st.in_b;
    const int need = std::abs(covered_a - covered_b);
    std::vector<VertexId> candidates;
    side.for_each([&](int v) {
      if (!pl.excluded.test(v) && st.lightest.test(v) && slack(v) > 0) candidates.push_back(v);
    });
    if (static_cast<int>(candidates.size()) < need) {
      std::vector<VertexId> more;
      side.for_each([&](int v) {
        if (!pl.excluded.test(v) && !st.lightest.test(v) && slack(v) > 0) more.push_back(v);
      });
      std::stable_sort(more.begin(), more.end(), [&](VertexId x, VertexId y) { return slack(x) > slack(y); });
      candidates.insert(candidates.end(), more.begin(), more.end());
    }
    if (static_cast<int>(candidates.size()) < need) return pl;
    pl.balanced = true;
    for (int t = 0; t < need; ++t) {
      pl.excluded.set(candidates[t]);
      pl.balance.push_back(candidates[t]);
    }
    pl.x = st.in_a;
    pl.y = st.in_b;
    pl.x.subtract(pl.excluded);
    pl.y.subtract(pl.excluded);
    SimpleGraph h(nv);
    for (int e = 0; e < st.gstar->edge_count(); ++e) {
      if (st.kind[e] != EdgeKind::cross || col.color(e) != 0) continue;
      const auto [u, v] = st.gstar->ends(e);
      if (pl.excluded.test(u) || pl.excluded.test(v)) continue;
      h.add_edge(u, v);
    }
    int t_min = pl.x.any() ? nv : 0;
    auto lower = [&](int v) { t_min = std::min(t_min, h.degree(v)); };
    pl.x.for_each(lower);
    pl.y.for_each(lower);
    pl.m = pm_with_degree_condition(h, pl.x, pl.y, t_min);
    std::vector<char> matched(nv, 0);
    for (const auto& [u, v] : pl.m.matching) matched[u] = matched[v] = 1;
    DynBitset both = pl.x;
    both |= pl.y;
    both.for_each([&](int v) {
      if (!matched[v]) pl.unmatched.push_back(v);
    });
    return pl;
  };

  std::vector<int> pending = color_order(st, k + 1, top);
  std::reverse(pending.begin(), pending.end());
  while (!pending.empty()) {
    const int i = pending.back();
    pending.pop_back();
    Plan pl = plan_for(i);
    if (!pl.balanced) fail(st, "step3", "too few slack vertices to balance color " + std::to_string(i));
    // Even (i,j)-chains from an unmatched vertex, j still pending, move color
    // i along its side without changing any class size; keep a swap only if
    // it helps.
    if (st.profile.general_path_fallback) {
      for (bool improved = true; improved && !pl.unmatched.empty();) {
        improved = false;
        for (std::size_t u = 0; u < pl.unmatched.size() && !improved; ++u) {
          const VertexId v = pl.unmatched[u];
          for (std::size_t jj = 0; jj < pending.size() && !improved; ++jj) {
            const int j = pending[jj];
            if (col.is_missing(v, j)) continue;
            const auto comp = kempe_swap(col, v, i, j);
            if (comp.size() % 2 == 0) {
              Plan next = plan_for(i);
              if (next.balanced && next.unmatched.size() < pl.unmatched.size()) {
                pl = std::move(next);
                improved = true;
                ++rep.chain_repairs;
                continue;
              }
            }
            kempe_swap(col, v, i, j);
          }
        }
      }
    }
    for (VertexId v : pl.balance) ++st.missing_extra[v];
    rep.excluded_total += static_cast<int>(pl.balance.size());
    if (!pl.unmatched.empty()) {
      // Unmatched vertices may miss i only if they have slack to spare.
      bool ok = st.profile.general_path_fallback;
      for (VertexId v : pl.unmatched)
        if (slack(v) <= 0) ok = false;
      if (!ok) fail(st, "step3", "no perfect matching for color " + std::to_string(i));
      for (VertexId v : pl.unmatched) ++st.missing_extra[v];
      ++rep.matching_fallbacks;
      rep.unmatched_total += static_cast<int>(pl.unmatched.size());
    }
    for (const auto& [u, v] : pl.m.matching) col.assign(st.cross_edge(u, v), i);
    rep.matching_sizes.push_back(static_cast<int>(pl.m.matching.size()));
  }
}

void step4(SideState& st) {
  auto& rep = st.report;
  auto& col = *st.coloring;
  const int nv = st.gstar->vertex_count();
  Multigraph r(nv);
  std::vector<int> edge;
  for (int e = 0; e < st.gstar->edge_count(); ++e) {
    if (col.color(e) != 0) continue;
    if (st.kind[e] != EdgeKind::cross) fail(st, "step4", "side edge left uncolored");
    const auto [u, v] = st.gstar->ends(e);
    r.add_edge(u, v);
    edge.push_back(e);
  }
  const int base = st.k + st.ell;
  rep.delta_r = r.max_degree();
  rep.expected_delta_r = st.delta - base;
  if (rep.delta_r > rep.expected_delta_r)
    fail(st, "step4", "remaining cross graph has max degree " + std::to_string(rep.delta_r) + ", expected " +
                          std::to_string(rep.expected_delta_r));
  const auto colors = konig_color(r);
  col.set_palette(st.delta);
  for (std::size_t t = 0; t < edge.size(); ++t) col.assign(edge[t], base + colors[t]);
  if (col.colored_count() != st.gstar->edge_count()) fail(st, "step4", "coloring incomplete");
  if (!validate_proper(col)) fail(st, "step4", "final coloring is not proper");
  rep.palette = st.delta;
}

std::vector<int> base_colors(const SideState& st) {
  std::vector<int> out(st.base->edge_count(), 0);
  for (int e = 0; e < st.gstar->edge_count(); ++e)
    if (st.base_edge[e] >= 0) out[st.base_edge[e]] = st.coloring->color(e);
  return out;
}

DenseColoring color_dense(const SimpleGraph& g, ConditionTag tag, const ConstantsProfile& profile, std::uint64_t seed) {
  if (g.order() % 2) throw HypothesisError("dense coloring needs an even number of vertices");
  if (tag == ConditionTag::a && !g.is_regular()) throw ContractViolation("condition (a) needs a regular graph");
  const auto pairs = condition_pairs(g, tag);
  const int attempts = std::max(1, profile.max_attempts);
  std::vector<AttemptFailure> failures;
  PipelineReport last;
  std::string last_step = "partition";
  for (int a = 0; a < attempts; ++a) {
    const std::uint64_t s = a == 0 ? seed : derive_seed(seed, 1000 + a);
    try {
      const auto p = balanced_partition(g, pairs, profile, s);
      SideState st = make_state(g, tag, profile, p);
      st.report.seed = seed;
      step1(st);
      const EdgeColoring after1 = *st.coloring;
      const auto residual1 = st.residual_degree;
      const PipelineReport report1 = st.report;
      const int rounds = std::max(1, profile.finish_rounds);
      for (int r = 0;; ++r) {
        try {
          step2(st);
          step3(st);
          step4(st);
          st.report.attempts = a + 1;
          st.report.finish_round = r;
          st.report.failures = failures;
          return {base_colors(st), st.delta, st.report};
        } catch (const PipelineError& e) {
          if (r + 1 >= rounds) throw;
        }
        *st.coloring = after1;
        st.residual_degree = residual1;
        st.missing_extra.clear();
        st.ell = 0;
        st.report = report1;
        st.shuffle_seed = derive_seed(s, 2000 + r);
        align_by_rank(st, 1, st.k);
      }
    } catch (const PipelineError& e) {
      failures.push_back({a + 1, e.step, e.message});
      last = e.report;
      last_step = e.step;
    } catch (const PartitionError& e) {
      failures.push_back({a + 1, "partition", e.what()});
      last_step = "partition";
    }
  }
  last.seed = seed;
  last.attempts = attempts;
  last.failures = failures;
  throw PipelineError(last_step, failures.back().message, last);
}

}  // namespace edgecol
