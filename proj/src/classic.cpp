#include "edgecol/classic.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "edgecol/error.hpp"

namespace edgecol {

// ---------------------------------------------------------------- Vizing

namespace {

bool is_fan_prefix(const EdgeColoring& c, const std::vector<int>& fan_edges, const std::vector<VertexId>& fan,
                   int upto) {
  for (int j = 0; j < upto; ++j) {
    const int col = c.color(fan_edges[j + 1]);
    if (col == 0 || !c.is_missing(fan[j], col)) return false;
  }
  return true;
}

void color_one_edge(EdgeColoring& c, int e) {
  const auto& g = c.graph();
  const VertexId x = g.ends(e).u;
  std::vector<VertexId> fan{g.ends(e).v};
  std::vector<int> fan_edges{e};
  while (true) {
    const VertexId last = fan.back();
    int next = -1;
    const auto& miss = c.missing(last);
    for (int col = miss.find_first(); col != DynBitset::npos; col = miss.find_next(col + 1)) {
      const int f = c.edge_at(x, col);
      if (f < 0) continue;
      const VertexId z = g.other(f, x);
      if (std::find(fan.begin(), fan.end(), z) != fan.end()) continue;
      next = f;
      break;
    }
    if (next < 0) break;
    fan.push_back(g.other(next, x));
    fan_edges.push_back(next);
  }
  const int cx = c.first_missing(x);
  const int d = c.first_missing(fan.back());
  if (cx == 0 || d == 0) throw ContractViolation("vizing_extend: palette too small");
  if (cx != d) kempe_swap(c, x, cx, d);
  int w = -1;
  for (int j = 0; j < static_cast<int>(fan.size()); ++j) {
    if (c.is_missing(fan[j], d) && is_fan_prefix(c, fan_edges, fan, j)) {
      w = j;
      break;
    }
  }
  if (w < 0) throw std::logic_error("vizing_extend: no rotatable fan prefix");
  std::vector<int> shifted(w);
  for (int j = 0; j < w; ++j) shifted[j] = c.color(fan_edges[j + 1]);
  for (int j = 1; j <= w; ++j) c.unassign(fan_edges[j]);
  for (int j = 0; j < w; ++j) c.assign(fan_edges[j], shifted[j]);
  c.assign(fan_edges[w], d);
}

}  // namespace

void vizing_extend(EdgeColoring& c, std::span<const int> edges) {
  for (int e : edges)
    if (c.color(e) == 0) color_one_edge(c, e);
}

std::vector<int> vizing_color(const Multigraph& g) {
  if (g.max_multiplicity() > 1) throw ContractViolation("vizing_color needs a simple graph");
  EdgeColoring c(g, g.max_degree() + 1);
  std::vector<int> all(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) all[e] = e;
  vizing_extend(c, all);
  return c.colors();
}

std::vector<int> vizing_color(const SimpleGraph& g) { return vizing_color(Multigraph::from_simple(g)); }

// ---------------------------------------------------------------- greedy

namespace {

bool kempe_fix(EdgeColoring& c, int e) {
  const auto [u, v] = c.graph().ends(e);
  const auto mu = c.missing(u).to_vector();
  const auto mv = c.missing(v).to_vector();
  for (int alpha : mu) {
    for (int beta : mv) {
      if (alpha == beta) continue;
      kempe_swap(c, v, alpha, beta);
      if (c.is_missing(u, alpha) && c.is_missing(v, alpha)) {
        c.assign(e, alpha);
        return true;
      }
      kempe_swap(c, v, alpha, beta);
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> greedy_multigraph_color(const Multigraph& g, int k, bool kempe_repair) {
  EdgeColoring c(g, k);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.ends(e);
    const int col = c.missing(u).find_first_common(c.missing(v));
    if (col != DynBitset::npos) {
      c.assign(e, col);
      continue;
    }
    if (!kempe_repair || !kempe_fix(c, e)) return std::nullopt;
  }
  return c.colors();
}

// ---------------------------------------------------------------- König

std::vector<int> konig_color(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        const int w = g.other(e, v);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          throw ContractViolation("konig_color: graph is not bipartite");
        }
      }
    }
  }
  EdgeColoring c(g, g.max_degree());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.ends(e);
    const int alpha = c.first_missing(u);
    if (!c.is_missing(v, alpha)) {
      const int beta = c.first_missing(v);
      // The alternating chain from v cannot end at u in a bipartite graph.
      kempe_swap(c, v, alpha, beta);
    }
    c.assign(e, alpha);
  }
  return c.colors();
}

// ---------------------------------------------------------------- Hakimi

bool hakimi_feasible(std::span<const int> degrees) {
  long long sum = 0;
  int top = 0;
  for (int d : degrees) {
    if (d < 0) return false;
    sum += d;
    top = std::max(top, d);
  }
  return sum % 2 == 0 && sum - top >= top;
}

std::optional<Multigraph> hakimi_realize(std::span<const int> degrees) {
  if (!hakimi_feasible(degrees)) return std::nullopt;
  const int n = static_cast<int>(degrees.size());
  Multigraph g(n);
  // Max-heap on (residual, -index) so ties go to the lower index.
  std::priority_queue<std::pair<int, int>> heap;
  for (int v = 0; v < n; ++v)
    if (degrees[v] > 0) heap.push({degrees[v], -v});
  while (!heap.empty()) {
    auto [d1, v1] = heap.top();
    heap.pop();
    if (heap.empty()) return std::nullopt;  // unreachable when feasible
    auto [d2, v2] = heap.top();
    heap.pop();
    g.add_edge(-v1, -v2);
    if (d1 > 1) heap.push({d1 - 1, v1});
    if (d2 > 1) heap.push({d2 - 1, v2});
  }
  return g;
}

// ---------------------------------------------------------------- Dirac

namespace {

VertexId first_outside(const SimpleGraph& g, VertexId v, const DynBitset& inside) {
  const auto& nb = g.neighbor_set(v);
  for (int w = nb.find_first(); w != DynBitset::npos; w = nb.find_next(w + 1))
    if (!inside.test(w)) return w;
  return -1;
}

}  // namespace

std::vector<VertexId> dirac_hamiltonian_cycle(const SimpleGraph& g) {
  const auto verts = g.vertices();
  const int m = static_cast<int>(verts.size());
  if (m < 3) throw HypothesisError("hamiltonian cycle needs at least 3 vertices");
  if (2 * g.min_degree() < m) throw HypothesisError("minimum degree below half the order");
  std::deque<VertexId> path{verts.front()};
  DynBitset in(g.vertex_count());
  in.set(verts.front());
  while (true) {
    for (bool grew = true; grew;) {
      grew = false;
      VertexId w = first_outside(g, path.back(), in);
      if (w >= 0) {
        path.push_back(w);
        in.set(w);
        grew = true;
        continue;
      }
      w = first_outside(g, path.front(), in);
      if (w >= 0) {
        path.push_front(w);
        in.set(w);
        grew = true;
      }
    }
    const int p = static_cast<int>(path.size());
    std::vector<VertexId> cycle(path.begin(), path.end());
    if (!g.has_edge(path.front(), path.back())) {
      // Both ends have all neighbors on the path, so a crossing pair exists.
      int cut = -1;
      for (int i = 0; i + 1 < p; ++i)
        if (g.has_edge(path.front(), path[i + 1]) && g.has_edge(path[i], path.back())) {
          cut = i;
          break;
        }
      if (cut < 0) throw std::logic_error("dirac_hamiltonian_cycle: no crossing pair");
      std::reverse(cycle.begin() + cut + 1, cycle.end());
    }
    if (p == m) return cycle;
    // Open the cycle next to a vertex with an outside neighbor.
    for (int j = 0; j < p; ++j) {
      const VertexId w = first_outside(g, cycle[j], in);
      if (w < 0) continue;
      path.clear();
      for (int t = 1; t <= p; ++t) path.push_back(cycle[(j + t) % p]);
      path.push_back(w);
      in.set(w);
      break;
    }
    if (static_cast<int>(path.size()) == p) throw std::logic_error("dirac_hamiltonian_cycle: graph disconnected");
  }
}

std::vector<VertexId> hamiltonian_path_between(const SimpleGraph& g, VertexId a, VertexId b) {
  if (a == b) throw ContractViolation("path endpoints must be distinct");
  if (!g.active(a) || !g.active(b)) throw ContractViolation("path endpoint is not an active vertex");
  const int m = g.order();
  if (2 * g.min_degree() < m + 1) throw HypothesisError("minimum degree below (order+1)/2");
  if (m == 2) return {a, b};
  const auto cyc = dirac_hamiltonian_cycle(g);
  const int L = static_cast<int>(cyc.size());
  const int ia = static_cast<int>(std::find(cyc.begin(), cyc.end(), a) - cyc.begin());
  const int ib = static_cast<int>(std::find(cyc.begin(), cyc.end(), b) - cyc.begin());
  const int fwd = (ib - ia + L) % L;  // edges from a forward to b
  std::vector<VertexId> q1, q2;
  if (fwd >= L - fwd) {
    for (int t = 0; t <= fwd; ++t) q1.push_back(cyc[(ia + t) % L]);
    for (int t = 1; t < L - fwd; ++t) q2.push_back(cyc[(ib + t) % L]);
  } else {
    for (int t = 0; t <= L - fwd; ++t) q1.push_back(cyc[(ia - t + L) % L]);
    for (int t = 1; t < fwd; ++t) q2.push_back(cyc[(ia + t) % L]);
  }
  while (!q2.empty()) {
    const VertexId c = q2.front(), d = q2.back();
    const int p = static_cast<int>(q2.size());
    const int len = static_cast<int>(q1.size());
    bool done = false;
    // (b) an end of the leftover path sees two consecutive path vertices.
    for (int end = 0; end < 2 && !done; ++end) {
      const VertexId e = end == 0 ? c : d;
      for (int j = 0; j + 1 < len; ++j) {
        if (g.has_edge(e, q1[j]) && g.has_edge(e, q1[j + 1])) {
          q1.insert(q1.begin() + j + 1, e);
          if (end == 0)
            q2.erase(q2.begin());
          else
            q2.pop_back();
          done = true;
          break;
        }
      }
    }
    if (done) continue;
    // (a) neighbors of c and d close together: splice the leftover path in
    // and release the short segment between them.
    int best_x = -1, best_y = -1, best_gap = p;
    for (int x = 0; x < len; ++x) {
      if (!g.has_edge(c, q1[x])) continue;
      for (int y = 0; y < len; ++y) {
        if (x == y || !g.has_edge(d, q1[y])) continue;
        const int gap = std::abs(x - y) - 1;
        if (gap < best_gap) {
          best_gap = gap;
          best_x = x;
          best_y = y;
        }
      }
    }
    if (best_x < 0) throw std::logic_error("hamiltonian_path_between: absorption stuck");
    std::vector<VertexId> nq1, nq2;
    if (best_x < best_y) {
      nq1.assign(q1.begin(), q1.begin() + best_x + 1);
      nq1.insert(nq1.end(), q2.begin(), q2.end());
      nq1.insert(nq1.end(), q1.begin() + best_y, q1.end());
      nq2.assign(q1.begin() + best_x + 1, q1.begin() + best_y);
    } else {
      nq1.assign(q1.begin(), q1.begin() + best_y + 1);
      nq1.insert(nq1.end(), q2.rbegin(), q2.rend());
      nq1.insert(nq1.end(), q1.begin() + best_x, q1.end());
      nq2.assign(q1.begin() + best_y + 1, q1.begin() + best_x);
    }
    q1 = std::move(nq1);
    q2 = std::move(nq2);
  }
  return q1;
}

std::vector<Edge> dirac_perfect_matching(const SimpleGraph& g) {
  const int m = g.order();
  if (m % 2) throw HypothesisError("perfect matching needs even order");
  std::vector<Edge> out;
  if (m == 0) return out;
  if (m == 2) {
    const auto v = g.vertices();
    if (!g.has_edge(v[0], v[1])) throw HypothesisError("two-vertex graph without an edge");
    return {{std::min(v[0], v[1]), std::max(v[0], v[1])}};
  }
  const auto cyc = dirac_hamiltonian_cycle(g);
  for (int i = 0; i < m; i += 2) out.push_back({std::min(cyc[i], cyc[i + 1]), std::max(cyc[i], cyc[i + 1])});
  return out;
}

// ---------------------------------------------------------------- paths

PathSystem path_system(const SimpleGraph& g, const std::vector<Edge>& pairs) {
  if (pairs.empty()) throw ContractViolation("path_system needs at least one pair");
  const int n = g.vertex_count();
  DynBitset used(n);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw ContractViolation("bad pair");
    if (!g.active(a) || !g.active(b)) throw ContractViolation("pair endpoint is inactive");
    if (used.test(a) || used.test(b)) throw ContractViolation("pairs are not disjoint");
    used.set(a);
    used.set(b);
  }
  PathSystem out;
  DynBitset rest = g.active_set();
  const int t = static_cast<int>(pairs.size());
  for (int i = 0; i + 1 < t; ++i) {
    const auto [a, b] = pairs[i];
    DynBitset common = g.neighbor_set(a) & g.neighbor_set(b);
    common &= rest;
    common.subtract(used);
    const int c = common.find_first();
    if (c == DynBitset::npos)
      throw HypothesisError("no unused common neighbor for pair " + std::to_string(a) + "," + std::to_string(b));
    used.set(c);
    rest.reset(a);
    rest.reset(b);
    rest.reset(c);
    out.paths.push_back({a, c, b});
  }
  const SimpleGraph remainder = induced_subgraph(g, rest);
  out.paths.push_back(hamiltonian_path_between(remainder, pairs.back().u, pairs.back().v));
  return out;
}

// ---------------------------------------------------------------- matchings

std::vector<VertexId> hopcroft_karp(const SimpleGraph& h, const DynBitset& left) {
  const int n = h.vertex_count();
  std::vector<VertexId> mate(n, -1);
  std::vector<VertexId> lefts;
  for (int v = 0; v < n; ++v)
    if (left.test(v) && h.active(v)) lefts.push_back(v);
  std::vector<int> dist(n);
  const int inf = 1 << 29;
  auto bfs = [&]() {
    std::queue<VertexId> q;
    bool found = false;
    for (int u : lefts) {
      if (mate[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = inf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : h.neighbors(u)) {
        if (left.test(w)) continue;
        const int m = mate[w];
        if (m < 0) {
          found = true;
        } else if (dist[m] == inf) {
          dist[m] = dist[u] + 1;
          q.push(m);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, VertexId u) -> bool {
    for (int w : h.neighbors(u)) {
      if (left.test(w)) continue;
      const int m = mate[w];
      if (m < 0 || (dist[m] == dist[u] + 1 && self(self, m))) {
        mate[u] = w;
        mate[w] = u;
        return true;
      }
    }
    dist[u] = inf;
    return false;
  };
  while (bfs())
    for (int u : lefts)
      if (mate[u] < 0) dfs(dfs, u);
  return mate;
}

namespace {

std::vector<Edge> mate_to_edges(const std::vector<VertexId>& mate) {
  std::vector<Edge> out;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) out.push_back({v, mate[v]});
  return out;
}

}  // namespace

MatchingResult pm_with_degree_condition(const SimpleGraph& h, const DynBitset& x, const DynBitset& y, int t) {
  const int size = x.count();
  if (y.count() != size) throw ContractViolation("sides differ in size");
  if (x.find_first_common(y) != DynBitset::npos) throw ContractViolation("sides overlap");
  const int n = h.vertex_count();
  DynBitset both = x;
  both |= y;
  auto deg = [&](VertexId v) { return h.neighbor_set(v).count_common(x.test(v) ? y : x); };
  MatchingResult res;
  int min_deg = size == 0 ? 0 : 1 << 29;
  std::vector<VertexId> low;
  both.for_each([&](int v) {
    const int d = deg(v);
    min_deg = std::min(min_deg, d);
    if (4 * d < 2 * size + t) low.push_back(v);
  });
  res.hypotheses_met = min_deg >= t && 2 * static_cast<int>(low.size()) <= t;

  std::vector<VertexId> mate(n, -1);
  bool phase_one = res.hypotheses_met;
  if (phase_one) {
    DynBitset in_low = vertex_set(n, low);
    for (VertexId w : low) {
      if (mate[w] >= 0) continue;
      const auto& nb = h.neighbor_set(w);
      const DynBitset& other = x.test(w) ? y : x;
      VertexId pick = -1;
      for (int pass = 0; pass < 2 && pick < 0; ++pass)
        for (int u = nb.find_first(); u != DynBitset::npos; u = nb.find_next(u + 1))
          if (other.test(u) && mate[u] < 0 && (pass == 1 || !in_low.test(u))) {
            pick = u;
            break;
          }
      if (pick < 0) {
        phase_one = false;
        break;
      }
      mate[w] = pick;
      mate[pick] = w;
    }
  }
  if (phase_one) {
    DynBitset rest = both;
    for (int v = 0; v < n; ++v)
      if (mate[v] >= 0) rest.reset(v);
    const SimpleGraph sub = induced_subgraph(h, rest);
    const auto m2 = hopcroft_karp(sub, x);
    for (int v = 0; v < n; ++v)
      if (m2[v] >= 0) mate[v] = m2[v];
  }
  res.hypotheses_met = phase_one;
  auto covers = [&](const std::vector<VertexId>& mt) {
    bool ok = true;
    both.for_each([&](int v) { ok = ok && mt[v] >= 0; });
    return ok;
  };
  if (!phase_one || !covers(mate)) {
    res.used_fallback = true;
    DynBitset mask = both;
    const SimpleGraph sub = induced_subgraph(h, mask);
    mate = hopcroft_karp(sub, x);
  }
  res.perfect = covers(mate);
  res.matching = mate_to_edges(mate);
  return res;
}

}  // namespace edgecol
