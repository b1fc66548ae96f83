#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "edgecol/coloring.hpp"
#include "edgecol/graph.hpp"

namespace testkit {

using namespace edgecol;

inline SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline SimpleGraph star(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// K_n minus the matching {0-1, 2-3, ...}.
inline SimpleGraph complete_minus_pm(int n) {
  SimpleGraph g = SimpleGraph::complete(n);
  for (int v = 0; v + 1 < n; v += 2) g.remove_edge(v, v + 1);
  return g;
}

inline SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Multigraph random_multigraph(int n, int m, std::mt19937_64& rng) {
  Multigraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.edge_count() < m) {
    const int u = pick(rng), v = pick(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

// Brute force: calls f with every proper coloring of g using colors 1..k.
inline void for_each_proper_coloring(const Multigraph& g, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> col(g.edge_count(), 0);
  std::function<void(int)> rec = [&](int e) {
    if (e == g.edge_count()) {
      f(col);
      return;
    }
    const auto [u, v] = g.ends(e);
    for (int c = 1; c <= k; ++c) {
      bool clash = false;
      for (int x = 0; x < e && !clash; ++x) {
        if (col[x] != c) continue;
        const auto [a, b] = g.ends(x);
        clash = a == u || a == v || b == u || b == v;
      }
      if (clash) continue;
      col[e] = c;
      rec(e + 1);
      col[e] = 0;
    }
  };
  rec(0);
}

inline EdgeColoring load(const Multigraph& g, int k, const std::vector<int>& colors) {
  EdgeColoring c(g, k);
  for (int e = 0; e < g.edge_count(); ++e)
    if (colors[e]) c.assign(e, colors[e]);
  return c;
}

// Every class of a full coloring of g is a perfect matching.
inline bool classes_are_perfect_matchings(const SimpleGraph& g, const std::vector<int>& colors, int palette) {
  std::vector<std::vector<int>> seen(palette + 1, std::vector<int>(g.vertex_count(), 0));
  const auto edges = g.edges();
  for (std::size_t t = 0; t < edges.size(); ++t) {
    const int c = colors[t];
    if (c < 1 || c > palette) return false;
    ++seen[c][edges[t].u];
    ++seen[c][edges[t].v];
  }
  for (int c = 1; c <= palette; ++c)
    for (VertexId v : g.vertices())
      if (seen[c][v] != 1) return false;
  return true;
}

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testkit
