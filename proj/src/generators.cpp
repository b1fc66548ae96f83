#include "edgecol/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace edgecol {

namespace {

using Rng = std::mt19937_64;

std::uint64_t below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

[[noreturn]] void infeasible(const std::string& what) { throw std::invalid_argument(what); }

std::vector<Edge> havel_hakimi(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  std::vector<int> left = degrees;
  std::vector<Edge> edges;
  for (int round = 0; round < n; ++round) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return left[a] > left[b]; });
    const int v = order[0];
    const int d = left[v];
    if (d == 0) break;
    if (d >= n) infeasible("degree sequence not graphic");
    for (int t = 1; t <= d; ++t) {
      const int w = order[t];
      if (left[w] == 0) infeasible("degree sequence not graphic");
      --left[w];
      edges.push_back({std::min(v, w), std::max(v, w)});
    }
    left[v] = 0;
  }
  if (std::any_of(left.begin(), left.end(), [](int x) { return x != 0; })) infeasible("degree sequence not graphic");
  return edges;
}

// Degree-preserving double-edge swaps that never remove an edge inside keep.
void shuffle_edges(SimpleGraph& g, std::vector<Edge>& edges, const std::vector<char>& keep, Rng& rng, long long tries) {
  if (edges.size() < 2) return;
  auto protected_edge = [&](const Edge& e) { return keep[e.u] && keep[e.v]; };
  for (long long t = 0; t < tries; ++t) {
    const std::size_t i = below(rng, edges.size()), j = below(rng, edges.size());
    if (i == j) continue;
    Edge e1 = edges[i], e2 = edges[j];
    if (protected_edge(e1) || protected_edge(e2)) continue;
    if (rng() & 1) std::swap(e2.u, e2.v);
    const VertexId a = e1.u, b = e1.v, c = e2.u, d = e2.v;
    if (a == c || a == d || b == c || b == d) continue;
    if (g.has_edge(a, c) || g.has_edge(b, d)) continue;
    g.remove_edge(a, b);
    g.remove_edge(c, d);
    g.add_edge(a, c);
    g.add_edge(b, d);
    edges[i] = {std::min(a, c), std::max(a, c)};
    edges[j] = {std::min(b, d), std::max(b, d)};
  }
}

// Makes the clique vertices pairwise adjacent by swaps a-c, b-d -> a-b, c-d.
void close_clique(SimpleGraph& g, const std::vector<VertexId>& clique, Rng& rng) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : clique) in[v] = 1;
  for (std::size_t x = 0; x < clique.size(); ++x) {
    for (std::size_t y = x + 1; y < clique.size(); ++y) {
      const VertexId a = clique[x], b = clique[y];
      if (g.has_edge(a, b)) continue;
      auto na = g.neighbors(a), nb = g.neighbors(b);
      std::shuffle(na.begin(), na.end(), rng);
      std::shuffle(nb.begin(), nb.end(), rng);
      bool done = false;
      for (VertexId c : na) {
        if (in[c] || c == b) continue;
        for (VertexId d : nb) {
          if (in[d] || d == a || d == c || g.has_edge(c, d)) continue;
          g.remove_edge(a, c);
          g.remove_edge(b, d);
          g.add_edge(a, b);
          g.add_edge(c, d);
          done = true;
          break;
        }
        if (done) break;
      }
      if (!done) infeasible("cannot make the light vertices pairwise adjacent");
    }
  }
}

void check_degrees(const SimpleGraph& g, const std::vector<int>& degrees) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != degrees[v]) throw std::logic_error("generator produced a wrong degree");
}

}  // namespace

SimpleGraph relabel(const SimpleGraph& g, std::uint64_t seed) {
  Rng rng(seed ^ 0x5bd1e995ULL);
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = g.vertex_count() - 1; i > 0; --i) std::swap(perm[i], perm[below(rng, i + 1)]);
  SimpleGraph out(g.vertex_count());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

SimpleGraph gen_with_degrees(const std::vector<int>& degrees, const std::vector<VertexId>& clique, std::uint64_t seed) {
  const int n = static_cast<int>(degrees.size());
  long long sum = 0;
  for (int d : degrees) {
    if (d < 0 || d >= std::max(1, n)) infeasible("degree out of range");
    sum += d;
  }
  if (sum % 2) infeasible("degree sum is odd");
  Rng rng(seed);
  const auto edges0 = havel_hakimi(degrees);
  SimpleGraph g = SimpleGraph::from_edges(n, edges0);
  std::vector<char> keep(n, 0);
  close_clique(g, clique, rng);
  for (VertexId v : clique) keep[v] = 1;
  auto edges = g.edges();
  shuffle_edges(g, edges, keep, rng, 10 * static_cast<long long>(edges.size()));
  check_degrees(g, degrees);
  for (std::size_t x = 0; x < clique.size(); ++x)
    for (std::size_t y = x + 1; y < clique.size(); ++y)
      if (!g.has_edge(clique[x], clique[y])) throw std::logic_error("generator lost a clique edge");
  return g;
}

SimpleGraph gen_regular(int order, int d, std::uint64_t seed) {
  if (order < 1 || d < 0 || d >= order) infeasible("regular degree out of range");
  if ((static_cast<long long>(order) * d) % 2) infeasible("order times degree must be even");
  auto g = gen_with_degrees(std::vector<int>(order, d), {}, seed);
  return relabel(g, seed);
}

SimpleGraph gen_two_light(int order, int max_degree, int light_degree, int light_count, std::uint64_t seed) {
  if (light_count < 1 || light_count >= order) infeasible("light count out of range");
  if (light_degree >= max_degree) infeasible("light degree must be below max degree");
  if (light_degree < light_count - 1) infeasible("light degree too small for the light clique");
  std::vector<int> degrees(order, max_degree);
  std::vector<VertexId> clique;
  for (int t = 0; t < light_count; ++t) {
    degrees[t] = light_degree;
    clique.push_back(t);
  }
  auto g = gen_with_degrees(degrees, clique, seed);
  return relabel(g, seed);
}

SimpleGraph gen_wide_spread(int order, int max_degree, int min_degree, int light_count, std::uint64_t seed) {
  return gen_two_light(order, max_degree, min_degree, light_count, seed);
}

SimpleGraph gen_random_dense(int order, double p, std::uint64_t seed) {
  if (order < 2) infeasible("order too small");
  Rng rng(seed);
  SimpleGraph g = SimpleGraph::complete(order);
  auto edges = g.edges();
  for (int i = static_cast<int>(edges.size()) - 1; i > 0; --i) std::swap(edges[i], edges[below(rng, i + 1)]);
  const int floor_degree = order / 2 + 1;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const auto& e : edges) {
    if (coin(rng) < p) continue;
    if (g.degree(e.u) <= floor_degree || g.degree(e.v) <= floor_degree) continue;
    g.remove_edge(e.u, e.v);
  }
  return g;
}

SimpleGraph gen_planted_overfull(int order, int max_degree, int d, std::uint64_t seed) {
  if (order < 4 || order % 2) infeasible("planted overfull needs even order >= 4");
  const int h = order - 1;
  if (d < 1 || d >= max_degree || max_degree > h - 1) infeasible("planted degrees out of range");
  if ((static_cast<long long>(h) * max_degree - d) % 2) infeasible("planted degree parity mismatch");
  std::vector<int> degrees(h, max_degree);
  for (int t = 0; t < d; ++t) degrees[t] = max_degree - 1;
  auto core = gen_with_degrees(degrees, {}, seed);
  SimpleGraph g(order);
  for (const auto& e : core.edges()) g.add_edge(e.u, e.v);
  for (int t = 0; t < d; ++t) g.add_edge(h, t);
  return relabel(g, seed);
}

}  // namespace edgecol
