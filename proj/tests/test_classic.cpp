#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "edgecol/classic.hpp"
#include "edgecol/error.hpp"
#include "support.hpp"

using namespace edgecol;
using namespace testkit;

namespace {

int palette_of(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

bool proper_simple(const SimpleGraph& g, const std::vector<int>& colors) {
  return validate_proper(Multigraph::from_simple(g), colors).ok &&
         std::none_of(colors.begin(), colors.end(), [](int c) { return c == 0; });
}

bool is_cycle_of(const SimpleGraph& g, const std::vector<VertexId>& cyc) {
  if (static_cast<int>(cyc.size()) != g.order()) return false;
  std::set<VertexId> seen(cyc.begin(), cyc.end());
  if (static_cast<int>(seen.size()) != g.order()) return false;
  for (std::size_t t = 0; t < cyc.size(); ++t)
    if (!g.active(cyc[t]) || !g.has_edge(cyc[t], cyc[(t + 1) % cyc.size()])) return false;
  return true;
}

bool is_path_in(const SimpleGraph& g, const std::vector<VertexId>& p) {
  for (std::size_t t = 0; t + 1 < p.size(); ++t)
    if (!g.has_edge(p[t], p[t + 1])) return false;
  return std::set<VertexId>(p.begin(), p.end()).size() == p.size();
}

// Exhaustive search for a spanning a-b path.
bool spanning_path_exists(const SimpleGraph& g, VertexId a, VertexId b) {
  auto verts = g.vertices();
  std::sort(verts.begin(), verts.end());
  do {
    if (verts.front() == a && verts.back() == b && is_path_in(g, verts)) return true;
  } while (std::next_permutation(verts.begin(), verts.end()));
  return false;
}

// Closed-form multigraph realizability.
bool realizable(const std::vector<int>& d) {
  long long sum = 0;
  int top = 0;
  for (int x : d) {
    sum += x;
    top = std::max(top, x);
  }
  return sum % 2 == 0 && sum - top >= top;
}

}  // namespace

TEST_CASE("vizing coloring") {
  const auto c5 = cycle(5);
  const auto col5 = vizing_color(c5);
  CHECK(proper_simple(c5, col5));
  CHECK(palette_of(col5) == 3);

  const auto k4 = SimpleGraph::complete(4);
  const auto col4 = vizing_color(k4);
  CHECK(proper_simple(k4, col4));
  CHECK(palette_of(col4) <= 4);

  // Independent oracle: the Petersen graph has no proper 3-edge-coloring.
  const auto pg = petersen();
  bool three = false;
  for_each_proper_coloring(Multigraph::from_simple(pg), 3, [&](const std::vector<int>&) { three = true; });
  REQUIRE_FALSE(three);
  const auto colp = vizing_color(pg);
  CHECK(proper_simple(pg, colp));
  CHECK(palette_of(colp) == 4);

  Multigraph doubled(2);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  CHECK_THROWS_AS(vizing_color(doubled), ContractViolation);
}

TEST_CASE("vizing palette bound on random simple graphs") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const int n = 3 + static_cast<int>(rng() % 25);
    const auto g = random_graph(n, 0.2 + 0.7 * (rng() % 100) / 100.0, rng);
    const auto col = vizing_color(g);
    CHECK(proper_simple(g, col));
    CHECK(palette_of(col) <= g.max_degree() + 1);
  }
}

TEST_CASE("greedy multigraph coloring") {
  Multigraph doubled(2);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  const auto d = greedy_multigraph_color(doubled, 3);
  REQUIRE(d);
  CHECK((*d)[0] != (*d)[1]);

  const auto c4 = Multigraph::from_simple(cycle(4));
  REQUIRE(greedy_multigraph_color(c4, 3));

  const auto empty = greedy_multigraph_color(Multigraph(3), 0);
  REQUIRE(empty);
  CHECK(empty->empty());

  // A triangle cannot be colored with two colors, repaired or not.
  const auto k3 = Multigraph::from_simple(SimpleGraph::complete(3));
  CHECK_FALSE(greedy_multigraph_color(k3, 2, true));

  std::mt19937_64 rng(6);
  for (int round = 0; round < 300; ++round) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const auto g = random_multigraph(n, 3 * n, rng);
    const int k = 2 * g.max_degree() - 1;
    const auto col = greedy_multigraph_color(g, k);
    REQUIRE(col);
    CHECK(validate_proper(g, *col).ok);
    CHECK(palette_of(*col) <= k);
  }
}

TEST_CASE("konig coloring") {
  const auto k33 = complete_bipartite(3, 3);
  const auto col = konig_color(Multigraph::from_simple(k33));
  CHECK(proper_simple(k33, col));
  CHECK(palette_of(col) == 3);

  const auto c6 = cycle(6);
  CHECK(palette_of(konig_color(Multigraph::from_simple(c6))) == 2);

  Multigraph doubled(2);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  const auto dc = konig_color(doubled);
  CHECK(sorted(dc) == std::vector<int>{1, 2});

  CHECK_THROWS_AS(konig_color(Multigraph::from_simple(cycle(5))), ContractViolation);

  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const int a = 1 + static_cast<int>(rng() % 8), b = 1 + static_cast<int>(rng() % 8);
    Multigraph g(a + b);
    const int m = static_cast<int>(rng() % 40);
    for (int t = 0; t < m; ++t) g.add_edge(static_cast<int>(rng() % a), a + static_cast<int>(rng() % b));
    const auto colors = konig_color(g);
    CHECK(validate_proper(g, colors).ok);
    CHECK(palette_of(colors) == g.max_degree());
  }
}

TEST_CASE("hakimi realization") {
  const std::vector<int> a{3, 3, 2, 2};
  CHECK(hakimi_feasible(a));
  const auto ga = hakimi_realize(a);
  REQUIRE(ga);
  for (int v = 0; v < 4; ++v) CHECK(ga->degree(v) == a[v]);

  CHECK_FALSE(hakimi_feasible(std::vector<int>{5, 1, 1, 1}));
  CHECK_FALSE(hakimi_realize(std::vector<int>{5, 1, 1, 1}));

  const auto gd = hakimi_realize(std::vector<int>{2, 2});
  REQUIRE(gd);
  CHECK(gd->multiplicity(0, 1) == 2);

  std::mt19937_64 rng(8);
  for (int round = 0; round < 2000; ++round) {
    std::vector<int> d(1 + rng() % 8);
    for (int& x : d) x = static_cast<int>(rng() % 7);
    const auto g = hakimi_realize(d);
    CHECK(static_cast<bool>(g) == realizable(d));
    if (!g) continue;
    for (std::size_t v = 0; v < d.size(); ++v) CHECK(g->degree(static_cast<int>(v)) == d[v]);
  }
}

TEST_CASE("dirac hamiltonian cycle") {
  CHECK(is_cycle_of(SimpleGraph::complete(4), dirac_hamiltonian_cycle(SimpleGraph::complete(4))));
  CHECK(is_cycle_of(SimpleGraph::complete(5), dirac_hamiltonian_cycle(SimpleGraph::complete(5))));
  const auto k44 = complete_bipartite(4, 4);
  const auto cyc = dirac_hamiltonian_cycle(k44);
  CHECK(is_cycle_of(k44, cyc));
  CHECK_THROWS_AS(dirac_hamiltonian_cycle(cycle(6)), HypothesisError);
  CHECK_THROWS_AS(dirac_hamiltonian_cycle(SimpleGraph::complete(2)), HypothesisError);

  std::mt19937_64 rng(9);
  for (int round = 0; round < 300; ++round) {
    const int n = 3 + static_cast<int>(rng() % 30);
    auto g = SimpleGraph::complete(n);
    for (const auto& e : g.edges()) {
      if (rng() % 2 && g.degree(e.u) > (n + 1) / 2 && g.degree(e.v) > (n + 1) / 2) g.remove_edge(e.u, e.v);
    }
    CHECK(is_cycle_of(g, dirac_hamiltonian_cycle(g)));
  }
}

TEST_CASE("hamiltonian path between two vertices") {
  const auto k4 = SimpleGraph::complete(4);
  const auto p = hamiltonian_path_between(k4, 1, 3);
  CHECK(p.size() == 4);
  CHECK(p.front() == 1);
  CHECK(p.back() == 3);
  CHECK(is_path_in(k4, p));

  auto k5 = SimpleGraph::complete(5);
  k5.remove_edge(2, 3);
  REQUIRE(spanning_path_exists(k5, 0, 1));
  const auto q = hamiltonian_path_between(k5, 0, 1);
  CHECK(q.size() == 5);
  CHECK(q.front() == 0);
  CHECK(q.back() == 1);
  CHECK(is_path_in(k5, q));

  CHECK_THROWS_AS(hamiltonian_path_between(k4, 2, 2), ContractViolation);
}

TEST_CASE("path systems") {
  const auto k6 = SimpleGraph::complete(6);
  const auto one = path_system(k6, {{0, 5}});
  REQUIRE(one.paths.size() == 1);
  CHECK(one.paths[0].size() == 6);
  CHECK(one.paths[0].front() == 0);
  CHECK(one.paths[0].back() == 5);
  CHECK(is_path_in(k6, one.paths[0]));

  const auto k8 = SimpleGraph::complete(8);
  const auto two = path_system(k8, {{0, 1}, {2, 3}});
  REQUIRE(two.paths.size() == 2);
  CHECK(two.paths[0].size() == 3);
  CHECK(two.paths[1].size() == 5);
  std::set<VertexId> covered;
  for (const auto& path : two.paths) {
    CHECK(is_path_in(k8, path));
    covered.insert(path.begin(), path.end());
  }
  CHECK(covered.size() == 8);
  CHECK(two.paths[0].front() == 0);
  CHECK(two.paths[0].back() == 1);
  CHECK(two.paths[1].front() == 2);
  CHECK(two.paths[1].back() == 3);

  CHECK_THROWS_AS(path_system(k6, {}), ContractViolation);
  CHECK_THROWS_AS(path_system(k6, {{0, 1}, {1, 2}}), ContractViolation);
}

TEST_CASE("perfect matchings under a degree condition") {
  auto check_pm = [](const SimpleGraph& h, const DynBitset& x, const DynBitset& y, int t) {
    const auto r = pm_with_degree_condition(h, x, y, t);
    CHECK(r.perfect);
    std::set<VertexId> used;
    for (const auto& e : r.matching) {
      CHECK(h.has_edge(e.u, e.v));
      CHECK(x.test(e.u) != x.test(e.v));
      used.insert(e.u);
      used.insert(e.v);
    }
    CHECK(static_cast<int>(used.size()) == x.count() + y.count());
    return r;
  };
  const auto k44 = complete_bipartite(4, 4);
  const auto r = check_pm(k44, vertex_set(8, {0, 1, 2, 3}), vertex_set(8, {4, 5, 6, 7}), 4);
  CHECK(r.hypotheses_met);

  const auto c8 = cycle(8);
  check_pm(c8, vertex_set(8, {0, 2, 4, 6}), vertex_set(8, {1, 3, 5, 7}), 2);

  auto k33 = complete_bipartite(3, 3);
  for (int v = 0; v < 3; ++v) k33.remove_edge(v, 3 + v);
  check_pm(k33, vertex_set(6, {0, 1, 2}), vertex_set(6, {3, 4, 5}), 2);

  // No perfect matching: two left vertices share a single neighbor.
  SimpleGraph bad(4);
  bad.add_edge(0, 2);
  bad.add_edge(1, 2);
  const auto none = pm_with_degree_condition(bad, vertex_set(4, {0, 1}), vertex_set(4, {2, 3}), 0);
  CHECK_FALSE(none.perfect);
  CHECK(none.matching.size() == 1);
}

TEST_CASE("hopcroft-karp matches a brute-force maximum") {
  std::mt19937_64 rng(10);
  for (int round = 0; round < 200; ++round) {
    const int a = 1 + static_cast<int>(rng() % 6), b = 1 + static_cast<int>(rng() % 6);
    SimpleGraph h(a + b);
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v)
        if (rng() % 3 == 0) h.add_edge(u, a + v);
    std::vector<VertexId> left(a);
    std::iota(left.begin(), left.end(), 0);
    const auto mate = hopcroft_karp(h, vertex_set(a + b, left));
    int size = 0;
    for (int u = 0; u < a; ++u) {
      if (mate[u] < 0) continue;
      CHECK(h.has_edge(u, mate[u]));
      CHECK(mate[mate[u]] == u);
      ++size;
    }
    // Brute force over subsets of left vertices via bitmask DP.
    std::vector<int> best(1 << b, -1);
    best[0] = 0;
    int top = 0;
    for (int u = 0; u < a; ++u) {
      auto next = best;
      for (int mask = 0; mask < (1 << b); ++mask) {
        if (best[mask] < 0) continue;
        for (int v = 0; v < b; ++v)
          if (!(mask >> v & 1) && h.has_edge(u, a + v))
            next[mask | 1 << v] = std::max(next[mask | 1 << v], best[mask] + 1);
      }
      best = next;
    }
    for (int x : best) top = std::max(top, x);
    CHECK(size == top);
  }
}
