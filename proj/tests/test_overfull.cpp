#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edgecol/error.hpp"
#include "edgecol/generators.hpp"
#include "edgecol/overfull.hpp"
#include "support.hpp"

using namespace edgecol;
using namespace testkit;

namespace {

struct Scan {
  bool overfull = false;
  bool full = false;
};

// Brute force over odd vertex subsets.
Scan brute_scan(const SimpleGraph& g, int delta) {
  Scan s;
  const int n = g.vertex_count();
  const auto edges = g.edges();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size % 2 == 0) continue;
    long long e = 0;
    for (const auto& ed : edges) e += (mask >> ed.u & 1) && (mask >> ed.v & 1);
    const long long cap = static_cast<long long>(delta) * (size / 2);
    s.overfull = s.overfull || e > cap;
    s.full = s.full || e == cap;
  }
  return s;
}

// Min degree above half the order, even order.
SimpleGraph dense(int n, std::mt19937_64& rng) {
  auto g = SimpleGraph::complete(n);
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  const int keep = static_cast<int>(rng() % (n / 2));
  for (const auto& e : edges) {
    if (g.degree(e.u) <= n / 2 + 1 + keep % 2 || g.degree(e.v) <= n / 2 + 1) continue;
    if (rng() % 3) g.remove_edge(e.u, e.v);
  }
  return g;
}

}  // namespace

TEST_CASE("overfull and full predicates") {
  CHECK(is_overfull(SimpleGraph::complete(5), 4));
  auto p = petersen();
  p.deactivate(0);
  CHECK_FALSE(is_overfull(p, 3));
  CHECK(is_full(p, 3));

  std::mt19937_64 rng(1);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 * (1 + static_cast<int>(rng() % 8));
    const auto g = random_graph(n, 0.6, rng);
    CHECK_FALSE(is_overfull(g, g.max_degree()));
    CHECK_FALSE(is_full(g, g.max_degree()));
  }
}

TEST_CASE("deficiency view") {
  auto g = SimpleGraph::complete(6);
  g.remove_edge(0, 1);
  const auto d = deficiency(g);
  CHECK(d.max_degree == 5);
  CHECK(d.min_degree == 4);
  CHECK(d.total == 2);
  CHECK(d.light == std::vector<VertexId>{0, 1});
  CHECK(d.heavy.size() == 4);

  std::mt19937_64 rng(2);
  for (int round = 0; round < 200; ++round) {
    const int n = 4 + 2 * static_cast<int>(rng() % 6);
    const auto h = dense(n, rng);
    const int delta = h.max_degree();
    for (VertexId v : h.vertices()) {
      auto minus = h;
      minus.deactivate(v);
      long long direct = 0;
      for (VertexId w : minus.vertices()) direct += delta - minus.degree(w);
      CHECK(deficiency_without(h, v) == direct);
    }
  }
}

TEST_CASE("detect on small examples") {
  // 4-regular on 6 vertices: G - v has 8 = 4 * 2 edges.
  const auto k6pm = complete_minus_pm(6);
  CHECK(detect(k6pm).status == OverfullStatus::full);
  CHECK(detect(SimpleGraph::complete(6)).status == OverfullStatus::full);

  auto k8 = SimpleGraph::complete(8);
  k8.remove_edge(0, 1);
  k8.remove_edge(0, 2);
  const auto scan = brute_scan(k8, k8.max_degree());
  const auto verdict = detect(k8);
  CHECK((verdict.status == OverfullStatus::overfull) == scan.overfull);
  if (verdict.status == OverfullStatus::full) CHECK(scan.full);

  const auto planted = gen_planted_overfull(12, 9, 7, 4);
  const auto pv = detect(planted);
  CHECK(pv.status == OverfullStatus::overfull);
  CHECK(planted.degree(pv.witness) == planted.min_degree());

  CHECK_THROWS_AS(detect(cycle(6)), HypothesisError);
  CHECK_THROWS_AS(detect(SimpleGraph::complete(5)), HypothesisError);
}

TEST_CASE("detect agrees with a brute-force scan") {
  std::mt19937_64 rng(3);
  int overfull = 0, full = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = 4 + 2 * static_cast<int>(rng() % 4);
    // Planted: order n+2, max degree n, one vertex of even degree d.
    const int d = (n / 2 + 3) & ~1;
    auto g = round % 4 == 0 && n >= 8 ? gen_planted_overfull(n + 2, n, d, rng()) : dense(n, rng);
    if (2 * g.min_degree() <= g.order()) continue;
    const auto scan = brute_scan(g, g.max_degree());
    const auto v = detect(g);
    CHECK((v.status == OverfullStatus::overfull) == scan.overfull);
    // Full witnesses are only sought among G - v, so fullness is one-way.
    if (v.status == OverfullStatus::full) CHECK(scan.full);
    overfull += v.status == OverfullStatus::overfull;
    full += v.status == OverfullStatus::full;
  }
  CHECK(overfull > 0);
  CHECK(full > 0);
}

TEST_CASE("regularization through a full subgraph") {
  SUBCASE("one peel") {
    auto g = SimpleGraph::complete(8);
    g.remove_edge(0, 1);
    REQUIRE(detect(g).status == OverfullStatus::full);
    const auto r = regularize_via_full(g);
    CHECK(r.matchings.size() == 1);
    CHECK(r.regular.is_regular());
    CHECK(r.regular.max_degree() == 6);
  }
  SUBCASE("no full subgraph") {
    auto g = SimpleGraph::complete(8);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    REQUIRE(detect(g).status == OverfullStatus::none);
    CHECK_THROWS_AS(regularize_via_full(g), ContractViolation);
  }
  SUBCASE("each peel lowers the max degree by one") {
    std::mt19937_64 rng(4);
    int runs = 0;
    for (int round = 0; round < 400 && runs < 40; ++round) {
      const int n = 10 + 2 * static_cast<int>(rng() % 4);
      const auto g = dense(n, rng);
      if (2 * g.min_degree() <= n || g.is_regular() || detect(g).status != OverfullStatus::full) continue;
      ++runs;
      const auto r = regularize_via_full(g);
      CHECK(static_cast<int>(r.matchings.size()) == g.max_degree() - g.min_degree());
      auto cur = g;
      for (const auto& m : r.matchings) {
        const int top = cur.max_degree(), low = cur.min_degree();
        for (const auto& e : m) cur.remove_edge(e.u, e.v);
        CHECK(cur.max_degree() == top - 1);
        CHECK(cur.min_degree() == low);
        if (!cur.is_regular()) CHECK(detect(cur).status == OverfullStatus::full);
      }
      CHECK(cur == r.regular);
      CHECK(cur.is_regular());
    }
    CHECK(runs > 0);
  }
}
