#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "edgecol/generators.hpp"
#include "edgecol/partition.hpp"
#include "support.hpp"

using namespace edgecol;
using namespace testkit;

namespace {

void check_split(const SimpleGraph& g, const std::vector<Edge>& pairs, const PartitionAB& p) {
  CHECK(p.in_a.count() * 2 == g.order());
  for (const auto& [x, y] : pairs) CHECK(p.in_a.test(x) != p.in_a.test(y));
  CHECK(p.certificate == partition_certificate(g, p.in_a));
  CHECK(p.certificate <= p.threshold);
}

}  // namespace

TEST_CASE("complete graph splits evenly") {
  const auto g = SimpleGraph::complete(20);
  const auto p = balanced_partition(g, {}, ConstantsProfile::paper(), 1);
  check_split(g, {}, p);
  CHECK(p.certificate == 1);
}

TEST_CASE("a perfect matching as the pair list") {
  SimpleGraph g(12);
  std::vector<Edge> pairs;
  for (int v = 0; v < 12; v += 2) {
    g.add_edge(v, v + 1);
    pairs.push_back({v, v + 1});
  }
  const auto p = balanced_partition(g, pairs, ConstantsProfile::desk(), 2);
  check_split(g, pairs, p);
  CHECK(p.certificate == 1);
}

TEST_CASE("dense random graph meets the strict bound") {
  const auto g = gen_random_dense(200, 0.75, 3);
  REQUIRE(g.min_degree() >= 120);
  const auto prof = ConstantsProfile::paper();
  const auto p = balanced_partition(g, {}, prof, 4);
  check_split(g, {}, p);
  CHECK(p.threshold == prof.partition_bound(100, g.max_degree()));
  CHECK(p.threshold <= static_cast<int>(std::pow(100.0, 2.0 / 3.0)));
}

TEST_CASE("same seed, same partition") {
  const auto g = gen_random_dense(40, 0.8, 5);
  const std::vector<Edge> pairs{{0, 1}, {2, 3}};
  const auto a = balanced_partition(g, pairs, ConstantsProfile::desk(), 9);
  const auto b = balanced_partition(g, pairs, ConstantsProfile::desk(), 9);
  CHECK(a.in_a == b.in_a);
  CHECK(a.certificate == b.certificate);
}

TEST_CASE("pairs are always split") {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 200; ++round) {
    const int order = 2 * (4 + static_cast<int>(rng() % 20));
    const auto g = gen_random_dense(order, 0.7, rng());
    std::vector<int> perm(order);
    for (int v = 0; v < order; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> pairs;
    const int t = static_cast<int>(rng() % (order / 2 + 1));
    for (int i = 0; i < t; ++i) pairs.push_back({perm[2 * i], perm[2 * i + 1]});
    try {
      const auto p = balanced_partition(g, pairs, ConstantsProfile::desk(), rng());
      check_split(g, pairs, p);
    } catch (const PartitionError& e) {
      // The best attempt still honours the hard constraints.
      check_split(g, pairs, e.best);
      FAIL("desk bound missed: " << e.what());
    }
  }
}
