#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edgecol/error.hpp"
#include "edgecol/generators.hpp"
#include "edgecol/pipeline.hpp"
#include "support.hpp"

using namespace edgecol;
using namespace testkit;

namespace {

SideState prepared(const SimpleGraph& g, ConditionTag tag, std::uint64_t seed) {
  const auto profile = ConstantsProfile::desk();
  const auto p = balanced_partition(g, condition_pairs(g, tag), profile, seed);
  return make_state(g, tag, profile, p);
}

void check_dense(const SimpleGraph& g, const DenseColoring& d) {
  CHECK(d.palette == g.max_degree());
  CHECK(validate_proper(Multigraph::from_simple(g), d.colors).ok);
  for (int c : d.colors) {
    CHECK(c >= 1);
    CHECK(c <= d.palette);
  }
}

// Runs the steps with retries over seeds; returns the first state that
// gets through step `last` (1-based).
std::optional<SideState> run_until(const SimpleGraph& g, ConditionTag tag, int last) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    try {
      auto st = prepared(g, tag, seed);
      step1(st);
      if (last >= 2) step2(st);
      if (last >= 3) step3(st);
      if (last >= 4) step4(st);
      return st;
    } catch (const PipelineError&) {
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("condition pairs") {
  const auto reg = gen_regular(16, 11, 1);
  CHECK(condition_pairs(reg, ConditionTag::a).empty());
  const auto two = gen_two_light(16, 13, 11, 2, 2);
  const auto pb = condition_pairs(two, ConditionTag::b);
  REQUIRE(pb.size() == 1);
  CHECK(two.degree(pb[0].u) == 11);
  CHECK(two.degree(pb[0].v) == 11);
}

TEST_CASE("complete graphs and complete graphs minus a perfect matching") {
  for (int order : {6, 10, 16, 20}) {
    const auto k = SimpleGraph::complete(order);
    const auto dk = color_dense(k, ConditionTag::a, ConstantsProfile::desk(), 1);
    check_dense(k, dk);
    CHECK(classes_are_perfect_matchings(k, dk.colors, dk.palette));

    if (order >= 8) {
      const auto km = complete_minus_pm(order);
      const auto dm = color_dense(km, ConditionTag::a, ConstantsProfile::desk(), 1);
      check_dense(km, dm);
      CHECK(classes_are_perfect_matchings(km, dm.colors, dm.palette));
    }
  }
}

TEST_CASE("random regular graph on 60 vertices") {
  const auto g = gen_regular(60, 39, 7);
  const auto d = color_dense(g, ConditionTag::a, ConstantsProfile::desk(), 7);
  check_dense(g, d);
  CHECK(d.report.condition == "a");
  CHECK(d.report.palette == 39);
}

TEST_CASE("step one on a regular graph") {
  const auto g = gen_regular(16, 11, 3);
  auto st = run_until(g, ConditionTag::a, 1);
  REQUIRE(st);
  CHECK(st->s.none());
  CHECK(st->report.aug_edges_a + st->report.aug_edges_b == 0);
  CHECK(validate_proper(*st->coloring).ok);
  CHECK(consistent(*st->coloring));
  // Aligned: each color misses the same number of vertices on both sides.
  for (int i = 1; i <= st->k; ++i) {
    int miss_a = 0, miss_b = 0;
    st->in_a.for_each([&](int v) { miss_a += st->coloring->is_missing(v, i); });
    st->in_b.for_each([&](int v) { miss_b += st->coloring->is_missing(v, i); });
    CHECK(miss_a == miss_b);
  }
}

TEST_CASE("two light vertices on opposite sides need no augmentation") {
  const auto g = gen_two_light(30, 25, 21, 2, 4);
  auto st = run_until(g, ConditionTag::b, 1);
  REQUIRE(st);
  const auto pairs = condition_pairs(g, ConditionTag::b);
  CHECK(st->in_a.test(pairs[0].u) != st->in_a.test(pairs[0].v));
  CHECK(st->report.aug_edges_a == 0);
  CHECK(st->report.aug_edges_b == 0);
}

TEST_CASE("after step two every early class is a perfect matching") {
  const auto g = gen_regular(24, 17, 5);
  auto st = run_until(g, ConditionTag::a, 2);
  REQUIRE(st);
  for (int i = 1; i <= st->k; ++i) CHECK(st->coloring->class_size(i) == st->n);
  CHECK(validate_proper(*st->coloring).ok);
  CHECK(consistent(*st->coloring));
  // Residual degrees count the uncolored side edges.
  std::vector<int> residual(st->gstar->vertex_count(), 0);
  for (int e = 0; e < st->gstar->edge_count(); ++e) {
    if (!st->side_edge(e) || st->coloring->color(e) != 0) continue;
    const auto& ed = st->gstar->ends(e);
    ++residual[ed.u];
    ++residual[ed.v];
  }
  CHECK(residual == st->residual_degree);
}

TEST_CASE("after step three saturated vertices see every extra color") {
  const auto g = gen_two_light(40, 33, 29, 2, 6);
  auto st = run_until(g, ConditionTag::b, 3);
  REQUIRE(st);
  const auto& col = *st->coloring;
  for (int e = 0; e < st->gstar->edge_count(); ++e)
    if (st->side_edge(e)) CHECK(col.color(e) != 0);
  for (VertexId v = 0; v < st->gstar->vertex_count(); ++v) {
    if (st->gstar->degree(v) < st->delta) continue;
    for (int c = 1; c <= st->k + st->ell; ++c) CHECK_FALSE(col.is_missing(v, c));
  }
}

TEST_CASE("step four leaves a bipartite remainder of the right degree") {
  const auto g = gen_regular(30, 21, 8);
  auto st = run_until(g, ConditionTag::a, 4);
  REQUIRE(st);
  CHECK(st->report.delta_r == st->delta - st->k - st->ell);
  CHECK(st->coloring->colored_count() == st->gstar->edge_count());
  CHECK(validate_proper(*st->coloring).ok);
  const auto colors = base_colors(*st);
  CHECK(validate_proper(Multigraph::from_simple(g), colors).ok);
}

TEST_CASE("wide degree spread with many light vertices") {
  const auto g = gen_wide_spread(40, 35, 25, 8, 9);
  const auto d = color_dense(g, ConditionTag::c, ConstantsProfile::desk(), 9);
  check_dense(g, d);
  CHECK(d.report.condition == "c");
}

TEST_CASE("strict constants fail with a named step on small inputs") {
  const auto g = gen_regular(20, 13, 2);
  try {
    color_dense(g, ConditionTag::a, ConstantsProfile::paper(), 2);
    FAIL("strict constants should not fit 20 vertices");
  } catch (const PipelineError& e) {
    CHECK_FALSE(e.step.empty());
    CHECK(e.report.failures.size() == 1);
  }
}

TEST_CASE("odd order is rejected") {
  CHECK_THROWS_AS(color_dense(SimpleGraph::complete(7), ConditionTag::a, ConstantsProfile::desk(), 1),
                  HypothesisError);
}

TEST_CASE("same seed, same coloring") {
  const auto g = gen_two_light(30, 25, 21, 2, 11);
  const auto a = color_dense(g, ConditionTag::b, ConstantsProfile::desk(), 5);
  const auto b = color_dense(g, ConditionTag::b, ConstantsProfile::desk(), 5);
  CHECK(a.colors == b.colors);
}
