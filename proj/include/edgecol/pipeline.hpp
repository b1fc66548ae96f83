#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgecol/coloring.hpp"
#include "edgecol/graph.hpp"
#include "edgecol/partition.hpp"
#include "edgecol/profile.hpp"

namespace edgecol {

// Shape of the input the dense pipeline is asked to color:
//  a: regular;
//  b: all vertices at max degree except two equal lighter ones x, y;
//  c: wide degree spread with many minimum-degree vertices and more than
//     half the vertices at max degree.
enum class ConditionTag { a, b, c };
std::string to_string(ConditionTag t);

struct AttemptFailure {
  int attempt = 0;
  std::string step;
  std::string message;
};

struct PipelineReport {
  std::string condition;
  std::string profile;
  std::uint64_t seed = 0;
  int attempts = 0;
  int finish_round = 0;
  std::vector<AttemptFailure> failures;

  int order = 0;
  int max_degree = 0;
  int min_degree = 0;

  // partition
  int partition_certificate = 0;
  int partition_threshold = 0;
  int partition_random_tries = 0;
  bool partition_polished = false;

  // step 1
  int k = 0;
  int s_threshold = 0;
  int s_size = 0;
  int side_slack = 0;
  int s_a = 0;
  int s_b = 0;
  int aug_edges_a = 0;
  int aug_edges_b = 0;
  bool sides_swapped = false;
  int equalize_swaps = 0;
  long long missing_sum_a = 0;
  long long missing_sum_b = 0;
  int max_class_missing_a = 0;
  int max_class_missing_b = 0;
  double missing_sum_bound = 0;
  double class_missing_bound = 0;
  bool step1_bounds_hold = true;

  // step 2
  int good_cap = 0;
  int relocations = 0;
  int relocations_skipped = 0;
  int pairs_ab = 0;
  int pairs_aa = 0;
  int pairs_bb = 0;
  int direct_paths = 0;
  int shape_paths = 0;
  int search_paths = 0;
  int relaxed_paths = 0;
  std::map<int, int> paths_by_length;
  int max_residual_degree = 0;

  // step 3
  int ell = 0;
  int ell_paper = 0;
  long long residual_cap = 0;
  int residual_a_edges = 0;
  int residual_b_edges = 0;
  int residual_a_max_degree = 0;
  int residual_b_max_degree = 0;
  std::vector<int> matching_sizes;
  int excluded_total = 0;
  int matching_fallbacks = 0;
  int chain_repairs = 0;
  int unmatched_total = 0;

  // step 4
  int delta_r = 0;
  int expected_delta_r = 0;
  int palette = 0;
};

class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string step, const std::string& message, PipelineReport report = {})
      : std::runtime_error(step + ": " + message), step(std::move(step)), message(message), report(std::move(report)) {}
  std::string step;
  std::string message;
  PipelineReport report;
};

enum class EdgeKind : std::uint8_t { side_a, side_b, cross, aug_a, aug_b };

// Working state of one pipeline attempt. G* holds the side edges of G,
// the cross edges H and the augmentation edges added inside S.
struct SideState {
  const SimpleGraph* base = nullptr;
  ConditionTag tag = ConditionTag::a;
  ConstantsProfile profile;
  int n = 0;      // half the order
  int delta = 0;  // max degree of G
  PartitionAB partition;
  DynBitset in_a, in_b;
  DynBitset s, s_a, s_b;
  DynBitset lightest;  // minimum-degree vertices of G

  std::unique_ptr<Multigraph> gstar;
  std::vector<EdgeKind> kind;
  std::vector<int> base_edge;  // index into base->edges(), -1 for augmentation
  std::unique_ptr<EdgeColoring> coloring;
  std::vector<int> residual_degree;  // degree in the uncolored side edges
  std::vector<int> missing_extra;    // extra-palette colors missing so far
  int k = 0;
  int ell = 0;
  std::uint64_t shuffle_seed = 0;  // 0 keeps the natural color and pair order
  PipelineReport report;

  bool side_edge(int e) const { return kind[e] != EdgeKind::cross; }
  bool on_a(int e) const { return kind[e] == EdgeKind::side_a || kind[e] == EdgeKind::aug_a; }
  bool on_b(int e) const { return kind[e] == EdgeKind::side_b || kind[e] == EdgeKind::aug_b; }
  int cross_edge(VertexId u, VertexId v) const;  // -1 if u,v not joined across
};

// Pairs that the partition must split for the given condition.
std::vector<Edge> condition_pairs(const SimpleGraph& g, ConditionTag tag);

SideState make_state(const SimpleGraph& g, ConditionTag tag, const ConstantsProfile& profile, const PartitionAB& p);

// Colors the sides, augments inside S, equalizes and aligns the color classes.
void step1(SideState& st);
// Makes each of the first k classes a perfect matching of G* by exchanging
// alternating paths; uncolored side edges form the residual graphs.
void step2(SideState& st);
// Colors the residual side graphs with ell extra colors and extends each
// extra class by a matching of the uncolored cross edges.
void step3(SideState& st);
// Colors the remaining cross edges bipartitely with the last colors.
void step4(SideState& st);

// Colors of the base edges (indexed like g.edges()) from a finished state.
std::vector<int> base_colors(const SideState& st);

struct DenseColoring {
  std::vector<int> colors;  // indexed like g.edges()
  int palette = 0;
  PipelineReport report;
};

// Full pipeline with retries over fresh partition seeds. Throws
// PipelineError naming the failing step of the last attempt.
DenseColoring color_dense(const SimpleGraph& g, ConditionTag tag, const ConstantsProfile& profile, std::uint64_t seed);

}  // namespace edgecol
