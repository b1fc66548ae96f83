#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgecol/graph.hpp"
#include "edgecol/overfull.hpp"
#include "edgecol/pipeline.hpp"
#include "edgecol/profile.hpp"

namespace edgecol {

enum class TraceKind {
  add_edge,        // saturation edge, discarded at the end
  full_matching,   // matching removed while regularizing through a full subgraph
  peel,            // single matching removed in case 1
  double_peel,     // matching removed in the paired case 1 peel
  linear_forest,   // path edges removed in case 2, two alternating colors
  core             // the final graph handed to the dense pipeline
};
std::string to_string(TraceKind k);

struct TraceStep {
  TraceKind kind = TraceKind::core;
  std::vector<Edge> edges;
  std::vector<int> colors;  // per edge; empty for add_edge and core
  int delta_before = 0;
  int delta_after = 0;
  std::string note;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  std::optional<ConditionTag> core_condition;
  SimpleGraph reduced;  // graph handed to the dense pipeline
  // Case 2 bookkeeping
  int hakimi_edges = 0;
  int forest_count = 0;
};

class DriverError : public std::runtime_error {
 public:
  DriverError(std::string stage, const std::string& message, ReductionTrace trace,
              std::optional<PipelineReport> report = std::nullopt)
      : std::runtime_error(stage + ": " + message), stage(std::move(stage)), trace(std::move(trace)),
        report(std::move(report)) {}
  std::string stage;
  ReductionTrace trace;
  std::optional<PipelineReport> report;
};

struct DenseResult {
  int chromatic_class = 1;
  OverfullVerdict verdict;
  std::vector<int> colors;  // indexed like g.edges()
  int palette = 0;
  ReductionTrace trace;
  std::optional<PipelineReport> report;
};

// Decides class 1 or 2 for an even-order graph with min degree above half
// the order and returns an optimal coloring. Class 2 graphs get a Vizing
// coloring. Strict constants additionally demand min degree at least
// (1+epsilon) times half the order. Throws HypothesisError for inputs out
// of range and DriverError when a reduction or the pipeline fails.
DenseResult chi_prime_dense(const SimpleGraph& g, const ConstantsProfile& profile, std::uint64_t seed);

struct Saturation {
  SimpleGraph graph;
  std::vector<Edge> added;
  bool full_found = false;  // stopped because a full subgraph appeared
};

// Joins nonadjacent vertices below max degree, lowest pair first, until
// they are pairwise adjacent or a full subgraph appears.
Saturation saturate_light_vertices(const SimpleGraph& g);

struct Case1Result {
  SimpleGraph graph;
  std::vector<TraceStep> steps;
  std::optional<ConditionTag> lands_in;  // b after the paired peel
};

// One case 1 move: a single peel (even number of minimum-degree vertices,
// or a middle-degree vertex exists), or the whole paired peel sequence.
Case1Result case1_reduce(const SimpleGraph& g);

struct Case2Result {
  SimpleGraph regular;
  Multigraph hakimi;
  std::vector<std::vector<Edge>> matchings;
  std::vector<std::vector<std::vector<VertexId>>> forests;  // paths per matching
  std::vector<TraceStep> steps;
  int matching_cap = 0;
};

// Strips linear forests whose leaves are the matched deficiency pairs until
// the graph is regular.
Case2Result case2_reduce(const SimpleGraph& g, const ConstantsProfile& profile);

// Reapplies the trace's edge changes to g; the result must equal trace.reduced.
SimpleGraph replay(const SimpleGraph& g, const ReductionTrace& trace);

}  // namespace edgecol
