#pragma once

#include <string_view>
#include <vector>

#include "edgecol/graph.hpp"

namespace edgecol {

struct DeficiencyView {
  int max_degree = 0;
  int min_degree = 0;
  std::vector<int> def;  // max_degree - d(v) for active v, 0 otherwise
  long long total = 0;
  std::vector<VertexId> heavy;  // degree == max_degree
  std::vector<VertexId> light;  // degree == min_degree
};

DeficiencyView deficiency(const SimpleGraph& g);

// Deficiency of G - v measured against max_degree(g):
// sum over w != v of (max_degree - d_{G-v}(w)).
long long deficiency_without(const SimpleGraph& g, VertexId v);

// e(h) > delta_ref * floor(order/2).
bool is_overfull(const SimpleGraph& h, int delta_ref);
// e(h) == delta_ref * floor(order/2) with odd order.
bool is_full(const SimpleGraph& h, int delta_ref);

enum class OverfullStatus { none, overfull, full };
std::string_view to_string(OverfullStatus s);

struct OverfullVerdict {
  OverfullStatus status = OverfullStatus::none;
  VertexId witness = -1;  // the removed vertex v with G - v overfull or full
};

// For even order and min degree above order/2, the only candidate overfull
// or full subgraphs are G - v with v of minimum degree. Returns the lowest
// overfull witness, else the lowest full witness. Throws HypothesisError
// outside that density range.
OverfullVerdict detect(const SimpleGraph& g);

struct Regularization {
  SimpleGraph regular;
  VertexId witness = -1;
  std::vector<std::vector<Edge>> matchings;  // in peel order
};

// Requires a full witness x. Repeatedly removes a perfect matching of
// G - x - y, y the lightest vertex other than x, until the graph is
// min_degree-regular. Throws ContractViolation without a full witness,
// HypothesisError when a matching cannot be found.
Regularization regularize_via_full(const SimpleGraph& g);

}  // namespace edgecol
