#pragma once

#include <stdexcept>
#include <vector>

#include "edgecol/graph.hpp"

namespace edgecol {

struct OracleBudget {
  int max_vertices = 14;
  double max_seconds = 30.0;
};

class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OracleStatus { exact, timeout };

struct OracleResult {
  OracleStatus status = OracleStatus::exact;
  int chromatic_index = -1;  // valid when exact
  std::vector<int> coloring;  // a witness coloring with chromatic_index colors
  long long nodes = 0;
};

// Exact chromatic index by backtracking: tries max_degree colors, then one
// more, and so on. Throws OracleBudgetError when the graph has more vertices
// than the budget allows; reports a timeout when the time budget runs out.
OracleResult exact_chromatic_index(const Multigraph& g, const OracleBudget& budget = {});
// Witness colors are indexed in g.edges() order.
OracleResult exact_chromatic_index(const SimpleGraph& g, const OracleBudget& budget = {});

// Whether g has a proper edge coloring with k colors (k <= 63).
// Same budget semantics; timeout reported through the result status.
OracleResult colorable_with(const Multigraph& g, int k, const OracleBudget& budget = {});

// Every odd-size vertex subset S of the active vertices with
// e(G[S]) > delta_ref * floor(|S|/2), as sorted vertex lists.
std::vector<std::vector<VertexId>> exhaustive_overfull_scan(const SimpleGraph& g, int delta_ref,
                                                            const OracleBudget& budget = {});

}  // namespace edgecol
