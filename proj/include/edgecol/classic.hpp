#pragma once

#include <optional>
#include <span>
#include <vector>

#include "edgecol/coloring.hpp"
#include "edgecol/graph.hpp"

namespace edgecol {

// ---- edge coloring ----

// Misra–Gries fan rotation: colors the listed uncolored edges of a simple
// subgraph, keeping existing colors. Every vertex must have fewer incident
// colored-or-listed edges than the palette size.
void vizing_extend(EdgeColoring& c, std::span<const int> edges);

// Proper coloring with at most max_degree+1 colors. Colors are indexed like
// Multigraph::from_simple(g), i.e. in g.edges() order.
std::vector<int> vizing_color(const SimpleGraph& g);
// Same for a multigraph without parallel edges; throws ContractViolation otherwise.
std::vector<int> vizing_color(const Multigraph& g);

// First-fit coloring in edge-index order with palette k. With kempe_repair,
// an edge with no common free color triggers Kempe swaps before giving up.
// Always succeeds when k >= 2*max_degree-1.
std::optional<std::vector<int>> greedy_multigraph_color(const Multigraph& g, int k, bool kempe_repair = false);

// Proper coloring of a bipartite multigraph with exactly max_degree colors.
// Throws ContractViolation when g is not bipartite.
std::vector<int> konig_color(const Multigraph& g);

// ---- degree sequences ----

using DegreeSequence = std::vector<int>;

// Even sum and largest entry at most the sum of the others.
bool hakimi_feasible(std::span<const int> degrees);
// Loop-free multigraph with d(v) = degrees[v] for every v, or nullopt when
// infeasible. Repeatedly joins the two vertices of largest residual degree.
std::optional<Multigraph> hakimi_realize(std::span<const int> degrees);

// ---- Hamiltonicity ----

// Hamiltonian cycle over the active vertices by rotation-extension. Requires
// order >= 3 and min degree >= order/2, else HypothesisError.
std::vector<VertexId> dirac_hamiltonian_cycle(const SimpleGraph& g);

// Spanning path from a to b over the active vertices. Requires a != b
// (ContractViolation) and min degree >= (order+1)/2 (HypothesisError).
// Starts from the longer a-b arc of a Hamiltonian cycle and absorbs the rest.
std::vector<VertexId> hamiltonian_path_between(const SimpleGraph& g, VertexId a, VertexId b);

// Perfect matching of an even-order Dirac graph: alternate edges of a
// Hamiltonian cycle.
std::vector<Edge> dirac_perfect_matching(const SimpleGraph& g);

struct PathSystem {
  std::vector<std::vector<VertexId>> paths;  // paths[i] runs from pairs[i].u to pairs[i].v
};

// Vertex-disjoint paths covering all active vertices, path i joining the
// i-th pair. All but the last pair get a middle vertex (lowest unused common
// neighbor); the last path is Hamiltonian on what remains. Throws
// ContractViolation for an empty or overlapping pair list and
// HypothesisError when no common neighbor or spanning path exists.
PathSystem path_system(const SimpleGraph& g, const std::vector<Edge>& pairs);

// ---- matchings ----

// Maximum matching of the bipartite graph h (edges between left and its
// complement among active vertices). Returns mate[v] or -1.
std::vector<VertexId> hopcroft_karp(const SimpleGraph& h, const DynBitset& left);

struct MatchingResult {
  bool perfect = false;
  bool hypotheses_met = false;  // degree condition held and phase one saturated W
  bool used_fallback = false;   // plain maximum matching was used
  std::vector<Edge> matching;
};

// Perfect matching of a balanced bipartite graph with sides x, y: first a
// greedy matching saturating the low-degree set W = {d(v) < (|x| + t/2)/2},
// then augmenting paths on the rest. Falls back to a plain maximum matching
// when the hypotheses fail.
MatchingResult pm_with_degree_condition(const SimpleGraph& h, const DynBitset& x, const DynBitset& y, int t);

}  // namespace edgecol
