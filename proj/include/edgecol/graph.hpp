#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edgecol/bitset.hpp"

namespace edgecol {

using VertexId = int;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph over a fixed id range [0, vertex_count).
// Vertices can be masked out (inactive); ids never shift.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count);

  static SimpleGraph from_edges(int vertex_count, const std::vector<Edge>& edges);
  static SimpleGraph complete(int vertex_count);

  int vertex_count() const { return n_; }
  // Number of active vertices.
  int order() const { return active_.count(); }
  bool active(VertexId v) const { return active_.test(v); }
  const DynBitset& active_set() const { return active_; }
  std::vector<VertexId> vertices() const { return active_.to_vector(); }
  // Removes all edges at v and masks it out.
  void deactivate(VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  int degree(VertexId v) const;
  long long edge_count() const { return m_; }
  // Extremes over active vertices; 0 on an empty graph.
  int max_degree() const;
  int min_degree() const;
  bool is_regular() const;

  const DynBitset& neighbor_set(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  int common_neighbor_count(VertexId u, VertexId v) const;
  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.active_ == b.active_ && a.adj_ == b.adj_;
  }

 private:
  void check(VertexId v) const;

  int n_ = 0;
  long long m_ = 0;
  std::vector<DynBitset> adj_;
  std::vector<int> deg_;
  DynBitset active_;
};

// Vertices outside s are masked out; edges with both ends in s are kept.
SimpleGraph induced_subgraph(const SimpleGraph& g, const DynBitset& s);
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<VertexId>& s);

// Keeps only edges with one end in a and the other in b; vertices outside
// a and b are masked out. Throws ContractViolation when a and b overlap.
SimpleGraph bipartite_between(const SimpleGraph& g, const DynBitset& a, const DynBitset& b);

DynBitset vertex_set(int vertex_count, const std::vector<VertexId>& members);

struct EdgeId {
  VertexId u;  // u < v
  VertexId v;
  int copy;
  friend bool operator==(const EdgeId&, const EdgeId&) = default;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Loop-free multigraph. Edges are append-only and addressed by index;
// the copy number of an edge is its rank among parallel edges of its pair.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  static Multigraph from_simple(const SimpleGraph& g);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(ends_.size()); }

  int add_edge(VertexId u, VertexId v);

  Edge ends(int e) const { return ends_[e]; }
  VertexId other(int e, VertexId v) const { return ends_[e].u == v ? ends_[e].v : ends_[e].u; }
  EdgeId edge_id(int e) const;
  // Index of the given copy, or -1 if absent.
  int index_of(const EdgeId& id) const;

  int degree(VertexId v) const;
  int max_degree() const;
  const std::vector<int>& incident(VertexId v) const { return inc_[v]; }

  int multiplicity(VertexId u, VertexId v) const;
  int max_multiplicity() const;
  const std::vector<int>& edges_between(VertexId u, VertexId v) const;

 private:
  static std::uint64_t key(VertexId u, VertexId v);
  void check(VertexId v) const;

  int n_ = 0;
  std::vector<Edge> ends_;  // normalized u < v
  std::vector<int> copy_;
  std::vector<std::vector<int>> inc_;
  std::unordered_map<std::uint64_t, std::vector<int>> pairs_;
};

}  // namespace edgecol
