#include "edgecol/graph.hpp"

#include <algorithm>
#include <string>

#include "edgecol/error.hpp"

namespace edgecol {

SimpleGraph::SimpleGraph(int vertex_count)
    : n_(vertex_count), adj_(vertex_count, DynBitset(vertex_count)), deg_(vertex_count, 0),
      active_(vertex_count) {
  if (vertex_count < 0) throw ContractViolation("negative vertex count");
  active_.set_all();
}

SimpleGraph SimpleGraph::from_edges(int vertex_count, const std::vector<Edge>& edges) {
  SimpleGraph g(vertex_count);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

SimpleGraph SimpleGraph::complete(int vertex_count) {
  SimpleGraph g(vertex_count);
  for (int u = 0; u < vertex_count; ++u)
    for (int v = u + 1; v < vertex_count; ++v) g.add_edge(u, v);
  return g;
}

void SimpleGraph::check(VertexId v) const {
  if (v < 0 || v >= n_) throw ContractViolation("vertex " + std::to_string(v) + " out of range");
}

void SimpleGraph::deactivate(VertexId v) {
  check(v);
  for (int u : neighbors(v)) remove_edge(u, v);
  active_.reset(v);
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  check(u);
  check(v);
  return adj_[u].test(v);
}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v) throw ContractViolation("loop at vertex " + std::to_string(u));
  if (!active_.test(u) || !active_.test(v)) throw ContractViolation("edge at inactive vertex");
  if (adj_[u].test(v))
    throw ContractViolation("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u].set(v);
  adj_[v].set(u);
  ++deg_[u];
  ++deg_[v];
  ++m_;
}

void SimpleGraph::remove_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (!adj_[u].test(v))
    throw ContractViolation("no edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u].reset(v);
  adj_[v].reset(u);
  --deg_[u];
  --deg_[v];
  --m_;
}

int SimpleGraph::degree(VertexId v) const {
  check(v);
  return deg_[v];
}

int SimpleGraph::max_degree() const {
  int best = 0;
  active_.for_each([&](int v) { best = std::max(best, deg_[v]); });
  return best;
}

int SimpleGraph::min_degree() const {
  int best = -1;
  active_.for_each([&](int v) { best = best < 0 ? deg_[v] : std::min(best, deg_[v]); });
  return best < 0 ? 0 : best;
}

bool SimpleGraph::is_regular() const { return max_degree() == min_degree(); }

const DynBitset& SimpleGraph::neighbor_set(VertexId v) const {
  check(v);
  return adj_[v];
}

std::vector<VertexId> SimpleGraph::neighbors(VertexId v) const {
  check(v);
  return adj_[v].to_vector();
}

int SimpleGraph::common_neighbor_count(VertexId u, VertexId v) const {
  check(u);
  check(v);
  return adj_[u].count_common(adj_[v]);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].find_next(u + 1); v != DynBitset::npos; v = adj_[u].find_next(v + 1))
      out.push_back({u, v});
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const DynBitset& s) {
  const int n = g.vertex_count();
  if (s.size() != n) throw ContractViolation("vertex mask size mismatch");
  SimpleGraph h(n);
  for (int v = 0; v < n; ++v)
    if (!s.test(v) || !g.active(v)) h.deactivate(v);
  for (const auto& e : g.edges())
    if (s.test(e.u) && s.test(e.v)) h.add_edge(e.u, e.v);
  return h;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<VertexId>& s) {
  return induced_subgraph(g, vertex_set(g.vertex_count(), s));
}

SimpleGraph bipartite_between(const SimpleGraph& g, const DynBitset& a, const DynBitset& b) {
  const int n = g.vertex_count();
  if (a.size() != n || b.size() != n) throw ContractViolation("vertex mask size mismatch");
  if (a.find_first_common(b) != DynBitset::npos) throw ContractViolation("sides overlap");
  SimpleGraph h(n);
  for (int v = 0; v < n; ++v)
    if (!(a.test(v) || b.test(v)) || !g.active(v)) h.deactivate(v);
  for (const auto& e : g.edges())
    if ((a.test(e.u) && b.test(e.v)) || (b.test(e.u) && a.test(e.v))) h.add_edge(e.u, e.v);
  return h;
}

DynBitset vertex_set(int vertex_count, const std::vector<VertexId>& members) {
  DynBitset s(vertex_count);
  for (int v : members) {
    if (v < 0 || v >= vertex_count) throw ContractViolation("vertex out of range");
    s.set(v);
  }
  return s;
}

Multigraph::Multigraph(int vertex_count) : n_(vertex_count), inc_(vertex_count) {
  if (vertex_count < 0) throw ContractViolation("negative vertex count");
}

Multigraph Multigraph::from_simple(const SimpleGraph& g) {
  Multigraph m(g.vertex_count());
  for (const auto& e : g.edges()) m.add_edge(e.u, e.v);
  return m;
}

std::uint64_t Multigraph::key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

void Multigraph::check(VertexId v) const {
  if (v < 0 || v >= n_) throw ContractViolation("vertex " + std::to_string(v) + " out of range");
}

int Multigraph::add_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v) throw ContractViolation("loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  const int e = edge_count();
  auto& list = pairs_[key(u, v)];
  copy_.push_back(static_cast<int>(list.size()));
  list.push_back(e);
  ends_.push_back({u, v});
  inc_[u].push_back(e);
  inc_[v].push_back(e);
  return e;
}

EdgeId Multigraph::edge_id(int e) const {
  if (e < 0 || e >= edge_count()) throw ContractViolation("edge index out of range");
  return {ends_[e].u, ends_[e].v, copy_[e]};
}

int Multigraph::index_of(const EdgeId& id) const {
  if (id.u < 0 || id.v < 0 || id.u >= n_ || id.v >= n_ || id.u == id.v) return -1;
  auto it = pairs_.find(key(id.u, id.v));
  if (it == pairs_.end() || id.copy < 0 || id.copy >= static_cast<int>(it->second.size())) return -1;
  return it->second[id.copy];
}

int Multigraph::degree(VertexId v) const {
  check(v);
  return static_cast<int>(inc_[v].size());
}

int Multigraph::max_degree() const {
  int best = 0;
  for (const auto& l : inc_) best = std::max(best, static_cast<int>(l.size()));
  return best;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  check(u);
  check(v);
  auto it = pairs_.find(key(u, v));
  return it == pairs_.end() ? 0 : static_cast<int>(it->second.size());
}

int Multigraph::max_multiplicity() const {
  int best = 0;
  for (const auto& [k, l] : pairs_) best = std::max(best, static_cast<int>(l.size()));
  return best;
}

const std::vector<int>& Multigraph::edges_between(VertexId u, VertexId v) const {
  static const std::vector<int> empty;
  auto it = pairs_.find(key(u, v));
  return it == pairs_.end() ? empty : it->second;
}

}  // namespace edgecol
