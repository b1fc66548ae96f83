#include "edgecol/overfull.hpp"

#include <string>

#include "edgecol/classic.hpp"
#include "edgecol/error.hpp"

namespace edgecol {

DeficiencyView deficiency(const SimpleGraph& g) {
  DeficiencyView d;
  d.max_degree = g.max_degree();
  d.min_degree = g.min_degree();
  d.def.assign(g.vertex_count(), 0);
  for (VertexId v : g.vertices()) {
    const int deg = g.degree(v);
    d.def[v] = d.max_degree - deg;
    d.total += d.def[v];
    if (deg == d.max_degree) d.heavy.push_back(v);
    if (deg == d.min_degree) d.light.push_back(v);
  }
  return d;
}

long long deficiency_without(const SimpleGraph& g, VertexId v) {
  const auto d = deficiency(g);
  return d.total - d.def[v] + g.degree(v);
}

bool is_overfull(const SimpleGraph& h, int delta_ref) {
  return h.edge_count() > static_cast<long long>(delta_ref) * (h.order() / 2);
}

bool is_full(const SimpleGraph& h, int delta_ref) {
  return h.order() % 2 == 1 && h.edge_count() == static_cast<long long>(delta_ref) * (h.order() / 2);
}

std::string_view to_string(OverfullStatus s) {
  switch (s) {
    case OverfullStatus::overfull:
      return "overfull";
    case OverfullStatus::full:
      return "full";
    default:
      return "none";
  }
}

OverfullVerdict detect(const SimpleGraph& g) {
  const int order = g.order();
  if (order % 2) throw HypothesisError("detect needs even order, got " + std::to_string(order));
  if (2 * g.min_degree() <= order)
    throw HypothesisError("detect needs minimum degree above half the order");
  const auto d = deficiency(g);
  OverfullVerdict full;
  for (VertexId v : d.light) {
    const long long df = d.total - d.def[v] + g.degree(v);
    if (df < d.max_degree) return {OverfullStatus::overfull, v};
    if (df == d.max_degree && full.witness < 0) full = {OverfullStatus::full, v};
  }
  return full;
}

Regularization regularize_via_full(const SimpleGraph& g) {
  const auto verdict = detect(g);
  if (verdict.status != OverfullStatus::full) throw ContractViolation("regularize_via_full needs a full witness");
  Regularization out;
  out.witness = verdict.witness;
  const VertexId x = verdict.witness;
  SimpleGraph cur = g;
  const int delta_low = g.min_degree();
  while (!cur.is_regular()) {
    const int top = cur.max_degree();
    VertexId y = -1;
    for (VertexId v : cur.vertices())
      if (v != x && (y < 0 || cur.degree(v) < cur.degree(y))) y = v;
    SimpleGraph rest = cur;
    rest.deactivate(x);
    rest.deactivate(y);
    // Deactivation drops edges at x and y, so rest is exactly G - x - y.
    const auto m = dirac_perfect_matching(rest);
    for (const auto& e : m) cur.remove_edge(e.u, e.v);
    out.matchings.push_back(m);
    if (cur.min_degree() != delta_low || cur.max_degree() != top - 1)
      throw std::logic_error("regularize_via_full: peel did not lower the maximum degree by one");
    if (!cur.is_regular() && deficiency_without(cur, x) != cur.max_degree())
      throw std::logic_error("regularize_via_full: full witness lost after a peel");
  }
  out.regular = std::move(cur);
  return out;
}

}  // namespace edgecol
