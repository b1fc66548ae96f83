#include "edgecol/driver.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "edgecol/classic.hpp"
#include "edgecol/error.hpp"

namespace edgecol {

std::string to_string(TraceKind k) {
  switch (k) {
    case TraceKind::add_edge: return "add_edge";
    case TraceKind::full_matching: return "full_matching";
    case TraceKind::peel: return "peel";
    case TraceKind::double_peel: return "double_peel";
    case TraceKind::linear_forest: return "linear_forest";
    case TraceKind::core: return "core";
  }
  return "?";
}

namespace {

Edge norm(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

void remove_all(SimpleGraph& g, const std::vector<Edge>& edges) {
  for (const auto& e : edges) g.remove_edge(e.u, e.v);
}

std::vector<Edge> matching_without(const SimpleGraph& g, const std::vector<VertexId>& drop) {
  SimpleGraph rest = g;
  for (VertexId v : drop) rest.deactivate(v);
  return dirac_perfect_matching(rest);
}

TraceStep matching_step(TraceKind kind, std::vector<Edge> m, int color, int before, int after, std::string note) {
  TraceStep s;
  s.kind = kind;
  s.colors.assign(m.size(), color);
  s.edges = std::move(m);
  s.delta_before = before;
  s.delta_after = after;
  s.note = std::move(note);
  return s;
}

}  // namespace

Saturation saturate_light_vertices(const SimpleGraph& g) {
  Saturation out{g, {}, false};
  SimpleGraph& cur = out.graph;
  const int delta = cur.max_degree();
  while (true) {
    bool added = false;
    const auto verts = cur.vertices();
    for (std::size_t x = 0; x < verts.size() && !added; ++x) {
      const VertexId u = verts[x];
      if (cur.degree(u) >= delta) continue;
      for (std::size_t y = x + 1; y < verts.size(); ++y) {
        const VertexId v = verts[y];
        if (cur.degree(v) >= delta || cur.has_edge(u, v)) continue;
        cur.add_edge(u, v);
        out.added.push_back({u, v});
        added = true;
        break;
      }
    }
    if (!added) return out;
    const auto verdict = detect(cur);
    if (verdict.status == OverfullStatus::overfull)
      throw std::logic_error("saturation created an overfull subgraph");
    if (verdict.status == OverfullStatus::full) {
      out.full_found = true;
      return out;
    }
  }
}

Case1Result case1_reduce(const SimpleGraph& g) {
  Case1Result out{g, {}, std::nullopt};
  const int delta = g.max_degree(), low = g.min_degree();
  std::vector<VertexId> lightest, middle;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == low) lightest.push_back(v);
    else if (g.degree(v) < delta) middle.push_back(v);
  }
  if (lightest.size() % 2 == 0 || !middle.empty()) {
    std::vector<VertexId> drop = lightest;
    std::string note = "even minimum-degree class";
    if (lightest.size() % 2) {
      drop.push_back(middle.front());
      note = "middle vertex " + std::to_string(middle.front());
    }
    auto m = matching_without(g, drop);
    remove_all(out.graph, m);
    out.steps.push_back(matching_step(TraceKind::peel, std::move(m), delta, delta, out.graph.max_degree(), note));
    return out;
  }

  if (lightest.size() < 3) throw HypothesisError("paired peel needs at least three minimum-degree vertices");
  if ((delta - low) % 2) throw HypothesisError("paired peel needs max and min degree of equal parity");
  const VertexId x = lightest[0], y = lightest[1];
  SimpleGraph& cur = out.graph;
  const int rounds = (delta - low) / 2;
  for (int i = 1; i <= rounds; ++i) {
    for (int half = 0; half < 2; ++half) {
      const VertexId keep = half == 0 ? x : y;
      std::vector<VertexId> drop;
      for (VertexId v : lightest)
        if (v != keep) drop.push_back(v);
      std::vector<Edge> m;
      if (i == 1) {
        m = matching_without(cur, drop);
      } else {
        // Pin keep to its lowest eligible neighbor, match the rest.
        SimpleGraph rest = cur;
        for (VertexId v : drop) rest.deactivate(v);
        const auto nb = rest.neighbors(keep);
        if (nb.empty()) throw HypothesisError("no neighbor left for the pinned vertex");
        const VertexId star = nb.front();
        rest.deactivate(keep);
        rest.deactivate(star);
        m = dirac_perfect_matching(rest);
        m.push_back(norm(keep, star));
      }
      const int before = cur.max_degree();
      remove_all(cur, m);
      const int color = low + 2 * i - 1 + half;
      out.steps.push_back(matching_step(TraceKind::double_peel, std::move(m), color, before, cur.max_degree(),
                                        "round " + std::to_string(i) + (half ? " y" : " x")));
    }
  }
  out.lands_in = ConditionTag::b;
  return out;
}

Case2Result case2_reduce(const SimpleGraph& g, const ConstantsProfile& profile) {
  Case2Result out;
  const int delta = g.max_degree();
  const int nv = g.vertex_count();
  std::vector<int> def(nv, 0);
  for (VertexId v : g.vertices()) def[v] = delta - g.degree(v);
  auto h = hakimi_realize(def);
  if (!h) throw HypothesisError("deficiency sequence is not realizable");
  out.hakimi = std::move(*h);
  out.matching_cap = profile.case2_matching_cap(g.order() / 2, g.min_degree());

  std::vector<char> used(out.hakimi.edge_count(), 0);
  int left = out.hakimi.edge_count();
  while (left > 0) {
    std::vector<char> busy(nv, 0);
    std::vector<Edge> m;
    for (int e = 0; e < out.hakimi.edge_count() && static_cast<int>(m.size()) < out.matching_cap; ++e) {
      if (used[e]) continue;
      const auto [u, v] = out.hakimi.ends(e);
      if (busy[u] || busy[v]) continue;
      busy[u] = busy[v] = 1;
      used[e] = 1;
      --left;
      m.push_back(norm(u, v));
    }
    out.matchings.push_back(std::move(m));
  }

  const int k = static_cast<int>(out.matchings.size());
  SimpleGraph cur = g;
  for (int i = 0; i < k; ++i) {
    const auto ps = path_system(cur, out.matchings[i]);
    TraceStep step;
    step.kind = TraceKind::linear_forest;
    step.delta_before = cur.max_degree();
    const int c1 = delta - 2 * k + 2 * i + 1;
    for (const auto& path : ps.paths) {
      for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        step.edges.push_back(norm(path[t], path[t + 1]));
        step.colors.push_back(c1 + static_cast<int>(t % 2));
      }
    }
    remove_all(cur, step.edges);
    step.delta_after = cur.max_degree();
    step.note = "forest " + std::to_string(i + 1) + " of " + std::to_string(k);
    out.steps.push_back(std::move(step));
    out.forests.push_back(ps.paths);
  }
  if (!cur.is_regular() || cur.max_degree() != delta - 2 * k)
    throw std::logic_error("case 2 remainder is not regular of the expected degree");
  out.regular = std::move(cur);
  return out;
}

SimpleGraph replay(const SimpleGraph& g, const ReductionTrace& trace) {
  SimpleGraph cur = g;
  for (const auto& s : trace.steps) {
    if (s.kind == TraceKind::add_edge) {
      for (const auto& e : s.edges) cur.add_edge(e.u, e.v);
    } else if (s.kind != TraceKind::core) {
      remove_all(cur, s.edges);
    }
  }
  return cur;
}

DenseResult chi_prime_dense(const SimpleGraph& g, const ConstantsProfile& profile, std::uint64_t seed) {
  const int order = g.order();
  if (order % 2) throw HypothesisError("order must be even, got " + std::to_string(order));
  if (2 * g.min_degree() <= order)
    throw HypothesisError("minimum degree " + std::to_string(g.min_degree()) + " is not above half the order " +
                          std::to_string(order / 2));
  if (profile.strict_bounds && g.min_degree() < (1.0 + profile.epsilon) * (order / 2))
    throw HypothesisError("minimum degree below (1+epsilon) times half the order");

  DenseResult res;
  res.verdict = detect(g);
  const int delta = g.max_degree();
  if (res.verdict.status == OverfullStatus::overfull) {
    res.chromatic_class = 2;
    res.colors = vizing_color(g);
    res.palette = delta + 1;
    return res;
  }

  ReductionTrace& trace = res.trace;
  SimpleGraph cur = g;
  const int n = order / 2;
  const int threshold = profile.case1_threshold(n);
  std::optional<ConditionTag> tag;
  const int max_rounds = 4 * order + 16;
  try {
    for (int round = 0; round < max_rounds && !tag; ++round) {
      if (cur.is_regular()) {
        tag = ConditionTag::a;
        break;
      }
      const auto verdict = detect(cur);
      if (verdict.status == OverfullStatus::overfull)
        throw DriverError("reduce", "reduced graph became overfull", trace);
      if (verdict.status == OverfullStatus::full) {
        auto reg = regularize_via_full(cur);
        const int low = cur.min_degree();
        int top = cur.max_degree();
        for (std::size_t i = 0; i < reg.matchings.size(); ++i, --top)
          trace.steps.push_back(matching_step(TraceKind::full_matching, reg.matchings[i], low + static_cast<int>(i) + 1,
                                              top, top - 1, "witness " + std::to_string(reg.witness)));
        cur = std::move(reg.regular);
        continue;
      }
      auto sat = saturate_light_vertices(cur);
      if (!sat.added.empty()) {
        TraceStep s;
        s.kind = TraceKind::add_edge;
        s.edges = sat.added;
        s.delta_before = s.delta_after = cur.max_degree();
        trace.steps.push_back(std::move(s));
        cur = std::move(sat.graph);
        if (sat.full_found) continue;
      }
      if (cur.is_regular()) continue;

      const int top = cur.max_degree(), low = cur.min_degree();
      int lightest = 0, heavy = 0;
      for (VertexId v : cur.vertices()) {
        lightest += cur.degree(v) == low;
        heavy += cur.degree(v) == top;
      }
      if (top - low < threshold) {
        std::optional<Case2Result> c2;
        try {
          c2 = case2_reduce(cur, profile);
        } catch (const HypothesisError&) {
          // The peel keeps the minimum degree intact.
          if (!profile.general_path_fallback) throw;
        }
        if (c2) {
          trace.hakimi_edges = c2->hakimi.edge_count();
          trace.forest_count = static_cast<int>(c2->matchings.size());
          for (auto& s : c2->steps) trace.steps.push_back(std::move(s));
          cur = std::move(c2->regular);
          tag = ConditionTag::a;
          continue;
        }
        auto c1 = case1_reduce(cur);
        for (auto& s : c1.steps) trace.steps.push_back(std::move(s));
        cur = std::move(c1.graph);
        if (c1.lands_in) tag = c1.lands_in;
      } else if (lightest >= threshold && heavy >= n + 1) {
        tag = ConditionTag::c;
      } else {
        auto c1 = case1_reduce(cur);
        for (auto& s : c1.steps) trace.steps.push_back(std::move(s));
        cur = std::move(c1.graph);
        if (c1.lands_in) tag = c1.lands_in;
      }
    }
  } catch (const HypothesisError& e) {
    trace.reduced = cur;
    throw DriverError("reduce", e.what(), trace);
  }
  trace.reduced = cur;
  if (!tag) throw DriverError("reduce", "reduction did not terminate", trace);
  trace.core_condition = tag;

  DenseColoring core;
  try {
    core = color_dense(cur, *tag, profile, seed);
  } catch (const PipelineError& e) {
    throw DriverError("pipeline", e.what(), trace, e.report);
  }
  res.report = core.report;
  TraceStep cs;
  cs.kind = TraceKind::core;
  cs.delta_before = cs.delta_after = cur.max_degree();
  cs.note = "condition " + to_string(*tag);
  trace.steps.push_back(std::move(cs));

  std::map<Edge, int> color_of;
  const auto core_edges = cur.edges();
  for (std::size_t t = 0; t < core_edges.size(); ++t) color_of[core_edges[t]] = core.colors[t];
  for (const auto& s : trace.steps)
    for (std::size_t t = 0; t < s.colors.size(); ++t) color_of[s.edges[t]] = s.colors[t];

  const auto edges = g.edges();
  res.colors.resize(edges.size());
  for (std::size_t t = 0; t < edges.size(); ++t) {
    const auto it = color_of.find(edges[t]);
    if (it == color_of.end()) throw DriverError("recombine", "edge left uncolored", trace, res.report);
    res.colors[t] = it->second;
  }
  res.palette = delta;
  const auto mg = Multigraph::from_simple(g);
  const auto check = validate_proper(mg, res.colors);
  if (!check || *std::max_element(res.colors.begin(), res.colors.end()) > delta)
    throw DriverError("recombine", "recombined coloring is not a proper max-degree coloring", trace, res.report);
  return res;
}

}  // namespace edgecol
