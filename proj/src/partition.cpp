#include "edgecol/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "edgecol/error.hpp"

namespace edgecol {

int partition_certificate(const SimpleGraph& g, const DynBitset& in_a) {
  int worst = 0;
  for (VertexId v : g.vertices()) {
    const int da = g.neighbor_set(v).count_common(in_a);
    const int db = g.degree(v) - da;
    worst = std::max(worst, std::abs(da - db));
  }
  return worst;
}

namespace {

long long fourth(long long x) { return x * x * x * x; }

class LocalSearch {
 public:
  LocalSearch(const SimpleGraph& g, DynBitset& in_a) : g_(g), in_a_(in_a), diff_(g.vertex_count(), 0), delta_(g.vertex_count(), 0) {
    for (VertexId v : g.vertices()) {
      const int da = g.neighbor_set(v).count_common(in_a);
      diff_[v] = 2 * da - g.degree(v);
    }
  }

  // Objective change if a (in A) and b (in B) trade sides.
  long long gain(VertexId a, VertexId b) {
    touched_.clear();
    auto bump = [&](VertexId w, int d) {
      if (delta_[w] == 0) touched_.push_back(w);
      delta_[w] += d;
    };
    for (int w : g_.neighbors(a)) bump(w, -2);
    for (int w : g_.neighbors(b)) bump(w, +2);
    long long change = 0;
    for (VertexId w : touched_) {
      if (delta_[w] != 0) change += fourth(diff_[w] + delta_[w]) - fourth(diff_[w]);
    }
    return change;
  }

  void apply(VertexId a, VertexId b) {
    for (int w : g_.neighbors(a)) diff_[w] -= 2;
    for (int w : g_.neighbors(b)) diff_[w] += 2;
    in_a_.reset(a);
    in_a_.set(b);
  }

  void clear_scratch() {
    for (VertexId w : touched_) delta_[w] = 0;
    touched_.clear();
  }

 private:
  const SimpleGraph& g_;
  DynBitset& in_a_;
  std::vector<int> diff_;
  std::vector<int> delta_;
  std::vector<VertexId> touched_;
};

void polish(const SimpleGraph& g, const std::vector<Edge>& pairs, const DynBitset& constrained, DynBitset& in_a) {
  LocalSearch ls(g, in_a);
  std::vector<VertexId> free_vertices;
  for (VertexId v : g.vertices())
    if (!constrained.test(v)) free_vertices.push_back(v);
  constexpr int max_passes = 200;
  for (int pass = 0; pass < max_passes; ++pass) {
    bool improved = false;
    for (const auto& [x, y] : pairs) {
      const VertexId a = in_a.test(x) ? x : y, b = a == x ? y : x;
      const long long d = ls.gain(a, b);
      ls.clear_scratch();
      if (d < 0) {
        ls.apply(a, b);
        improved = true;
      }
    }
    for (VertexId a : free_vertices) {
      if (!in_a.test(a)) continue;
      for (VertexId b : free_vertices) {
        if (in_a.test(b)) continue;
        const long long d = ls.gain(a, b);
        ls.clear_scratch();
        if (d < 0) {
          ls.apply(a, b);
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
}

}  // namespace

PartitionAB balanced_partition(const SimpleGraph& g, const std::vector<Edge>& pairs, const ConstantsProfile& profile,
                               std::uint64_t seed) {
  const int n_total = g.vertex_count();
  const int order = g.order();
  if (order % 2) throw ContractViolation("partition needs an even number of vertices");
  DynBitset constrained(n_total);
  for (const auto& [x, y] : pairs) {
    if (x == y || !g.active(x) || !g.active(y)) throw ContractViolation("bad constraint pair");
    if (constrained.test(x) || constrained.test(y)) throw ContractViolation("constraint pairs overlap");
    constrained.set(x);
    constrained.set(y);
  }
  std::vector<Edge> pairing = pairs;
  VertexId pending = -1;
  for (VertexId v : g.vertices()) {
    if (constrained.test(v)) continue;
    if (pending < 0) {
      pending = v;
    } else {
      pairing.push_back({pending, v});
      pending = -1;
    }
  }

  const int n = order / 2;
  const int threshold = profile.partition_bound(n, g.max_degree());
  PartitionAB best;
  best.pairs = pairs;
  best.threshold = threshold;
  best.certificate = -1;
  const int retries = std::max(1, profile.partition_retries);
  for (int r = 0; r < retries; ++r) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    DynBitset in_a(n_total);
    for (const auto& [x, y] : pairing) in_a.set((rng() & 1) ? x : y);
    const int cert = partition_certificate(g, in_a);
    best.attempts = r + 1;
    if (best.certificate < 0 || cert < best.certificate) {
      best.in_a = in_a;
      best.certificate = cert;
    }
    if (best.certificate <= threshold) break;
  }
  if (profile.partition_always_polish || best.certificate > threshold) {
    polish(g, pairs, constrained, best.in_a);
    best.polished = true;
    best.certificate = partition_certificate(g, best.in_a);
  }
  if (best.certificate > threshold)
    throw PartitionError("degree balance " + std::to_string(best.certificate) + " exceeds bound " +
                             std::to_string(threshold),
                         best);
  return best;
}

}  // namespace edgecol
