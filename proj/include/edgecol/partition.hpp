#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "edgecol/bitset.hpp"
#include "edgecol/graph.hpp"
#include "edgecol/profile.hpp"

namespace edgecol {

struct PartitionAB {
  DynBitset in_a;            // side A membership; the rest is B
  std::vector<Edge> pairs;   // constraint pairs, each split across the sides
  int certificate = 0;       // max_v |d_A(v) - d_B(v)|
  int threshold = 0;         // bound the certificate was checked against
  int attempts = 0;          // random assignments tried
  bool polished = false;     // local search ran
};

class PartitionError : public std::runtime_error {
 public:
  PartitionError(const std::string& what, PartitionAB best) : std::runtime_error(what), best(std::move(best)) {}
  PartitionAB best;
};

// max_v |d_A(v) - d_B(v)| over active vertices, recounted from scratch.
int partition_certificate(const SimpleGraph& g, const DynBitset& in_a);

// Splits the active vertices into equal halves with every pair split and
// per-vertex degree balance within the profile's bound. Pairs extend to a
// pairing of all vertices; one coin per pair picks its orientation. Retries
// with derived seeds, then local search (swapping a pair, or two unpaired
// vertices on opposite sides). Deterministic in seed.
PartitionAB balanced_partition(const SimpleGraph& g, const std::vector<Edge>& pairs, const ConstantsProfile& profile,
                               std::uint64_t seed);

}  // namespace edgecol
