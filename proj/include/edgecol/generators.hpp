#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgecol/graph.hpp"

namespace edgecol {

// Random graph generators for the test corpora. All are deterministic in
// seed, relabel vertices randomly, and throw std::invalid_argument for
// infeasible parameters.

// Simple graph with the given degree sequence (Havel-Hakimi, then random
// degree-preserving swaps). Vertices listed in clique end up pairwise adjacent.
SimpleGraph gen_with_degrees(const std::vector<int>& degrees, const std::vector<VertexId>& clique, std::uint64_t seed);

// d-regular graph; order*d must be even.
SimpleGraph gen_regular(int order, int d, std::uint64_t seed);

// Every vertex at max_degree except light_count pairwise adjacent vertices
// of degree light_degree.
SimpleGraph gen_two_light(int order, int max_degree, int light_degree, int light_count, std::uint64_t seed);

// light_count pairwise adjacent vertices of degree min_degree, the rest at
// max_degree.
SimpleGraph gen_wide_spread(int order, int max_degree, int min_degree, int light_count, std::uint64_t seed);

// Complete graph thinned at random: each edge is dropped with probability
// 1-p unless that would push an endpoint to half the order or below.
SimpleGraph gen_random_dense(int order, double p, std::uint64_t seed);

// One vertex v of degree d joined to d vertices of a graph H on order-1
// vertices that is max_degree-regular apart from those d; G - v is then
// max_degree-overfull whenever d < max_degree.
SimpleGraph gen_planted_overfull(int order, int max_degree, int d, std::uint64_t seed);

SimpleGraph relabel(const SimpleGraph& g, std::uint64_t seed);

}  // namespace edgecol
