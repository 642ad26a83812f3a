#pragma once

#include <cstdint>
#include <vector>

#include "riglab/assignment.hpp"
#include "riglab/graph.hpp"
#include "riglab/rng.hpp"

namespace riglab {

struct SampledGraph {
    Graph graph;
    ObjectAssignment assignment;
};

/// Intersection graph of an assignment: edge (i, j) exactly when the two
/// object sets share at least one object. Built via the object -> holders
/// inverted index (one clique per object).
Graph graph_from_assignment(const ObjectAssignment& assignment,
                            int bit_row_cap = Graph::kDefaultBitRowCap);

/// Every node gets an independent uniformly random K-subset of the pool.
/// Requires 1 <= K <= P.
SampledGraph sample_uniform_rig(int n, std::int64_t P, std::int64_t K, Seed seed);

/// Every object joins every node's set independently with probability p.
/// Empty sets (isolated nodes) are possible.
SampledGraph sample_binomial_rig(int n, std::int64_t P, double p, Seed seed);

/// Set sizes drawn from dist, then a uniform subset of that size.
SampledGraph sample_general_rig(int n, const SizeDistribution& dist, Seed seed);

/// Erdos-Renyi: each of the C(n,2) edges present independently with
/// probability p_hat.
Graph sample_er(int n, double p_hat, Seed seed);

/// Uniform K-subset of {0, ..., P-1}, sorted (Floyd's algorithm).
std::vector<std::int32_t> sample_k_subset(std::int64_t P, std::int64_t K, Rng& rng);

/// Subset of {0, ..., P-1} with independent inclusion probability p, sorted
/// (geometric gap sampling, O(pP) expected).
std::vector<std::int32_t> sample_bernoulli_subset(std::int64_t P, double p, Rng& rng);

/// Number of successes in Binomial(P, p) without materializing the subset.
std::int64_t sample_binomial_count(std::int64_t P, double p, Rng& rng);

}  // namespace riglab
