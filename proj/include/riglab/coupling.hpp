#pragma once

#include <cstdint>
#include <functional>

#include "riglab/assignment.hpp"
#include "riglab/graph.hpp"
#include "riglab/rng.hpp"
#include "riglab/sampling.hpp"

namespace riglab {

/// Jointly sampled graphs with the checked (never assumed) edgewise
/// subgraph relation lo <= hi.
struct CoupledPair {
    Graph lo;
    Graph hi;
    bool subgraph_holds = false;
};

/// Nested uniform sampler: every node draws a K2-subset of the pool, then its
/// K1-set is a uniform subset of that. Both marginals are exact and lo is a
/// spanning subgraph of hi by construction. Requires 1 <= K1 <= K2 <= P.
CoupledPair nested_uniform_pair(int n, std::int64_t P, std::int64_t K1,
                                std::int64_t K2, Seed seed);

/// Nested binomial sampler: each object joins the hi set with probability p2
/// and stays in the lo set with an independent keep probability p1/p2.
/// Requires 0 <= p1 <= p2 <= 1.
CoupledPair nested_binomial_pair(int n, std::int64_t P, double p1, double p2,
                                 Seed seed);

/// Uniform-model set sizes bracketing the binomial model's sizes:
/// K_-/+ = pP -/+ sqrt(3 (pP + ln n) ln n), floored/ceiled and clamped
/// into [0, P].
struct BracketParams {
    std::int64_t K_minus = 0;
    std::int64_t K_plus = 0;
    double eps_n = 0;
    double p_hat = 0;
};

BracketParams binomial_size_bracket(std::int64_t n, std::int64_t P, double p);

/// Samples the n binomial set sizes and reports whether all of them landed
/// inside [K_minus, K_plus]. On success the shared-permutation nesting puts
/// the binomial graph between the two uniform graphs edgewise.
bool binomial_bracket_holds(std::int64_t n, std::int64_t P, double p, Seed seed);

/// Relative half-width of the set-size bracket for the general model:
/// eps = (n Var/E^2)^(1/4) / sqrt(ln n), with the bracket
/// [(1-eps) E, (1+eps) E]. in_regime is false when eps >= 1/ln n (the
/// variance condition of the scaling results is violated).
struct EpsilonBracket {
    double eps = 0;
    double lo = 0;
    double hi = 0;
    bool in_regime = true;
};

EpsilonBracket size_bracket_epsilon(std::int64_t n, double mean, double variance);
EpsilonBracket size_bracket_epsilon(std::int64_t n, const SizeDistribution& dist);

/// Erdos-Renyi edge probability whose graph couples below the binomial
/// intersection graph: p_hat = p^2 P (1 - n p + 2 p - p^2 P / 2), clamped to
/// 0 when the factor goes negative. The hypothesis ratios report how far the
/// parameters sit from the regime p <= 1/(n ln n), p^2 P <= 1/ln n.
struct ErMinorant {
    double p_hat = 0;
    bool clamped = false;
    double p_ratio = 0;    // p * n * ln n
    double p2P_ratio = 0;  // p^2 P * ln n
};

ErMinorant er_minorant_p_hat(std::int64_t n, std::int64_t P, double p);

using GraphSampler = std::function<Graph(Seed)>;
using GraphPredicate = std::function<bool(const Graph&)>;

struct DominanceReport {
    int trials = 0;
    int successes_lo = 0;
    int successes_hi = 0;
    double p_lo = 0;
    double p_hi = 0;
    double z = 0;  // one-sided score of (p_lo - p_hi); large positive contradicts dominance
};

/// Estimates P[property] under both samplers independently and returns the
/// z-score of the difference. The property must be monotone increasing for
/// the dominance reading to apply. Worker-count invariant: trial i always
/// uses seed.child(side).child(i).
DominanceReport dominance_test(const GraphSampler& lo, const GraphSampler& hi,
                               const GraphPredicate& property, int trials,
                               Seed seed, int threads = 1);

}  // namespace riglab
