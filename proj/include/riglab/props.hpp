#pragma once

#include <string>
#include <vector>

#include "riglab/graph.hpp"
#include "riglab/rng.hpp"

namespace riglab {

/// Minimum neighbor count over all nodes. Throws empty_graph_error on n = 0.
int min_degree(const Graph& g);

bool is_connected(const Graph& g);

/// True iff the graph survives deletion of any k-1 nodes (equivalently,
/// every pair has k internally node-disjoint paths). Requires n >= k+1;
/// the one-node graph is k-connected for k = 0 only.
bool is_k_connected(const Graph& g, int k);

/// Exact vertex connectivity. Complete graphs return n-1; otherwise the
/// minimum s-t vertex cut over the Even-Tarjan pair family (a fixed
/// minimum-degree node against all its non-neighbors, plus non-adjacent
/// pairs among its neighbors), via node-splitting max-flow.
int vertex_connectivity(const Graph& g);

struct ConnectivityVerdict {
    int k = 0;
    bool holds = false;
    /// When false: a node set of size < k whose deletion disconnects the
    /// graph, or a pair of nodes in different components. Either may be
    /// absent (e.g. n < k+1).
    std::vector<int> separator;
    bool has_pair = false;
    int pair_u = -1, pair_v = -1;
};

ConnectivityVerdict connectivity_verdict(const Graph& g, int k);

struct RobustnessVerdict {
    int k = 0;
    bool holds = false;
    /// When false: disjoint nonempty sets where every node of witness_a has
    /// fewer than k neighbors outside witness_a, and likewise witness_b.
    std::vector<int> witness_a, witness_b;
};

inline constexpr int kRobustnessDefaultCap = 16;

/// Exact k-robustness by exhausting vertex subsets: marks every set whose
/// members all have < k neighbors outside it, then searches for two disjoint
/// marked sets (the violating pair). Throws capacity_error for
/// n > exhaustive_cap, directing callers to robustness_screen.
RobustnessVerdict is_k_robust(const Graph& g, int k,
                              int exhaustive_cap = kRobustnessDefaultCap);

/// Largest k such that the graph is k-robust (0 if not even 1-robust).
int robustness(const Graph& g, int exhaustive_cap = kRobustnessDefaultCap);

/// Re-checks a violating pair against the definition. Used to validate
/// every witness before it is reported.
bool verify_robustness_violation(const Graph& g, int k,
                                 const std::vector<int>& a,
                                 const std::vector<int>& b);

enum class ScreenOutcome { certified_false, undecided };

struct ScreenResult {
    ScreenOutcome outcome = ScreenOutcome::undecided;
    /// "min_degree", "not_k_connected" or "witness_pair" when certified.
    std::string reason;
    std::vector<int> witness_a, witness_b;

    bool certified_false() const { return outcome == ScreenOutcome::certified_false; }
};

/// One-sided robustness check for graphs beyond the exhaustive cap.
/// Certifies non-robustness via min-degree or k-connectivity (robustness
/// implies both), or via a randomized degree-biased search for a violating
/// pair; every hit is re-verified. Never certifies robustness.
ScreenResult robustness_screen(const Graph& g, int k, Seed seed = {0},
                               int budget = 10000);

}  // namespace riglab
