#pragma once

#include <string>
#include <vector>

#include "riglab/graph.hpp"
#include "riglab/rng.hpp"

namespace riglab {

enum class AdversaryStrategy { constant, oscillate, max_push };

AdversaryStrategy adversary_strategy_from_string(const std::string& name);
std::string to_string(AdversaryStrategy s);

struct ConsensusConfig {
    int h = 0;                     // per-node adversary tolerance
    std::vector<int> adversaries;  // node ids
    AdversaryStrategy strategy = AdversaryStrategy::constant;
    double constant_value = 0.0;
    double oscillate_lo = 0.0;
    double oscillate_hi = 1.0;
    double weight_floor = 0.01;    // alpha: minimum weight on retained values
    int max_rounds = 10000;
    double tol = 1e-9;
};

struct ConsensusTrace {
    std::vector<std::vector<double>> values;  // per round, all nodes (round 0 = x0)
    std::vector<double> spread;               // benign max - benign min per round
    int rounds_run = 0;
    bool converged = false;
    bool h_local = true;          // every benign node has <= h adversarial neighbors
    bool safety_ok = true;        // benign values stay in the previous benign hull
    bool spread_monotone = true;  // benign spread never increases
    bool weight_floor_ok = true;  // equal weights respected the floor everywhere
};

/// Synchronous trimmed-mean consensus. Per round every benign node discards
/// up to h received values strictly above its own (the largest such) and up
/// to h strictly below (the smallest such), then averages itself with the
/// retained values, equal weights. Values equal to the node's own are never
/// trimmed; ties among equal extremes trim the lower node index first.
/// Adversarial nodes emit per the configured strategy. Halts when the benign
/// spread reaches tol or after max_rounds.
ConsensusTrace run_filtered_consensus(const Graph& g, std::vector<double> x0,
                                      const ConsensusConfig& cfg, Seed seed);

/// Final benign spread of the trace is at most tol (closed threshold).
bool consensus_reached(const ConsensusTrace& trace, double tol);

}  // namespace riglab
