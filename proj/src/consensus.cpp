#include "riglab/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riglab/errors.hpp"

namespace riglab {

AdversaryStrategy adversary_strategy_from_string(const std::string& name) {
    if (name == "constant") return AdversaryStrategy::constant;
    if (name == "oscillate") return AdversaryStrategy::oscillate;
    if (name == "max_push") return AdversaryStrategy::max_push;
    throw invalid_parameter("unknown adversary strategy: " + name);
}

std::string to_string(AdversaryStrategy s) {
    switch (s) {
        case AdversaryStrategy::constant: return "constant";
        case AdversaryStrategy::oscillate: return "oscillate";
        case AdversaryStrategy::max_push: return "max_push";
    }
    return "?";
}

namespace {

struct BenignHull {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double spread() const { return (hi >= lo) ? hi - lo : 0.0; }
};

BenignHull benign_hull(const std::vector<double>& values, const std::vector<char>& is_adv) {
    BenignHull h;
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (is_adv[v]) continue;
        h.lo = std::min(h.lo, values[v]);
        h.hi = std::max(h.hi, values[v]);
    }
    return h;
}

}  // namespace

ConsensusTrace run_filtered_consensus(const Graph& g, std::vector<double> x0,
                                      const ConsensusConfig& cfg, Seed /*seed*/) {
    const int n = g.node_count();
    if (static_cast<int>(x0.size()) != n)
        throw invalid_parameter("initial values length must equal node count");
    if (cfg.h < 0) throw invalid_parameter("h must be >= 0");
    if (!(cfg.weight_floor > 0.0 && cfg.weight_floor < 1.0))
        throw invalid_parameter("weight floor must be in (0, 1)");
    std::vector<char> is_adv(n, 0);
    for (int a : cfg.adversaries) {
        if (a < 0 || a >= n) throw invalid_parameter("adversary id out of range");
        is_adv[a] = 1;
    }

    ConsensusTrace trace;
    for (int v = 0; v < n; ++v)
        if (!is_adv[v]) {
            int adv_nbrs = 0;
            for (int w : g.neighbors(v)) adv_nbrs += is_adv[w];
            if (adv_nbrs > cfg.h) trace.h_local = false;
        }

    std::vector<double> cur = std::move(x0);
    trace.values.push_back(cur);
    BenignHull hull = benign_hull(cur, is_adv);
    trace.spread.push_back(hull.spread());

    const double mono_eps = 1e-12;
    std::vector<std::pair<double, int>> above, below;
    std::vector<double> next(cur.size());

    int round = 0;
    while (trace.spread.back() > cfg.tol && round < cfg.max_rounds) {
        // Adversarial emissions for this round.
        std::vector<double> emitted = cur;
        for (int v = 0; v < n; ++v) {
            if (!is_adv[v]) continue;
            switch (cfg.strategy) {
                case AdversaryStrategy::constant:
                    emitted[v] = cfg.constant_value;
                    break;
                case AdversaryStrategy::oscillate:
                    emitted[v] = (round % 2 == 0) ? cfg.oscillate_lo : cfg.oscillate_hi;
                    break;
                case AdversaryStrategy::max_push:
                    emitted[v] = (hull.hi >= hull.lo ? hull.hi : 0.0) + 1.0;
                    break;
            }
        }

        for (int v = 0; v < n; ++v) {
            if (is_adv[v]) {
                next[v] = emitted[v];
                continue;
            }
            const double own = cur[v];
            above.clear();
            below.clear();
            double retained_sum = own;
            int retained_count = 1;
            for (int w : g.neighbors(v)) {
                double x = emitted[w];
                if (x > own)
                    above.emplace_back(x, w);
                else if (x < own)
                    below.emplace_back(x, w);
                else {
                    retained_sum += x;
                    ++retained_count;
                }
            }
            // Largest values first; equal values put the lower index first
            // so it is trimmed first.
            std::sort(above.begin(), above.end(),
                      [](const auto& a, const auto& b) {
                          return a.first != b.first ? a.first > b.first : a.second < b.second;
                      });
            std::sort(below.begin(), below.end(),
                      [](const auto& a, const auto& b) {
                          return a.first != b.first ? a.first < b.first : a.second < b.second;
                      });
            std::size_t drop_hi = std::min<std::size_t>(cfg.h, above.size());
            std::size_t drop_lo = std::min<std::size_t>(cfg.h, below.size());
            for (std::size_t i = drop_hi; i < above.size(); ++i) {
                retained_sum += above[i].first;
                ++retained_count;
            }
            for (std::size_t i = drop_lo; i < below.size(); ++i) {
                retained_sum += below[i].first;
                ++retained_count;
            }
            if (1.0 / retained_count < cfg.weight_floor) trace.weight_floor_ok = false;
            next[v] = retained_sum / retained_count;
        }

        BenignHull next_hull = benign_hull(next, is_adv);
        if (next_hull.lo < hull.lo - mono_eps || next_hull.hi > hull.hi + mono_eps)
            trace.safety_ok = false;
        if (next_hull.spread() > hull.spread() + mono_eps) trace.spread_monotone = false;

        cur = next;
        hull = next_hull;
        trace.values.push_back(cur);
        trace.spread.push_back(hull.spread());
        ++round;
    }

    trace.rounds_run = round;
    trace.converged = trace.spread.back() <= cfg.tol;
    return trace;
}

bool consensus_reached(const ConsensusTrace& trace, double tol) {
    if (trace.spread.empty()) throw invalid_parameter("empty trace");
    return trace.spread.back() <= tol;
}

}  // namespace riglab
