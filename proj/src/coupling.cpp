#include "riglab/coupling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "riglab/errors.hpp"

namespace riglab {

namespace {

bool edgewise_subgraph(const Graph& lo, const Graph& hi) {
    if (lo.node_count() != hi.node_count()) return false;
    for (auto [i, j] : lo.edge_list())
        if (!hi.has_edge(i, j)) return false;
    return true;
}

CoupledPair finish_pair(const ObjectAssignment& lo_sets, const ObjectAssignment& hi_sets) {
    CoupledPair pair;
    pair.lo = graph_from_assignment(lo_sets);
    pair.hi = graph_from_assignment(hi_sets);
    pair.subgraph_holds = edgewise_subgraph(pair.lo, pair.hi);
    return pair;
}

}  // namespace

CoupledPair nested_uniform_pair(int n, std::int64_t P, std::int64_t K1,
                                std::int64_t K2, Seed seed) {
    if (n < 0) throw invalid_parameter("node count must be >= 0");
    if (K1 < 1 || K1 > K2 || K2 > P)
        throw invalid_parameter("need 1 <= K1 <= K2 <= P");
    Rng rng = seed.rng();
    ObjectAssignment lo, hi;
    lo.pool_size = hi.pool_size = P;
    for (int v = 0; v < n; ++v) {
        std::vector<std::int32_t> big = sample_k_subset(P, K2, rng);
        // Indices into the sorted K2-set select the K1-subset; the marginal
        // of the small set is uniform over K1-subsets of the pool.
        std::vector<std::int32_t> pick = sample_k_subset(K2, K1, rng);
        std::vector<std::int32_t> small;
        small.reserve(static_cast<std::size_t>(K1));
        for (std::int32_t idx : pick) small.push_back(big[static_cast<std::size_t>(idx)]);
        hi.sets.push_back(std::move(big));
        lo.sets.push_back(std::move(small));
    }
    return finish_pair(lo, hi);
}

CoupledPair nested_binomial_pair(int n, std::int64_t P, double p1, double p2,
                                 Seed seed) {
    if (n < 0) throw invalid_parameter("node count must be >= 0");
    if (!(p1 >= 0.0 && p1 <= p2 && p2 <= 1.0))
        throw invalid_parameter("need 0 <= p1 <= p2 <= 1");
    Rng rng = seed.rng();
    const double keep = (p2 > 0.0) ? p1 / p2 : 0.0;
    ObjectAssignment lo, hi;
    lo.pool_size = hi.pool_size = P;
    for (int v = 0; v < n; ++v) {
        std::vector<std::int32_t> big = sample_bernoulli_subset(P, p2, rng);
        std::vector<std::int32_t> small;
        for (std::int32_t o : big)
            if (rng.bernoulli(keep)) small.push_back(o);
        hi.sets.push_back(std::move(big));
        lo.sets.push_back(std::move(small));
    }
    return finish_pair(lo, hi);
}

BracketParams binomial_size_bracket(std::int64_t n, std::int64_t P, double p) {
    if (n < 2) throw invalid_parameter("n must be >= 2");
    if (P < 1) throw invalid_parameter("P must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameter("p must be in [0, 1]");
    const double pP = p * static_cast<double>(P);
    const double ln_n = std::log(static_cast<double>(n));
    const double half_width = std::sqrt(3.0 * (pP + ln_n) * ln_n);
    BracketParams b;
    b.K_minus = std::max<std::int64_t>(
        0, static_cast<std::int64_t>(std::floor(pP - half_width)));
    b.K_plus = std::min<std::int64_t>(
        P, static_cast<std::int64_t>(std::ceil(pP + half_width)));
    return b;
}

bool binomial_bracket_holds(std::int64_t n, std::int64_t P, double p, Seed seed) {
    BracketParams b = binomial_size_bracket(n, P, p);
    Rng rng = seed.rng();
    for (std::int64_t v = 0; v < n; ++v) {
        std::int64_t size = sample_binomial_count(P, p, rng);
        if (size < b.K_minus || size > b.K_plus) return false;
    }
    return true;
}

EpsilonBracket size_bracket_epsilon(std::int64_t n, double mean, double variance) {
    if (n < 3) throw invalid_parameter("n must be >= 3");
    if (!(mean > 0)) throw invalid_parameter("mean must be positive");
    if (!(variance >= 0)) throw invalid_parameter("variance must be >= 0");
    const double ln_n = std::log(static_cast<double>(n));
    EpsilonBracket e;
    e.eps = std::pow(static_cast<double>(n) * variance / (mean * mean), 0.25) /
            std::sqrt(ln_n);
    e.lo = (1.0 - e.eps) * mean;
    e.hi = (1.0 + e.eps) * mean;
    e.in_regime = e.eps < 1.0 / ln_n;
    return e;
}

EpsilonBracket size_bracket_epsilon(std::int64_t n, const SizeDistribution& dist) {
    return size_bracket_epsilon(n, dist.mean(), dist.variance());
}

ErMinorant er_minorant_p_hat(std::int64_t n, std::int64_t P, double p) {
    if (n < 2) throw invalid_parameter("n must be >= 2");
    if (P < 1) throw invalid_parameter("P must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameter("p must be in [0, 1]");
    const double ln_n = std::log(static_cast<double>(n));
    const double p2P = p * p * static_cast<double>(P);
    ErMinorant r;
    r.p_ratio = p * static_cast<double>(n) * ln_n;
    r.p2P_ratio = p2P * ln_n;
    double factor = 1.0 - static_cast<double>(n) * p + 2.0 * p - p2P / 2.0;
    if (factor < 0.0) {
        r.clamped = true;
        factor = 0.0;
    }
    r.p_hat = p2P * factor;
    return r;
}

DominanceReport dominance_test(const GraphSampler& lo, const GraphSampler& hi,
                               const GraphPredicate& property, int trials,
                               Seed seed, int threads) {
    if (trials < 1) throw invalid_parameter("trials must be >= 1");
    threads = std::clamp(threads, 1, trials);

    auto run_side = [&](const GraphSampler& sampler, Seed side_seed) {
        std::atomic<int> next{0};
        std::atomic<int> successes{0};
        auto worker = [&]() {
            for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1))
                if (property(sampler(side_seed.child(static_cast<std::uint64_t>(i)))))
                    successes.fetch_add(1);
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        return successes.load();
    };

    DominanceReport r;
    r.trials = trials;
    r.successes_lo = run_side(lo, seed.child(0));
    r.successes_hi = run_side(hi, seed.child(1));
    r.p_lo = static_cast<double>(r.successes_lo) / trials;
    r.p_hi = static_cast<double>(r.successes_hi) / trials;
    double var = r.p_lo * (1.0 - r.p_lo) / trials + r.p_hi * (1.0 - r.p_hi) / trials;
    double diff = r.p_lo - r.p_hi;
    if (var > 0)
        r.z = diff / std::sqrt(var);
    else
        r.z = (diff == 0) ? 0.0 : (diff > 0 ? 1e9 : -1e9);
    return r;
}

}  // namespace riglab
