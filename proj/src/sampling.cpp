#include "riglab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "riglab/errors.hpp"

namespace riglab {

std::vector<std::int32_t> sample_k_subset(std::int64_t P, std::int64_t K, Rng& rng) {
    if (K < 0 || K > P) throw invalid_parameter("subset size out of range");
    std::vector<std::int32_t> out;
    out.reserve(static_cast<std::size_t>(K));
    // Floyd's algorithm. Membership via linear scan for small K, hash set
    // beyond that.
    if (K <= 64) {
        for (std::int64_t j = P - K; j < P; ++j) {
            auto t = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(j + 1)));
            if (std::find(out.begin(), out.end(), t) != out.end())
                t = static_cast<std::int32_t>(j);
            out.push_back(t);
        }
    } else {
        std::unordered_set<std::int32_t> seen;
        seen.reserve(static_cast<std::size_t>(K) * 2);
        for (std::int64_t j = P - K; j < P; ++j) {
            auto t = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(j + 1)));
            if (!seen.insert(t).second) {
                t = static_cast<std::int32_t>(j);
                seen.insert(t);
            }
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int32_t> sample_bernoulli_subset(std::int64_t P, double p, Rng& rng) {
    std::vector<std::int32_t> out;
    if (p <= 0.0 || P <= 0) return out;
    if (p >= 1.0) {
        out.resize(static_cast<std::size_t>(P));
        for (std::int64_t i = 0; i < P; ++i) out[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
        return out;
    }
    const double denom = std::log1p(-p);
    std::int64_t j = -1;
    while (true) {
        double u = 1.0 - rng.next_double();  // (0, 1]
        double skip = std::floor(std::log(u) / denom);
        if (skip > static_cast<double>(P)) break;
        j += 1 + static_cast<std::int64_t>(skip);
        if (j >= P) break;
        out.push_back(static_cast<std::int32_t>(j));
    }
    return out;
}

std::int64_t sample_binomial_count(std::int64_t P, double p, Rng& rng) {
    if (p <= 0.0 || P <= 0) return 0;
    if (p >= 1.0) return P;
    const double denom = std::log1p(-p);
    std::int64_t j = -1, count = 0;
    while (true) {
        double u = 1.0 - rng.next_double();
        double skip = std::floor(std::log(u) / denom);
        if (skip > static_cast<double>(P)) break;
        j += 1 + static_cast<std::int64_t>(skip);
        if (j >= P) break;
        ++count;
    }
    return count;
}

Graph graph_from_assignment(const ObjectAssignment& assignment, int bit_row_cap) {
    assignment.validate();
    const int n = assignment.node_count();

    // Counting sort of (object, holder) incidences, then one clique per object.
    std::int64_t total = 0;
    for (const auto& s : assignment.sets) total += static_cast<std::int64_t>(s.size());

    std::vector<std::int32_t> objs, holders;
    objs.reserve(static_cast<std::size_t>(total));
    holders.reserve(static_cast<std::size_t>(total));
    for (int v = 0; v < n; ++v)
        for (std::int32_t o : assignment.sets[static_cast<std::size_t>(v)]) {
            objs.push_back(o);
            holders.push_back(v);
        }

    std::vector<std::size_t> order(objs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return objs[a] < objs[b]; });

    std::vector<std::pair<int, int>> edges;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && objs[order[j]] == objs[order[i]]) ++j;
        for (std::size_t a = i; a < j; ++a)
            for (std::size_t b = a + 1; b < j; ++b)
                edges.emplace_back(holders[order[a]], holders[order[b]]);
        i = j;
    }
    return Graph::from_edges(n, edges, bit_row_cap);
}

SampledGraph sample_uniform_rig(int n, std::int64_t P, std::int64_t K, Seed seed) {
    if (n < 0) throw invalid_parameter("node count must be >= 0");
    if (P < 1) throw invalid_parameter("pool size must be >= 1");
    if (K < 1 || K > P) throw invalid_parameter("set size must satisfy 1 <= K <= P");
    Rng rng = seed.rng();
    ObjectAssignment a;
    a.pool_size = P;
    a.sets.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) a.sets.push_back(sample_k_subset(P, K, rng));
    Graph g = graph_from_assignment(a);
    return {std::move(g), std::move(a)};
}

SampledGraph sample_binomial_rig(int n, std::int64_t P, double p, Seed seed) {
    if (n < 0) throw invalid_parameter("node count must be >= 0");
    if (P < 1) throw invalid_parameter("pool size must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameter("p must be in [0, 1]");
    Rng rng = seed.rng();
    ObjectAssignment a;
    a.pool_size = P;
    a.sets.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) a.sets.push_back(sample_bernoulli_subset(P, p, rng));
    Graph g = graph_from_assignment(a);
    return {std::move(g), std::move(a)};
}

SampledGraph sample_general_rig(int n, const SizeDistribution& dist, Seed seed) {
    if (n < 0) throw invalid_parameter("node count must be >= 0");
    Rng rng = seed.rng();
    ObjectAssignment a;
    a.pool_size = dist.pool_size();
    a.sets.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::int64_t size = dist.sample(rng);
        a.sets.push_back(sample_k_subset(dist.pool_size(), size, rng));
    }
    Graph g = graph_from_assignment(a);
    return {std::move(g), std::move(a)};
}

Graph sample_er(int n, double p_hat, Seed seed) {
    if (n < 0) throw invalid_parameter("node count must be >= 0");
    if (!(p_hat >= 0.0 && p_hat <= 1.0)) throw invalid_parameter("p must be in [0, 1]");
    Rng rng = seed.rng();
    const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    // Walk pair indices with geometric gaps; pair index -> (i, j) decoded on hit.
    if (p_hat >= 1.0) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    } else if (p_hat > 0.0) {
        const double denom = std::log1p(-p_hat);
        std::int64_t idx = -1;
        while (true) {
            double u = 1.0 - rng.next_double();
            double skip = std::floor(std::log(u) / denom);
            if (skip > static_cast<double>(total)) break;
            idx += 1 + static_cast<std::int64_t>(skip);
            if (idx >= total) break;
            // Decode: idx counts pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
            std::int64_t rem = idx;
            int row = 0;
            while (rem >= n - 1 - row) {
                rem -= n - 1 - row;
                ++row;
            }
            edges.emplace_back(row, row + 1 + static_cast<int>(rem));
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace riglab
