#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "riglab/asymptotics.hpp"
#include "riglab/errors.hpp"
#include "riglab/graph_io.hpp"
#include "riglab/sampling.hpp"

using namespace riglab;

namespace {

std::vector<std::pair<int, int>> edges_of(const Graph& g) { return g.edge_list(); }

bool same_graph(const Graph& a, const Graph& b) {
    return a.node_count() == b.node_count() && edges_of(a) == edges_of(b);
}

double three_sigma(double p, int trials) {
    return 3.0 * std::sqrt(p * (1.0 - p) / trials);
}

// Builds the graph the slow way: one pairwise set-intersection test per pair.
Graph pairwise_intersection_graph(const ObjectAssignment& a) {
    const int n = a.node_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& si = a.sets[i];
            const auto& sj = a.sets[j];
            bool hit = false;
            for (std::size_t x = 0, y = 0; x < si.size() && y < sj.size();) {
                if (si[x] == sj[y]) { hit = true; break; }
                if (si[x] < sj[y]) ++x;
                else ++y;
            }
            if (hit) edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_SUITE_BEGIN("sampling");

TEST_CASE("uniform model with K = P is complete") {
    for (std::uint64_t s : {0ull, 5ull, 99ull}) {
        auto [g, a] = sample_uniform_rig(4, 6, 6, Seed{s});
        CHECK(g.is_complete());
        CHECK(g.node_count() == 4);
        for (const auto& set : a.sets) CHECK(set.size() == 6);
    }
}

TEST_CASE("single node graphs have no edges") {
    auto [g, a] = sample_uniform_rig(1, 5, 2, Seed{3});
    CHECK(g.node_count() == 1);
    CHECK(g.edge_count() == 0);
    auto [g2, a2] = sample_general_rig(1, SizeDistribution::uniform_range(5, 1, 3), Seed{4});
    CHECK(g2.edge_count() == 0);
}

TEST_CASE("uniform sampler parameter validation") {
    CHECK_THROWS_AS(sample_uniform_rig(2, 5, 0, Seed{0}), invalid_parameter);
    CHECK_THROWS_AS(sample_uniform_rig(2, 5, 6, Seed{0}), invalid_parameter);
    CHECK_THROWS_AS(sample_uniform_rig(2, 0, 1, Seed{0}), invalid_parameter);
}

TEST_CASE("uniform edge frequency matches the enumeration oracle") {
    const double expected = oracles::enum_uniform_edge_prob(5, 2);
    CHECK(expected == doctest::Approx(0.7).epsilon(1e-12));
    const int trials = 100000;
    int hits = 0;
    Seed base{2024};
    for (int i = 0; i < trials; ++i) {
        auto [g, a] = sample_uniform_rig(2, 5, 2, base.child(i));
        hits += g.edge_count() > 0;
    }
    double freq = static_cast<double>(hits) / trials;
    CHECK(std::abs(freq - expected) < three_sigma(expected, trials));
}

TEST_CASE("binomial model degenerate parameters") {
    auto [empty, ea] = sample_binomial_rig(5, 10, 0.0, Seed{1});
    CHECK(empty.edge_count() == 0);
    auto [complete, ca] = sample_binomial_rig(5, 10, 1.0, Seed{1});
    CHECK(complete.is_complete());
    for (const auto& set : ca.sets) CHECK(set.size() == 10);
    CHECK_THROWS_AS(sample_binomial_rig(2, 5, -0.1, Seed{0}), invalid_parameter);
    CHECK_THROWS_AS(sample_binomial_rig(2, 5, 1.1, Seed{0}), invalid_parameter);
}

TEST_CASE("binomial edge frequency matches the enumeration oracle") {
    const double expected = oracles::enum_binomial_edge_prob(2, 0.5);
    CHECK(expected == doctest::Approx(0.4375).epsilon(1e-9));
    const int trials = 100000;
    int hits = 0;
    Seed base{77};
    for (int i = 0; i < trials; ++i) {
        auto [g, a] = sample_binomial_rig(2, 2, 0.5, base.child(i));
        hits += g.edge_count() > 0;
    }
    double freq = static_cast<double>(hits) / trials;
    CHECK(std::abs(freq - expected) < three_sigma(expected, trials));
}

TEST_CASE("binomial set sizes pass a chi-squared test against Binomial(10, 0.3)") {
    const int P = 10, trials = 100000;
    const double p = 0.3;
    std::vector<double> observed(P + 1, 0.0), expected(P + 1, 0.0);
    Rng rng = Seed{4242}.rng();
    for (int i = 0; i < trials; ++i)
        observed[sample_bernoulli_subset(P, p, rng).size()] += 1.0;
    for (int s = 0; s <= P; ++s)
        expected[s] = trials * static_cast<double>(exact_binomial_u64(P, s)) *
                      std::pow(p, s) * std::pow(1 - p, P - s);
    auto [stat, df] = oracles::chi2_pooled(observed, expected);
    CHECK(stat < oracles::chi2_crit_999(df));
}

TEST_CASE("uniform sampler draws every 2-subset of a 5-pool uniformly") {
    const int trials = 100000;
    std::map<std::vector<std::int32_t>, int> counts;
    Rng rng = Seed{555}.rng();
    for (int i = 0; i < trials; ++i) ++counts[sample_k_subset(5, 2, rng)];
    CHECK(counts.size() == 10);
    for (const auto& [set, count] : counts) {
        double freq = static_cast<double>(count) / trials;
        CHECK(std::abs(freq - 0.1) < three_sigma(0.1, trials));
    }
}

TEST_CASE("general model with a point mass reproduces the uniform model") {
    auto dist = SizeDistribution::point_mass(7, 3);
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto [gd, ad] = sample_general_rig(5, dist, Seed{s});
        auto [gu, au] = sample_uniform_rig(5, 7, 3, Seed{s});
        CHECK(same_graph(gd, gu));
    }
}

TEST_CASE("general edge frequency matches the enumeration oracle") {
    auto dist = SizeDistribution::uniform_range(2, 1, 2);
    const double expected = oracles::enum_general_edge_prob(dist);
    CHECK(expected == doctest::Approx(0.875).epsilon(1e-12));
    const int trials = 100000;
    int hits = 0;
    Seed base{31337};
    for (int i = 0; i < trials; ++i) {
        auto [g, a] = sample_general_rig(2, dist, base.child(i));
        hits += g.edge_count() > 0;
    }
    double freq = static_cast<double>(hits) / trials;
    CHECK(std::abs(freq - expected) < three_sigma(expected, trials));
}

TEST_CASE("size distribution validation") {
    CHECK_THROWS_AS(SizeDistribution(3, {0.5, 0.4, 0.2}), invalid_distribution);
    CHECK_THROWS_AS(SizeDistribution(3, {0.5, 0.6, -0.1}), invalid_distribution);
    CHECK_THROWS_AS(SizeDistribution(3, {0.5, 0.5}), invalid_distribution);
    auto d = SizeDistribution(3, {0.2, 0.3, 0.5});
    CHECK(d.mean() == doctest::Approx(0.2 + 0.6 + 1.5).epsilon(1e-12));
    double ex2 = 0.2 * 1 + 0.3 * 4 + 0.5 * 9;
    CHECK(d.variance() == doctest::Approx(ex2 - d.mean() * d.mean()).epsilon(1e-9));
}

TEST_CASE("graph_from_assignment basic shapes") {
    ObjectAssignment a;
    a.pool_size = 3;
    a.sets = {{0, 1}, {1, 2}};
    auto g = graph_from_assignment(a);
    CHECK(edges_of(g) == std::vector<std::pair<int, int>>{{0, 1}});

    a.sets = {{0}, {1}};
    CHECK(graph_from_assignment(a).edge_count() == 0);

    a.sets = {{0}, {0}, {1}};
    auto g3 = graph_from_assignment(a);
    CHECK(edges_of(g3) == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(g3.degree(2) == 0);
}

TEST_CASE("samplers return the graph of their own assignment") {
    Seed base{909};
    for (int i = 0; i < 30; ++i) {
        auto [gu, au] = sample_uniform_rig(8, 12, 3, base.child(i));
        CHECK(same_graph(gu, graph_from_assignment(au)));
        auto [gb, ab] = sample_binomial_rig(8, 12, 0.2, base.child(1000 + i));
        CHECK(same_graph(gb, graph_from_assignment(ab)));
        auto dist = SizeDistribution::uniform_range(12, 1, 4);
        auto [gg, ag] = sample_general_rig(8, dist, base.child(2000 + i));
        CHECK(same_graph(gg, graph_from_assignment(ag)));
    }
}

TEST_CASE("inverted index agrees with pairwise intersection on random instances") {
    Seed base{60601};
    Rng param_rng = base.rng();
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + static_cast<int>(param_rng.next_below(49));
        std::int64_t P = 1 + static_cast<std::int64_t>(param_rng.next_below(30));
        double p = param_rng.next_double();
        auto [g, a] = sample_binomial_rig(n, P, p, base.child(i));
        CHECK(same_graph(g, pairwise_intersection_graph(a)));
    }
}

TEST_CASE("erdos-renyi endpoints and frequency") {
    CHECK(sample_er(4, 1.0, Seed{0}).is_complete());
    CHECK(sample_er(4, 0.0, Seed{0}).edge_count() == 0);
    CHECK_THROWS_AS(sample_er(4, 1.5, Seed{0}), invalid_parameter);
    const int trials = 100000;
    int hits = 0;
    Seed base{14};
    for (int i = 0; i < trials; ++i) hits += sample_er(2, 0.3, base.child(i)).edge_count() > 0;
    double freq = static_cast<double>(hits) / trials;
    CHECK(std::abs(freq - 0.3) < three_sigma(0.3, trials));
}

TEST_CASE("er sampler edge count distribution is sane on larger graphs") {
    // mean degree should land near p * (n - 1)
    const int n = 200, trials = 200;
    const double p = 0.05;
    double total_edges = 0;
    Seed base{888};
    for (int i = 0; i < trials; ++i) total_edges += sample_er(n, p, base.child(i)).edge_count();
    double mean_edges = total_edges / trials;
    double expected = p * oracles::pair_count(n);
    CHECK(std::abs(mean_edges - expected) < 5.0 * std::sqrt(expected / trials));
}

TEST_CASE("edge list round trip") {
    auto [g, a] = sample_binomial_rig(20, 30, 0.1, Seed{5});
    std::ostringstream os;
    write_edge_list(os, g);
    std::istringstream is(os.str());
    auto g2 = read_edge_list(is);
    CHECK(same_graph(g, g2));
}

TEST_CASE("assignment json round trip") {
    auto [g, a] = sample_uniform_rig(6, 9, 2, Seed{11});
    auto a2 = assignment_from_json(assignment_to_json(a));
    CHECK(a2.pool_size == a.pool_size);
    CHECK(a2.sets == a.sets);
}

TEST_SUITE_END();
