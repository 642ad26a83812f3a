#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "riglab/errors.hpp"
#include "riglab/props.hpp"
#include "riglab/sampling.hpp"

using namespace riglab;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

// Two triangles sharing node 2.
Graph bowtie() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph with_extra_edge(const Graph& g, int u, int v) {
    auto edges = g.edge_list();
    edges.emplace_back(u, v);
    return Graph::from_edges(g.node_count(), edges);
}

}  // namespace

TEST_SUITE_BEGIN("props");

TEST_CASE("min_degree basics") {
    CHECK(min_degree(Graph::complete(4)) == 3);
    CHECK(min_degree(path3()) == 1);
    CHECK(min_degree(Graph::from_edges(3, {{0, 1}})) == 0);
    CHECK_THROWS_AS(min_degree(Graph::from_edges(0, {})), empty_graph_error);
}

TEST_CASE("vertex connectivity landmarks") {
    CHECK(vertex_connectivity(Graph::complete(5)) == 4);
    CHECK(vertex_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 0);
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(vertex_connectivity(c5) == 2);
    CHECK(oracles::bf_vertex_connectivity(c5) == 2);
    CHECK(vertex_connectivity(bowtie()) == 1);
    CHECK(vertex_connectivity(Graph::from_edges(1, {})) == 0);
}

TEST_CASE("is_k_connected landmarks") {
    CHECK(is_k_connected(Graph::complete(4), 3));
    CHECK_FALSE(is_k_connected(path3(), 2));
    CHECK_FALSE(is_k_connected(bowtie(), 2));
    CHECK(is_k_connected(bowtie(), 1));
    CHECK_THROWS_AS(is_k_connected(path3(), 0), invalid_parameter);
    // one-node graph: k-connected for k = 0 only
    Graph k1 = Graph::from_edges(1, {});
    for (int k = 1; k <= 3; ++k) CHECK_FALSE(is_k_connected(k1, k));
}

TEST_CASE("is_k_connected matches the deletion oracle on all graphs up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t masks = 1ull << oracles::pair_count(n);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            for (int k = 1; k <= 4; ++k)
                CHECK(is_k_connected(g, k) == oracles::bf_k_connected(g, k));
            CHECK(vertex_connectivity(g) == oracles::bf_vertex_connectivity(g));
        }
    }
}

TEST_CASE("is_k_connected matches the oracle on random graphs with 6 to 9 nodes") {
    Seed base{2717};
    Rng param_rng = base.rng();
    for (int i = 0; i < 300; ++i) {
        int n = 6 + static_cast<int>(param_rng.next_below(4));
        double p = param_rng.next_double();
        Graph g = sample_er(n, p, base.child(i));
        for (int k = 1; k <= 6; ++k)
            CHECK(is_k_connected(g, k) == oracles::bf_k_connected(g, k));
        CHECK(vertex_connectivity(g) == oracles::bf_vertex_connectivity(g));
    }
}

TEST_CASE("robustness landmarks confirmed by the ternary oracle") {
    Graph k4 = Graph::complete(4);
    CHECK(is_k_robust(k4, 2).holds);
    CHECK(oracles::ternary_robust(k4, 2));

    Graph edge2 = Graph::from_edges(2, {{0, 1}});
    CHECK(is_k_robust(edge2, 1).holds);
    CHECK(oracles::ternary_robust(edge2, 1));

    auto verdict = is_k_robust(bowtie(), 2);
    CHECK_FALSE(verdict.holds);
    CHECK_FALSE(oracles::ternary_robust(bowtie(), 2));
    CHECK(verdict.witness_a == std::vector<int>{0, 1});
    CHECK(verdict.witness_b == std::vector<int>{3, 4});
    CHECK(verify_robustness_violation(bowtie(), 2, verdict.witness_a, verdict.witness_b));
}

TEST_CASE("robustness values") {
    CHECK(robustness(Graph::from_edges(2, {})) == 0);
    CHECK(robustness(Graph::complete(6)) == 3);
    CHECK(oracles::ternary_robust(Graph::complete(6), 3));
    CHECK_FALSE(oracles::ternary_robust(Graph::complete(6), 4));
    CHECK(robustness(Graph::from_edges(1, {})) == 0);
}

TEST_CASE("robustness respects the exhaustive cap") {
    Graph big = Graph::complete(17);
    CHECK_THROWS_AS(is_k_robust(big, 2), capacity_error);
    CHECK_THROWS_AS(robustness(big), capacity_error);
    CHECK(is_k_robust(big, 2, 17).holds);  // raised cap works
}

TEST_CASE("is_k_robust agrees with the ternary oracle on random graphs") {
    Seed base{40912};
    Rng param_rng = base.rng();
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(param_rng.next_below(7));
        double p = param_rng.next_double();
        Graph g = sample_er(n, p, base.child(i));
        for (int k = 1; k <= 4; ++k) {
            auto verdict = is_k_robust(g, k);
            CHECK(verdict.holds == oracles::ternary_robust(g, k));
            if (!verdict.holds)
                CHECK(verify_robustness_violation(g, k, verdict.witness_a,
                                                  verdict.witness_b));
        }
    }
}

TEST_CASE("hierarchy holds exhaustively on all graphs up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t masks = 1ull << oracles::pair_count(n);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            for (int k = 1; k <= 4; ++k) {
                bool robust = is_k_robust(g, k).holds;
                bool connected = is_k_connected(g, k);
                if (robust) CHECK(connected);
                if (connected) CHECK(min_degree(g) >= k);
            }
        }
    }
}

TEST_CASE("one-robustness is one-connectivity on all graphs up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t masks = 1ull << oracles::pair_count(n);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            Graph g = oracles::graph_from_mask(n, mask);
            CHECK(is_k_robust(g, 1).holds == is_k_connected(g, 1));
        }
    }
}

TEST_CASE("adding an edge never destroys a monotone property") {
    Seed base{515151};
    Rng param_rng = base.rng();
    int tested = 0;
    for (int i = 0; tested < 500; ++i) {
        int n = 4 + static_cast<int>(param_rng.next_below(7));
        double p = param_rng.next_double();
        Graph g = sample_er(n, p, base.child(i));
        if (g.is_complete()) continue;
        int u = -1, v = -1;
        for (int a = 0; a < n && u < 0; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!g.has_edge(a, b)) {
                    u = a;
                    v = b;
                    break;
                }
        Graph bigger = with_extra_edge(g, u, v);
        for (int k = 1; k <= 4; ++k) {
            if (is_k_connected(g, k)) CHECK(is_k_connected(bigger, k));
            if (is_k_robust(g, k).holds) CHECK(is_k_robust(bigger, k).holds);
        }
        ++tested;
    }
}

TEST_CASE("connectivity verdict witnesses check out") {
    auto v1 = connectivity_verdict(bowtie(), 2);
    CHECK_FALSE(v1.holds);
    REQUIRE(v1.separator.size() == 1);
    CHECK(v1.separator[0] == 2);

    auto v2 = connectivity_verdict(Graph::from_edges(4, {{0, 1}, {2, 3}}), 1);
    CHECK_FALSE(v2.holds);
    CHECK(v2.has_pair);

    // deleting the separator disconnects, on random failing graphs
    Seed base{717};
    Rng param_rng = base.rng();
    for (int i = 0; i < 100; ++i) {
        int n = 5 + static_cast<int>(param_rng.next_below(6));
        Graph g = sample_er(n, 0.4, base.child(i));
        for (int k = 1; k <= 3; ++k) {
            auto verdict = connectivity_verdict(g, k);
            CHECK(verdict.holds == is_k_connected(g, k));
            if (verdict.holds || g.node_count() < k + 1) continue;
            if (verdict.has_pair) {
                CHECK_FALSE(is_connected(g));
            } else {
                REQUIRE(static_cast<int>(verdict.separator.size()) < k);
                std::vector<char> removed(n, 0);
                for (int s : verdict.separator) removed[s] = 1;
                std::vector<std::pair<int, int>> kept;
                std::vector<int> remap(n, -1);
                int m = 0;
                for (int v = 0; v < n; ++v)
                    if (!removed[v]) remap[v] = m++;
                for (auto [a, b] : g.edge_list())
                    if (!removed[a] && !removed[b]) kept.emplace_back(remap[a], remap[b]);
                Graph reduced = Graph::from_edges(m, kept);
                CHECK_FALSE(is_connected(reduced));
            }
        }
    }
}

TEST_CASE("robustness screen basics") {
    auto r1 = robustness_screen(bowtie(), 2);
    CHECK(r1.certified_false());
    CHECK(r1.reason == "not_k_connected");

    auto r2 = robustness_screen(Graph::complete(4), 2);
    CHECK(r2.outcome == ScreenOutcome::undecided);

    auto r3 = robustness_screen(Graph::from_edges(3, {{0, 1}}), 1);
    CHECK(r3.certified_false());
    CHECK(r3.reason == "min_degree");
}

TEST_CASE("robustness screen never certifies a robust graph") {
    Seed base{93939};
    Rng param_rng = base.rng();
    for (int i = 0; i < 200; ++i) {
        int n = 3 + static_cast<int>(param_rng.next_below(8));
        double p = param_rng.next_double();
        Graph g = sample_er(n, p, base.child(i));
        for (int k = 1; k <= 3; ++k) {
            auto screen = robustness_screen(g, k, base.child(10000 + i), 500);
            bool robust = is_k_robust(g, k).holds;
            if (screen.certified_false()) CHECK_FALSE(robust);
            if (screen.reason == "witness_pair")
                CHECK(verify_robustness_violation(g, k, screen.witness_a, screen.witness_b));
        }
    }
}

TEST_SUITE_END();
