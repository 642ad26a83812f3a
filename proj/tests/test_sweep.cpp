#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "riglab/errors.hpp"
#include "riglab/sweep.hpp"

using namespace riglab;

namespace {

ModelSpec uniform_spec(int n, std::int64_t P, std::int64_t K) {
    ModelSpec m;
    m.kind = ModelKind::uniform;
    m.n = n;
    m.P = P;
    m.K = K;
    return m;
}

ModelSpec binomial_spec(int n, std::int64_t P, double p) {
    ModelSpec m;
    m.kind = ModelKind::binomial;
    m.n = n;
    m.P = P;
    m.p = p;
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("sweep");

TEST_CASE("a complete-graph model always passes k-connectivity") {
    auto r = estimate_probability(binomial_spec(5, 10, 1.0), PropertyKind::connectivity, 2,
                                  200, Seed{1});
    CHECK(r.successes == r.trials);
    CHECK(r.wilson_hi == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tiny uniform model connectivity probability matches enumeration") {
    // n=3, P=2, K=1: connected exactly when all three nodes share one object
    const int trials = 100000;
    auto r = estimate_probability(uniform_spec(3, 2, 1), PropertyKind::connectivity, 1,
                                  trials, Seed{2});
    double expected = 0.25;
    double freq = r.empirical();
    CHECK(std::abs(freq - expected) < 3.0 * std::sqrt(expected * (1 - expected) / trials));
    CHECK(r.wilson_lo < freq);
    CHECK(r.wilson_hi > freq);
}

TEST_CASE("single-node graphs are not 1-connected by the degenerate convention") {
    auto r = estimate_probability(uniform_spec(1, 5, 2), PropertyKind::connectivity, 1, 50,
                                  Seed{3});
    CHECK(r.successes == 0);
}

TEST_CASE("estimate rejects zero trials") {
    CHECK_THROWS_AS(estimate_probability(uniform_spec(3, 2, 1), PropertyKind::connectivity,
                                         1, 0, Seed{0}),
                    invalid_parameter);
}

TEST_CASE("exact robustness beyond the cap switches to the screen with a flag") {
    auto r = estimate_probability(uniform_spec(20, 40, 8), PropertyKind::robustness, 2, 20,
                                  Seed{4});
    CHECK(r.switched_to_screen);
}

TEST_CASE("run_sweep emits one row per grid point, k and property") {
    SweepConfig cfg;
    cfg.model = uniform_spec(8, 12, 0);
    cfg.param_name = "K";
    cfg.grid = {3};
    cfg.ks = {1, 2};
    cfg.properties = {PropertyKind::connectivity, PropertyKind::min_degree,
                      PropertyKind::robustness};
    cfg.trials = 50;
    cfg.seed = 7;
    auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].k == 1);
    CHECK(rows[0].property == "connectivity");
    CHECK(rows[5].k == 2);
    CHECK(rows[5].property == "robustness");
    for (const auto& row : rows) {
        CHECK(row.trials == 50);
        CHECK(row.empirical_prob ==
              doctest::Approx(static_cast<double>(row.successes) / 50).epsilon(1e-12));
    }
}

TEST_CASE("per-trial reuse makes counts respect the property hierarchy") {
    SweepConfig cfg;
    cfg.model = uniform_spec(10, 15, 0);
    cfg.param_name = "K";
    cfg.grid = {2, 3, 4};
    cfg.ks = {1, 2};
    cfg.properties = {PropertyKind::robustness, PropertyKind::connectivity,
                      PropertyKind::min_degree};
    cfg.trials = 120;
    cfg.seed = 11;
    cfg.reuse_samples = true;
    auto rows = run_sweep(cfg);
    for (std::size_t i = 0; i < rows.size(); i += 3) {
        int robust = rows[i].successes;
        int connected = rows[i + 1].successes;
        int mindeg = rows[i + 2].successes;
        CHECK(robust <= connected);
        CHECK(connected <= mindeg);
    }
}

TEST_CASE("sweep output is byte-identical across runs and worker counts") {
    SweepConfig cfg;
    cfg.model = binomial_spec(40, 60, 0);
    cfg.param_name = "p";
    cfg.grid = {0.02, 0.06, 0.12};
    cfg.ks = {1, 2};
    cfg.properties = {PropertyKind::connectivity, PropertyKind::min_degree};
    cfg.trials = 200;
    cfg.seed = 99;
    cfg.threads = 1;
    auto csv1 = sweep_to_csv(run_sweep(cfg));
    auto csv1b = sweep_to_csv(run_sweep(cfg));
    cfg.threads = 3;
    auto csv3 = sweep_to_csv(run_sweep(cfg));
    cfg.threads = 16;
    auto csv16 = sweep_to_csv(run_sweep(cfg));
    CHECK(csv1 == csv1b);
    CHECK(csv1 == csv3);
    CHECK(csv1 == csv16);
}

TEST_CASE("reuse flag changes the sampling plan but stays deterministic") {
    SweepConfig cfg;
    cfg.model = binomial_spec(20, 40, 0);
    cfg.param_name = "p";
    cfg.grid = {0.05};
    cfg.ks = {1};
    cfg.properties = {PropertyKind::connectivity, PropertyKind::min_degree};
    cfg.trials = 100;
    cfg.seed = 5;
    cfg.reuse_samples = false;
    auto csv_a = sweep_to_csv(run_sweep(cfg));
    auto csv_b = sweep_to_csv(run_sweep(cfg));
    CHECK(csv_a == csv_b);
}

TEST_CASE("exact robustness in a sweep beyond the cap is refused with options") {
    SweepConfig cfg;
    cfg.model = uniform_spec(50, 100, 0);
    cfg.param_name = "K";
    cfg.grid = {5};
    cfg.ks = {2};
    cfg.properties = {PropertyKind::robustness};
    cfg.trials = 10;
    CHECK_THROWS_AS(run_sweep(cfg), capacity_error);
    try {
        run_sweep(cfg);
    } catch (const capacity_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("robustness_screen") != std::string::npos);
    }
}

TEST_CASE("config validation") {
    SweepConfig cfg;
    cfg.model = uniform_spec(8, 12, 0);
    cfg.param_name = "K";
    cfg.ks = {1};
    cfg.properties = {PropertyKind::connectivity};
    cfg.trials = 10;
    CHECK_THROWS_AS(run_sweep(cfg), invalid_parameter);  // empty grid
    cfg.grid = {3};
    cfg.trials = 0;
    CHECK_THROWS_AS(run_sweep(cfg), invalid_parameter);
    cfg.trials = 10;
    cfg.properties.clear();
    CHECK_THROWS_AS(run_sweep(cfg), invalid_parameter);
}

TEST_CASE("csv header is the pinned schema") {
    CHECK(std::string(kSweepCsvHeader) ==
          "model,n,P,param_name,param_value,k,property,trials,successes,"
          "empirical_prob,stderr,alpha_n,predicted_limit");
    auto rows = run_sweep([] {
        SweepConfig cfg;
        cfg.model = uniform_spec(5, 8, 0);
        cfg.param_name = "K";
        cfg.grid = {2};
        cfg.ks = {1};
        cfg.properties = {PropertyKind::connectivity};
        cfg.trials = 5;
        return cfg;
    }());
    auto csv = sweep_to_csv(rows);
    CHECK(csv.substr(0, csv.find('\n')) == kSweepCsvHeader);
}

TEST_CASE("fig presets pin the landmark grid points and trial count") {
    auto fig1 = preset_fig1();
    CHECK(fig1.trials == 1000);
    CHECK(std::count(fig1.grid.begin(), fig1.grid.end(), 4.4e-4) == 1);
    CHECK(std::count(fig1.grid.begin(), fig1.grid.end(), 4.9e-4) == 1);
    CHECK(fig1.grid.front() == 2e-4);
    CHECK(fig1.grid.back() == 8e-4);
    CHECK(fig1.ks == std::vector<int>{1, 2});

    auto fig2 = preset_fig2();
    CHECK(fig2.trials == 1000);
    CHECK(std::count(fig2.grid.begin(), fig2.grid.end(), 10.0) == 1);
    CHECK(std::count(fig2.grid.begin(), fig2.grid.end(), 11.0) == 1);
    CHECK(fig2.ks == std::vector<int>{2, 3});

    auto small = preset_small_robust();
    CHECK(small.model.n <= 14);
    CHECK(std::find(small.properties.begin(), small.properties.end(),
                    PropertyKind::robustness) != small.properties.end());
}

TEST_CASE("small robust preset runs exactly and keeps the hierarchy") {
    auto cfg = preset_small_robust();
    cfg.trials = 30;
    cfg.grid = {2, 5, 8};
    auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 3 * cfg.ks.size() * cfg.properties.size());
    for (std::size_t i = 0; i < rows.size(); i += 3) {
        // properties ordered connectivity, min_degree, robustness in preset
        CHECK(rows[i + 2].successes <= rows[i].successes);
        CHECK(rows[i].successes <= rows[i + 1].successes);
    }
}

TEST_CASE("json config parsing") {
    auto cfg = sweep_config_from_json(R"({
        "model": "binomial", "n": 100, "P": 500, "param": "p",
        "grid": {"from": 0.01, "to": 0.05, "count": 5},
        "k": [1, 2], "properties": ["connectivity", "min_degree"],
        "trials": 77, "seed": 13, "reuse_samples": false
    })");
    CHECK(cfg.model.kind == ModelKind::binomial);
    CHECK(cfg.model.n == 100);
    CHECK(cfg.grid.size() == 5);
    CHECK(cfg.grid[0] == doctest::Approx(0.01));
    CHECK(cfg.grid[4] == doctest::Approx(0.05));
    CHECK(cfg.trials == 77);
    CHECK_FALSE(cfg.reuse_samples);

    auto cfg2 = sweep_config_from_json(R"({
        "model": "uniform", "n": 10, "P": 20, "param": "K",
        "grid": [2, 4], "k": [1], "properties": ["robustness"]
    })");
    CHECK(cfg2.grid == std::vector<double>{2, 4});
    CHECK(cfg2.properties == std::vector<PropertyKind>{PropertyKind::robustness});
}

TEST_CASE("er sweeps track the limit probability already at n = 60") {
    // the er model converges to exp(-exp(-alpha)/(k-1)!) much faster than the
    // intersection models; a coarse grid should sit within a few percent
    SweepConfig cfg;
    cfg.model.kind = ModelKind::er;
    cfg.model.n = 60;
    cfg.param_name = "p_hat";
    cfg.grid = {0.06, 0.10, 0.14};
    cfg.ks = {1};
    cfg.properties = {PropertyKind::connectivity};
    cfg.trials = 300;
    cfg.seed = 9;
    for (const auto& row : run_sweep(cfg))
        CHECK(std::abs(row.empirical_prob - row.predicted_limit) < 0.08);
}

TEST_CASE("wilson interval sanity") {
    auto [lo0, hi0] = wilson_interval(0, 50);
    CHECK(lo0 == 0.0);
    CHECK(hi0 > 0.0);
    auto [lof, hif] = wilson_interval(50, 50);
    CHECK(hif == 1.0);
    CHECK(lof < 1.0);
    auto [lo, hi] = wilson_interval(25, 50);
    CHECK(lo < 0.5);
    CHECK(hi > 0.5);
}

TEST_SUITE_END();
