#include "riglab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "riglab/asymptotics.hpp"
#include "riglab/errors.hpp"
#include "riglab/sampling.hpp"

namespace riglab {

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "binomial") return ModelKind::binomial;
    if (name == "uniform") return ModelKind::uniform;
    if (name == "general") return ModelKind::general;
    if (name == "er") return ModelKind::er;
    throw invalid_parameter("unknown model kind: " + name);
}

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::binomial: return "binomial";
        case ModelKind::uniform: return "uniform";
        case ModelKind::general: return "general";
        case ModelKind::er: return "er";
    }
    return "?";
}

double ModelSpec::param_value() const {
    switch (kind) {
        case ModelKind::binomial: return p;
        case ModelKind::uniform: return static_cast<double>(K);
        case ModelKind::general: return dist ? dist->mean() : 0.0;
        case ModelKind::er: return p_hat;
    }
    return 0.0;
}

ModelSpec ModelSpec::with_param(double value) const {
    ModelSpec out = *this;
    switch (kind) {
        case ModelKind::binomial: out.p = value; break;
        case ModelKind::uniform: out.K = static_cast<std::int64_t>(std::llround(value)); break;
        case ModelKind::general:
            throw invalid_parameter("general model has no scalar swept parameter");
        case ModelKind::er: out.p_hat = value; break;
    }
    return out;
}

Graph sample_model(const ModelSpec& spec, Seed seed) {
    switch (spec.kind) {
        case ModelKind::binomial:
            return sample_binomial_rig(spec.n, spec.P, spec.p, seed).graph;
        case ModelKind::uniform:
            return sample_uniform_rig(spec.n, spec.P, spec.K, seed).graph;
        case ModelKind::general:
            if (!spec.dist) throw invalid_parameter("general model needs a size distribution");
            return sample_general_rig(spec.n, *spec.dist, seed).graph;
        case ModelKind::er:
            return sample_er(spec.n, spec.p_hat, seed);
    }
    throw invalid_parameter("bad model kind");
}

PropertyKind property_from_string(const std::string& name) {
    if (name == "connectivity") return PropertyKind::connectivity;
    if (name == "min_degree") return PropertyKind::min_degree;
    if (name == "robustness") return PropertyKind::robustness;
    if (name == "robustness_screen") return PropertyKind::robustness_screen;
    throw invalid_parameter("unknown property: " + name);
}

std::string to_string(PropertyKind p) {
    switch (p) {
        case PropertyKind::connectivity: return "connectivity";
        case PropertyKind::min_degree: return "min_degree";
        case PropertyKind::robustness: return "robustness";
        case PropertyKind::robustness_screen: return "robustness_screen";
    }
    return "?";
}

std::pair<double, double> wilson_interval(int successes, int trials) {
    if (trials <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 97.5% normal quantile
    const double nt = trials;
    const double phat = static_cast<double>(successes) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double center = phat + z2 / (2.0 * nt);
    const double margin = z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt));
    double lo = std::max(0.0, (center - margin) / denom);
    double hi = std::min(1.0, (center + margin) / denom);
    if (successes == 0) lo = 0.0;
    if (successes == trials) hi = 1.0;
    return {lo, hi};
}

namespace {

// Success of one property on one graph. The screen's "success" means "not
// certified false": an upper-bound proxy for robustness.
bool property_success(const Graph& g, PropertyKind property, int k,
                      const EstimateOptions& opts, Seed screen_seed,
                      bool* switched_to_screen) {
    switch (property) {
        case PropertyKind::connectivity:
            return is_k_connected(g, k);
        case PropertyKind::min_degree:
            return min_degree(g) >= k;
        case PropertyKind::robustness:
            if (g.node_count() > opts.robustness_cap) {
                if (switched_to_screen) *switched_to_screen = true;
                return !robustness_screen(g, k, screen_seed, opts.screen_budget)
                            .certified_false();
            }
            return is_k_robust(g, k, opts.robustness_cap).holds;
        case PropertyKind::robustness_screen:
            return !robustness_screen(g, k, screen_seed, opts.screen_budget)
                        .certified_false();
    }
    return false;
}

// Fixed task partitioning: workers grab trial indices from a counter; every
// per-trial result lands in its own slot, so worker count never changes the
// aggregate.
template <typename Fn>
void parallel_trials(int trials, int threads, Fn&& per_trial) {
    threads = std::clamp(threads, 1, std::max(1, trials));
    if (threads == 1) {
        for (int i = 0; i < trials; ++i) per_trial(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) per_trial(i);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

EstimateResult estimate_probability(const ModelSpec& model, PropertyKind property,
                                    int k, int trials, Seed seed,
                                    const EstimateOptions& opts) {
    if (trials < 1) throw invalid_parameter("trials must be >= 1");
    if (k < 1) throw invalid_parameter("k must be >= 1");
    std::vector<std::uint8_t> hits(static_cast<std::size_t>(trials), 0);
    std::atomic<bool> switched{false};
    parallel_trials(trials, opts.threads, [&](int i) {
        Seed trial = seed.child(static_cast<std::uint64_t>(i));
        Graph g = sample_model(model, trial.child(0));
        bool sw = false;
        hits[static_cast<std::size_t>(i)] =
            property_success(g, property, k, opts, trial.child(1), &sw);
        if (sw) switched.store(true);
    });
    EstimateResult r;
    r.trials = trials;
    for (std::uint8_t h : hits) r.successes += h;
    auto [lo, hi] = wilson_interval(r.successes, trials);
    r.wilson_lo = lo;
    r.wilson_hi = hi;
    r.switched_to_screen = switched.load();
    return r;
}

const char* const kSweepCsvHeader =
    "model,n,P,param_name,param_value,k,property,trials,successes,"
    "empirical_prob,stderr,alpha_n,predicted_limit";

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    if (cfg.grid.empty()) throw invalid_parameter("sweep grid must be nonempty");
    if (cfg.trials < 1) throw invalid_parameter("trials must be >= 1");
    if (cfg.ks.empty()) throw invalid_parameter("k list must be nonempty");
    if (cfg.properties.empty()) throw invalid_parameter("property list must be nonempty");
    for (int k : cfg.ks)
        if (k < 1) throw invalid_parameter("k must be >= 1");
    const bool wants_exact_robustness =
        std::find(cfg.properties.begin(), cfg.properties.end(),
                  PropertyKind::robustness) != cfg.properties.end();
    if (wants_exact_robustness && cfg.model.n > cfg.robustness_cap)
        throw capacity_error(
            "exact robustness is infeasible at n = " + std::to_string(cfg.model.n) +
            " (cap " + std::to_string(cfg.robustness_cap) +
            "); use property robustness_screen, raise robustness_cap, or shrink n");

    const int points = static_cast<int>(cfg.grid.size());
    const int n_ks = static_cast<int>(cfg.ks.size());
    const int n_props = static_cast<int>(cfg.properties.size());
    const int pairs = n_ks * n_props;

    EstimateOptions opts;
    opts.robustness_cap = cfg.robustness_cap;
    opts.screen_budget = cfg.screen_budget;

    // success[(point * trials + trial) * pairs + pair]
    std::vector<std::uint8_t> success(
        static_cast<std::size_t>(points) * cfg.trials * pairs, 0);

    const Seed root{cfg.seed};
    for (int pt = 0; pt < points; ++pt) {
        const ModelSpec model = cfg.model.with_param(cfg.grid[static_cast<std::size_t>(pt)]);
        const Seed point_seed = root.child(static_cast<std::uint64_t>(pt));
        parallel_trials(cfg.trials, cfg.threads, [&](int trial) {
            const Seed trial_seed = point_seed.child(static_cast<std::uint64_t>(trial));
            const std::size_t base =
                (static_cast<std::size_t>(pt) * cfg.trials + trial) * pairs;
            if (cfg.reuse_samples) {
                Graph g = sample_model(model, trial_seed.child(0));
                for (int j = 0; j < pairs; ++j) {
                    int k = cfg.ks[static_cast<std::size_t>(j / n_props)];
                    PropertyKind prop = cfg.properties[static_cast<std::size_t>(j % n_props)];
                    success[base + j] = property_success(
                        g, prop, k, opts, trial_seed.child(1 + static_cast<std::uint64_t>(j)),
                        nullptr);
                }
            } else {
                for (int j = 0; j < pairs; ++j) {
                    int k = cfg.ks[static_cast<std::size_t>(j / n_props)];
                    PropertyKind prop = cfg.properties[static_cast<std::size_t>(j % n_props)];
                    Graph g = sample_model(
                        model, trial_seed.child(2 + 2 * static_cast<std::uint64_t>(j)));
                    success[base + j] = property_success(
                        g, prop, k, opts,
                        trial_seed.child(3 + 2 * static_cast<std::uint64_t>(j)), nullptr);
                }
            }
        });
    }

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(points) * pairs);
    for (int pt = 0; pt < points; ++pt) {
        const double param = cfg.grid[static_cast<std::size_t>(pt)];
        for (int ki = 0; ki < n_ks; ++ki)
            for (int pi = 0; pi < n_props; ++pi) {
                const int j = ki * n_props + pi;
                int successes = 0;
                for (int trial = 0; trial < cfg.trials; ++trial)
                    successes += success[(static_cast<std::size_t>(pt) * cfg.trials + trial) *
                                             pairs +
                                         j];
                SweepRow row;
                row.model = to_string(cfg.model.kind);
                row.n = cfg.model.n;
                row.P = cfg.model.P;
                row.param_name = cfg.param_name;
                row.param_value = param;
                row.k = cfg.ks[static_cast<std::size_t>(ki)];
                row.property = to_string(cfg.properties[static_cast<std::size_t>(pi)]);
                row.trials = cfg.trials;
                row.successes = successes;
                row.empirical_prob = static_cast<double>(successes) / cfg.trials;
                row.stderr_ = std::sqrt(row.empirical_prob * (1.0 - row.empirical_prob) /
                                        cfg.trials);
                double alpha = std::numeric_limits<double>::quiet_NaN();
                double predicted = std::numeric_limits<double>::quiet_NaN();
                if (cfg.model.n >= 3) {
                    switch (cfg.model.kind) {
                        case ModelKind::binomial: {
                            auto rep = alpha_from_scaling_binomial(cfg.model.n, cfg.model.P,
                                                                   param, row.k);
                            alpha = rep.alpha_n;
                            predicted = rep.predicted_limit;
                            break;
                        }
                        case ModelKind::uniform: {
                            auto rep = alpha_from_scaling_uniform(
                                cfg.model.n, cfg.model.P,
                                static_cast<std::int64_t>(std::llround(param)), row.k);
                            alpha = rep.alpha_n;
                            predicted = rep.predicted_limit;
                            break;
                        }
                        case ModelKind::er: {
                            double cn = critical_value(cfg.model.n, row.k);
                            alpha = cfg.model.n * (param - cn);
                            predicted = limit_prob(alpha, row.k);
                            break;
                        }
                        case ModelKind::general:
                            break;
                    }
                }
                row.alpha_n = alpha;
                row.predicted_limit = predicted;
                rows.push_back(std::move(row));
            }
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += r.model;
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.P);
        out += ',';
        out += r.param_name;
        out += ',';
        out += format_double(r.param_value);
        out += ',';
        out += std::to_string(r.k);
        out += ',';
        out += r.property;
        out += ',';
        out += std::to_string(r.trials);
        out += ',';
        out += std::to_string(r.successes);
        out += ',';
        out += format_double(r.empirical_prob);
        out += ',';
        out += format_double(r.stderr_);
        out += ',';
        out += format_double(r.alpha_n);
        out += ',';
        out += format_double(r.predicted_limit);
        out += '\n';
    }
    return out;
}

SweepConfig preset_fig1() {
    SweepConfig cfg;
    cfg.model.kind = ModelKind::binomial;
    cfg.model.n = 2000;
    cfg.model.P = 20000;
    cfg.param_name = "p";
    cfg.grid = {2.0e-4, 2.5e-4, 3.0e-4, 3.5e-4, 4.0e-4, 4.4e-4,
                4.9e-4, 5.5e-4, 6.0e-4, 7.0e-4, 8.0e-4};
    cfg.ks = {1, 2};
    cfg.properties = {PropertyKind::connectivity, PropertyKind::min_degree,
                      PropertyKind::robustness_screen};
    cfg.trials = 1000;
    cfg.seed = 1;
    cfg.screen_budget = 2000;
    return cfg;
}

SweepConfig preset_fig2() {
    SweepConfig cfg;
    cfg.model.kind = ModelKind::uniform;
    cfg.model.n = 2000;
    cfg.model.P = 20000;
    cfg.param_name = "K";
    for (int K = 4; K <= 18; ++K) cfg.grid.push_back(K);
    cfg.ks = {2, 3};
    cfg.properties = {PropertyKind::connectivity, PropertyKind::min_degree,
                      PropertyKind::robustness_screen};
    cfg.trials = 1000;
    cfg.seed = 2;
    cfg.screen_budget = 2000;
    return cfg;
}

SweepConfig preset_small_robust() {
    SweepConfig cfg;
    cfg.model.kind = ModelKind::uniform;
    cfg.model.n = 12;
    cfg.model.P = 30;
    cfg.param_name = "K";
    for (int K = 1; K <= 10; ++K) cfg.grid.push_back(K);
    cfg.ks = {1, 2};
    cfg.properties = {PropertyKind::connectivity, PropertyKind::min_degree,
                      PropertyKind::robustness};
    cfg.trials = 500;
    cfg.seed = 3;
    return cfg;
}

SweepConfig sweep_config_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SweepConfig cfg;
    cfg.model.kind = model_kind_from_string(j.at("model").get<std::string>());
    cfg.model.n = j.at("n").get<int>();
    if (j.contains("P")) cfg.model.P = j.at("P").get<std::int64_t>();
    cfg.param_name = j.at("param").get<std::string>();
    if (j.at("grid").is_array()) {
        cfg.grid = j.at("grid").get<std::vector<double>>();
    } else {
        auto spec = j.at("grid");
        double from = spec.at("from").get<double>();
        double to = spec.at("to").get<double>();
        int count = spec.at("count").get<int>();
        if (count < 1) throw invalid_parameter("grid count must be >= 1");
        for (int i = 0; i < count; ++i)
            cfg.grid.push_back(count == 1 ? from
                                          : from + (to - from) * i / (count - 1));
    }
    cfg.ks = j.at("k").get<std::vector<int>>();
    for (const auto& name : j.at("properties"))
        cfg.properties.push_back(property_from_string(name.get<std::string>()));
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("reuse_samples")) cfg.reuse_samples = j.at("reuse_samples").get<bool>();
    if (j.contains("robustness_cap")) cfg.robustness_cap = j.at("robustness_cap").get<int>();
    if (j.contains("screen_budget")) cfg.screen_budget = j.at("screen_budget").get<int>();
    return cfg;
}

}  // namespace riglab
