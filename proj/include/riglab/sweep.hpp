#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "riglab/assignment.hpp"
#include "riglab/graph.hpp"
#include "riglab/props.hpp"
#include "riglab/rng.hpp"

namespace riglab {

enum class ModelKind { binomial, uniform, general, er };

ModelKind model_kind_from_string(const std::string& name);
std::string to_string(ModelKind kind);

/// One concrete graph distribution. The field matching the kind is read:
/// p (binomial), K (uniform), dist (general), p_hat (er).
struct ModelSpec {
    ModelKind kind = ModelKind::binomial;
    int n = 0;
    std::int64_t P = 0;
    double p = 0;
    std::int64_t K = 0;
    double p_hat = 0;
    std::shared_ptr<const SizeDistribution> dist;

    double param_value() const;
    ModelSpec with_param(double value) const;  // swept copy
};

Graph sample_model(const ModelSpec& spec, Seed seed);

enum class PropertyKind { connectivity, min_degree, robustness, robustness_screen };

PropertyKind property_from_string(const std::string& name);
std::string to_string(PropertyKind p);

struct EstimateOptions {
    int robustness_cap = kRobustnessDefaultCap;
    int screen_budget = 10000;
    int threads = 1;
};

struct EstimateResult {
    int successes = 0;
    int trials = 0;
    double wilson_lo = 0;
    double wilson_hi = 0;
    bool switched_to_screen = false;  // robustness beyond the cap fell back

    double empirical() const {
        return trials ? static_cast<double>(successes) / trials : 0.0;
    }
};

/// Independent seeded trials of one property at one parameter point, with a
/// Wilson 95% interval. Trial i uses seed.child(i) regardless of worker
/// count. An exact-robustness request beyond the cap switches to the screen.
EstimateResult estimate_probability(const ModelSpec& model, PropertyKind property,
                                    int k, int trials, Seed seed,
                                    const EstimateOptions& opts = {});

struct SweepConfig {
    ModelSpec model;            // swept parameter field is overwritten per point
    std::string param_name;     // "p", "K" or "p_hat"
    std::vector<double> grid;
    std::vector<int> ks;
    std::vector<PropertyKind> properties;
    int trials = 1000;
    std::uint64_t seed = 0;
    bool reuse_samples = true;  // one graph scored for all (k, property) pairs
    int robustness_cap = kRobustnessDefaultCap;
    int screen_budget = 10000;
    int threads = 1;            // has no effect on the output bytes
};

struct SweepRow {
    std::string model;
    int n = 0;
    std::int64_t P = 0;
    std::string param_name;
    double param_value = 0;
    int k = 1;
    std::string property;
    int trials = 0;
    int successes = 0;
    double empirical_prob = 0;
    double stderr_ = 0;
    double alpha_n = 0;
    double predicted_limit = 0;
};

/// Runs the full grid. Rows come out ordered by (grid point, k, property);
/// the CSV is byte-identical for a fixed (config, seed) at any thread count.
/// Seed derivation: trial t of grid point g starts from
/// Seed{seed}.child(g).child(t); the sampled graph uses its child(0)
/// (children(2 + 2j) when reuse_samples is off, j indexing (k, property)
/// pairs), and the screen for pair j uses child(1 + j) (child(3 + 2j)).
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

extern const char* const kSweepCsvHeader;

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

SweepConfig preset_fig1();
SweepConfig preset_fig2();
/// Exact-robustness sweep at small n (uniform model, n = 12).
SweepConfig preset_small_robust();

/// Parses the documented JSON config (see README).
SweepConfig sweep_config_from_json(const std::string& text);

/// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(int successes, int trials);

}  // namespace riglab
