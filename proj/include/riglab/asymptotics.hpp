#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riglab/assignment.hpp"

namespace riglab {

/// Critical value (ln n + (k-1) ln ln n) / n. Requires n >= 3.
double critical_value(std::int64_t n, int k);

/// Deviation of a model's scaling quantity from the critical value, and the
/// limit probability predicted at that deviation.
struct ScalingReport {
    std::string model;  // "binomial" | "uniform" | "general"
    std::int64_t n = 0;
    std::int64_t P = 0;
    double param = 0;  // p, K, or E[X]
    int k = 1;
    double lhs = 0;     // p^2 P, K^2/P, or E[X]^2/P
    double c_n = 0;     // critical value
    double alpha_n = 0; // n*lhs - (ln n + (k-1) ln ln n)
    double predicted_limit = 0;
};

ScalingReport alpha_from_scaling_binomial(std::int64_t n, std::int64_t P, double p, int k);
ScalingReport alpha_from_scaling_uniform(std::int64_t n, std::int64_t P, std::int64_t K, int k);
ScalingReport alpha_from_scaling_general(std::int64_t n, std::int64_t P, double mean, int k);
ScalingReport alpha_from_scaling_general(std::int64_t n, const SizeDistribution& dist, int k);

/// Limit probability of k-connectivity at deviation alpha_star:
/// 0 at -inf, 1 at +inf, else exp(-exp(-alpha_star)/(k-1)!).
double limit_prob(double alpha_star, int k);

/// p such that p^2 P hits the critical value exactly.
double critical_p_binomial(std::int64_t n, std::int64_t P, int k);

/// Integer K minimizing |K^2/P - critical value|; ties break to smaller K.
std::int64_t critical_k_uniform(std::int64_t n, std::int64_t P, int k);

/// Exact probability that two independent uniform K-subsets of a P-pool
/// intersect: 1 - C(P-K, K)/C(P, K).
double edge_prob_uniform_exact(std::int64_t P, std::int64_t K);

/// Exact edge probability in the binomial model: 1 - (1 - p^2)^P.
double edge_prob_binomial_exact(std::int64_t P, double p);

/// Exact edge probability under a size distribution (mixture over the
/// uniform-conditional no-share probabilities).
double edge_prob_general_exact(const SizeDistribution& dist);

/// The alternate scaling seen at small pools: gamma = pP - ln n, plus the
/// pool exponent tau = ln P / ln n as a regime diagnostic.
struct AltRegimeReport {
    double gamma_n = 0;
    double tau = 0;
};

AltRegimeReport gamma_alt_regime(std::int64_t n, std::int64_t P, double p);

/// Asymptotic probability that m fixed nodes all have degree h when the
/// edge probability is q: (h!)^-m (nq)^(hm) e^(-mnq).
double joint_degree_prediction(std::int64_t n, double q, int m, int h);

struct CurvePoint {
    double param = 0;
    double alpha_n = 0;
    double predicted_limit = 0;
};

enum class ScalingModel { binomial, uniform, general };

std::vector<CurvePoint> predicted_curve(ScalingModel model, std::int64_t n,
                                        std::int64_t P, int k,
                                        const std::vector<double>& grid);

/// ln C(n, k) via lgamma; -inf when the coefficient is zero.
double log_choose(std::int64_t n, std::int64_t k);

/// Exact binomial coefficient for n <= 64 (fits in uint64).
std::uint64_t exact_binomial_u64(int n, int k);

}  // namespace riglab
