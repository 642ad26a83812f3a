#include "riglab/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "riglab/errors.hpp"

namespace riglab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_loglog(std::int64_t n) {
    if (n < 3) throw invalid_parameter("n must be >= 3 for scaling computations");
}

ScalingReport make_report(std::string model, std::int64_t n, std::int64_t P,
                          double param, int k, double lhs) {
    ScalingReport r;
    r.model = std::move(model);
    r.n = n;
    r.P = P;
    r.param = param;
    r.k = k;
    r.lhs = lhs;
    r.c_n = critical_value(n, k);
    r.alpha_n = static_cast<double>(n) * lhs - static_cast<double>(n) * r.c_n;
    r.predicted_limit = limit_prob(r.alpha_n, k);
    return r;
}

}  // namespace

double critical_value(std::int64_t n, int k) {
    require_loglog(n);
    if (k < 1) throw invalid_parameter("k must be >= 1");
    double ln_n = std::log(static_cast<double>(n));
    return (ln_n + (k - 1) * std::log(ln_n)) / static_cast<double>(n);
}

ScalingReport alpha_from_scaling_binomial(std::int64_t n, std::int64_t P, double p, int k) {
    if (P < 1) throw invalid_parameter("P must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameter("p must be in [0, 1]");
    return make_report("binomial", n, P, p, k, p * p * static_cast<double>(P));
}

ScalingReport alpha_from_scaling_uniform(std::int64_t n, std::int64_t P, std::int64_t K, int k) {
    if (P < 1) throw invalid_parameter("P must be >= 1");
    if (K < 1 || K > P) throw invalid_parameter("K must satisfy 1 <= K <= P");
    double kd = static_cast<double>(K);
    return make_report("uniform", n, P, kd, k, kd * kd / static_cast<double>(P));
}

ScalingReport alpha_from_scaling_general(std::int64_t n, std::int64_t P, double mean, int k) {
    if (P < 1) throw invalid_parameter("P must be >= 1");
    if (!(mean > 0)) throw invalid_parameter("mean set size must be positive");
    return make_report("general", n, P, mean, k, mean * mean / static_cast<double>(P));
}

ScalingReport alpha_from_scaling_general(std::int64_t n, const SizeDistribution& dist, int k) {
    return alpha_from_scaling_general(n, dist.pool_size(), dist.mean(), k);
}

double limit_prob(double alpha_star, int k) {
    if (k < 1) throw invalid_parameter("k must be >= 1");
    if (alpha_star == -kInf) return 0.0;
    if (alpha_star == kInf) return 1.0;
    return std::exp(-std::exp(-alpha_star - std::lgamma(static_cast<double>(k))));
}

double critical_p_binomial(std::int64_t n, std::int64_t P, int k) {
    if (P < 1) throw invalid_parameter("P must be >= 1");
    return std::sqrt(critical_value(n, k) / static_cast<double>(P));
}

std::int64_t critical_k_uniform(std::int64_t n, std::int64_t P, int k) {
    if (P < 1) throw invalid_parameter("P must be >= 1");
    const double target = critical_value(n, k);
    std::int64_t best = 1;
    double best_err = kInf;
    for (std::int64_t K = 1; K <= P; ++K) {
        double v = static_cast<double>(K) * static_cast<double>(K) / static_cast<double>(P);
        double err = std::abs(v - target);
        if (err < best_err) {
            best_err = err;
            best = K;
        }
        if (v > target && err > best_err) break;  // error only grows past here
    }
    return best;
}

double edge_prob_uniform_exact(std::int64_t P, std::int64_t K) {
    if (P < 1) throw invalid_parameter("P must be >= 1");
    if (K < 1 || K > P) throw invalid_parameter("K must satisfy 1 <= K <= P");
    if (2 * K > P) return 1.0;
    // C(P-K, K)/C(P, K) as a stable product of ratios in (0, 1].
    double no_share = 1.0;
    for (std::int64_t i = 0; i < K; ++i)
        no_share *= static_cast<double>(P - K - i) / static_cast<double>(P - i);
    return 1.0 - no_share;
}

double edge_prob_binomial_exact(std::int64_t P, double p) {
    if (P < 1) throw invalid_parameter("P must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameter("p must be in [0, 1]");
    // 1 - (1 - p^2)^P, in log space to stay accurate for small p.
    return -std::expm1(static_cast<double>(P) * std::log1p(-p * p));
}

double edge_prob_general_exact(const SizeDistribution& dist) {
    const std::int64_t P = dist.pool_size();
    auto pmf = dist.pmf();
    double edge = 0;
    for (std::int64_t a = 1; a <= P; ++a) {
        double pa = pmf[static_cast<std::size_t>(a - 1)];
        if (pa == 0) continue;
        for (std::int64_t b = 1; b <= P; ++b) {
            double pb = pmf[static_cast<std::size_t>(b - 1)];
            if (pb == 0) continue;
            double no_share = (a + b > P)
                                  ? 0.0
                                  : std::exp(log_choose(P - a, b) - log_choose(P, b));
            edge += pa * pb * (1.0 - no_share);
        }
    }
    return edge;
}

AltRegimeReport gamma_alt_regime(std::int64_t n, std::int64_t P, double p) {
    if (n < 2) throw invalid_parameter("n must be >= 2");
    if (P < 1) throw invalid_parameter("P must be >= 1");
    AltRegimeReport r;
    double ln_n = std::log(static_cast<double>(n));
    r.gamma_n = p * static_cast<double>(P) - ln_n;
    r.tau = std::log(static_cast<double>(P)) / ln_n;
    return r;
}

double joint_degree_prediction(std::int64_t n, double q, int m, int h) {
    if (m < 1) throw invalid_parameter("m must be >= 1");
    if (h < 0) throw invalid_parameter("h must be >= 0");
    if (!(q > 0.0 && q < 1.0)) throw invalid_parameter("q must be in (0, 1)");
    double nq = static_cast<double>(n) * q;
    double log_val = static_cast<double>(h) * m * std::log(nq) - m * nq -
                     m * std::lgamma(static_cast<double>(h) + 1.0);
    return std::exp(log_val);
}

std::vector<CurvePoint> predicted_curve(ScalingModel model, std::int64_t n,
                                        std::int64_t P, int k,
                                        const std::vector<double>& grid) {
    std::vector<CurvePoint> out;
    out.reserve(grid.size());
    for (double param : grid) {
        ScalingReport r;
        switch (model) {
            case ScalingModel::binomial:
                r = alpha_from_scaling_binomial(n, P, param, k);
                break;
            case ScalingModel::uniform:
                r = alpha_from_scaling_uniform(n, P, static_cast<std::int64_t>(param), k);
                break;
            case ScalingModel::general:
                r = alpha_from_scaling_general(n, P, param, k);
                break;
        }
        out.push_back({param, r.alpha_n, r.predicted_limit});
    }
    return out;
}

double log_choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return -kInf;
    if (k == 0 || k == n) return 0.0;
    return std::lgamma(static_cast<double>(n + 1)) -
           std::lgamma(static_cast<double>(k + 1)) -
           std::lgamma(static_cast<double>(n - k + 1));
}

std::uint64_t exact_binomial_u64(int n, int k) {
    if (n < 0 || n > 64) throw invalid_parameter("exact binomial needs 0 <= n <= 64");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // Multiplicative formula; intermediate products fit in unsigned 128 bits.
    __uint128_t num = 1;
    for (int i = 1; i <= k; ++i) {
        num = num * static_cast<unsigned>(n - k + i);
        num /= static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(num);
}

}  // namespace riglab
