#include "riglab/assignment.hpp"

#include <algorithm>
#include <cmath>

#include "riglab/errors.hpp"

namespace riglab {

void ObjectAssignment::validate() const {
    if (pool_size < 1) throw invalid_parameter("pool size must be >= 1");
    for (const auto& s : sets) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= pool_size)
                throw invalid_parameter("object id out of pool range");
            if (i > 0 && s[i] <= s[i - 1])
                throw invalid_parameter("object set must be strictly increasing");
        }
    }
}

SizeDistribution::SizeDistribution(std::int64_t P, std::vector<double> pmf)
    : P_(P), pmf_(std::move(pmf)) {
    if (P_ < 1) throw invalid_distribution("pool size must be >= 1");
    if (pmf_.size() != static_cast<std::size_t>(P_))
        throw invalid_distribution("pmf must have one entry per size 1..P");
    double sum = 0;
    for (double q : pmf_) {
        if (!(q >= 0)) throw invalid_distribution("pmf entries must be >= 0");
        sum += q;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw invalid_distribution("pmf must sum to 1 within 1e-9");

    cdf_.resize(pmf_.size());
    double acc = 0, m1 = 0, m2 = 0;
    int support = 0;
    for (std::size_t i = 0; i < pmf_.size(); ++i) {
        acc += pmf_[i];
        cdf_[i] = acc;
        double x = static_cast<double>(i + 1);
        m1 += pmf_[i] * x;
        m2 += pmf_[i] * x * x;
        if (pmf_[i] > 0) {
            ++support;
            point_ = (support == 1) ? static_cast<std::int64_t>(i + 1) : 0;
        }
    }
    cdf_.back() = 1.0;
    mean_ = m1;
    variance_ = std::max(0.0, m2 - m1 * m1);
}

SizeDistribution SizeDistribution::point_mass(std::int64_t P, std::int64_t K) {
    if (K < 1 || K > P) throw invalid_distribution("point mass size out of {1..P}");
    std::vector<double> pmf(static_cast<std::size_t>(P), 0.0);
    pmf[static_cast<std::size_t>(K - 1)] = 1.0;
    return SizeDistribution(P, std::move(pmf));
}

SizeDistribution SizeDistribution::uniform_range(std::int64_t P, std::int64_t lo,
                                                 std::int64_t hi) {
    if (lo < 1 || hi > P || lo > hi)
        throw invalid_distribution("uniform range must satisfy 1 <= lo <= hi <= P");
    std::vector<double> pmf(static_cast<std::size_t>(P), 0.0);
    double w = 1.0 / static_cast<double>(hi - lo + 1);
    for (std::int64_t s = lo; s <= hi; ++s) pmf[static_cast<std::size_t>(s - 1)] = w;
    return SizeDistribution(P, std::move(pmf));
}

std::int64_t SizeDistribution::sample(Rng& rng) const {
    if (point_ > 0) return point_;
    double u = rng.next_double();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<std::int64_t>(it - cdf_.begin()) + 1;
}

}  // namespace riglab
