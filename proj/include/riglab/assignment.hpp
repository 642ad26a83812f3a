#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "riglab/rng.hpp"

namespace riglab {

/// Per-node object sets over the pool {0, ..., P-1}: the generative witness
/// for an intersection graph. Sets are sorted and duplicate-free.
struct ObjectAssignment {
    std::int64_t pool_size = 0;  // P
    std::vector<std::vector<std::int32_t>> sets;

    int node_count() const { return static_cast<int>(sets.size()); }

    /// Throws invalid_parameter if any set element is out of range,
    /// unsorted, or duplicated.
    void validate() const;
};

/// Probability mass function over set sizes {1, ..., P} with cached moments.
class SizeDistribution {
  public:
    /// pmf[i] is the probability of size i+1. Entries must be >= 0 and sum
    /// to 1 within 1e-9, else invalid_distribution.
    SizeDistribution(std::int64_t P, std::vector<double> pmf);

    static SizeDistribution point_mass(std::int64_t P, std::int64_t K);
    static SizeDistribution uniform_range(std::int64_t P, std::int64_t lo,
                                          std::int64_t hi);

    std::int64_t pool_size() const { return P_; }
    double mean() const { return mean_; }
    double variance() const { return variance_; }
    std::span<const double> pmf() const { return pmf_; }

    /// True when all mass sits on one size.
    bool is_point_mass() const { return point_ > 0; }

    /// Draws a size in {1, ..., P} by inverse transform.
    std::int64_t sample(Rng& rng) const;

  private:
    std::int64_t P_ = 0;
    std::vector<double> pmf_;
    std::vector<double> cdf_;
    double mean_ = 0;
    double variance_ = 0;
    std::int64_t point_ = 0;  // the size when a point mass, else 0
};

}  // namespace riglab
