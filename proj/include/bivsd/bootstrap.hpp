#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bivsd/rng.hpp"
#include "bivsd/statistics.hpp"

namespace bivsd {

// Concatenation of the two samples: a's m points first, then b's n points.
struct PooledSample {
  std::vector<Point> points;
  std::size_t m = 0;
  std::size_t n = 0;
  RescaleTransform rescale;

  std::size_t total() const { return points.size(); }
};

PooledSample pool_samples(const BivariateSample& a, const BivariateSample& b);

struct BootstrapConfig {
  std::uint32_t replicates = 999;
  std::uint64_t seed = 0;
  double beta = 0.05;
  unsigned threads = 0;  // 0: BIVSD_THREADS env var, then hardware
};

struct BootstrapDistribution {
  StatisticKind kind;
  std::vector<double> values;  // one per replicate, in replicate order
  StatisticValue observed;
  double critical_value = 0.0;
  double p_value = 1.0;
  std::uint64_t seed = 0;
};

// Splits N = m + n drawn pooled indices back into two samples: the first m
// draws form a*, the last n form b*.
std::pair<BivariateSample, BivariateSample> split_resample(
    const PooledSample& pooled, std::span<const std::uint64_t> indices);

// Draws N indices uniformly with replacement from the pooled sample and
// splits them.
std::pair<BivariateSample, BivariateSample> resample_pooled(
    const PooledSample& pooled, RngStream& stream);

// Smallest replicate value t with #{values > t}/B <= beta.
double bootstrap_critical_value(std::span<const double> replicate_values,
                                double beta);

// (1 + #{values >= observed}) / (B + 1); always positive.
double bootstrap_p_value(std::span<const double> replicate_values,
                         double observed);

// Pooled two-sample bootstrap of the chosen statistic: replicate r draws its
// own substream keyed (seed, r), resamples the pool, and recomputes the
// statistic on the pooled grid (a superset of every resample's own grid, so
// the supremum is unchanged).
BootstrapDistribution bootstrap_statistic(StatisticKind kind,
                                          const BivariateSample& a,
                                          const BivariateSample& b,
                                          const BootstrapConfig& cfg);

enum class Decision { reject, fail_to_reject };

// One-tail rule: reject iff the observed statistic strictly exceeds the
// bootstrap critical value at level beta.
Decision decide(const BootstrapDistribution& dist, double beta);

}  // namespace bivsd
