#pragma once

#include <cstdint>
#include <random>

namespace bivsd {

// Deterministic substream keyed by (seed, stream). Replicate r always sees
// the same draws no matter which worker executes it, so parallel schedules
// cannot change results. Bounded draws and uniforms are generated from the
// raw 64-bit output by hand; the std distribution objects are
// implementation-defined and would break cross-toolchain reproducibility.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform on [0, n), unbiased via rejection sampling. n must be >= 1.
  std::uint64_t bounded(std::uint64_t n);

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double next_uniform();

 private:
  std::mt19937_64 engine_;
};

// Stateless key derivation (splitmix64 rounds) for per-trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Standard normal cdf, Zelen & Severo polynomial (Abramowitz & Stegun
// 26.2.17); absolute error below 7.5e-8.
double normal_cdf(double z);

// Standard normal quantile, Acklam's rational approximation; relative error
// below 1.2e-9. p must lie in (0, 1).
double normal_quantile(double p);

}  // namespace bivsd
