#include "bivsd/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace bivsd {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  const std::uint64_t mixed = splitmix64(seed) ^ splitmix64(stream ^ 0xD1342543DE82EF95ull);
  return splitmix64(mixed);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  const std::uint64_t key = derive_seed(seed, stream);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(key),
                    static_cast<std::uint32_t>(key >> 32)};
  engine_.seed(seq);
}

std::uint64_t RngStream::next_u64() { return engine_(); }

std::uint64_t RngStream::bounded(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bounded draw needs n >= 1");
  // Reject below 2^64 mod n so every residue is equally likely.
  const std::uint64_t threshold = (-n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

double RngStream::next_uniform() {
  // 53-bit mantissa, offset half a step: never exactly 0 or 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double normal_cdf(double z) {
  // Zelen & Severo polynomial, Abramowitz & Stegun eq. 26.2.17.
  // |error| < 7.5e-8 over the whole real line.
  constexpr double inv_sqrt_2pi = 0.3989422804014326779;
  constexpr double p = 0.2316419;
  constexpr double b1 = 0.319381530;
  constexpr double b2 = -0.356563782;
  constexpr double b3 = 1.781477937;
  constexpr double b4 = -1.821255978;
  constexpr double b5 = 1.330274429;

  const double za = std::fabs(z);
  const double t = 1.0 / (1.0 + p * za);
  const double pdf = inv_sqrt_2pi * std::exp(-0.5 * za * za);
  const double poly = t * (b1 + t * (b2 + t * (b3 + t * (b4 + t * b5))));
  const double upper_tail = pdf * poly;
  return z >= 0.0 ? 1.0 - upper_tail : upper_tail;
}

double normal_quantile(double p) {
  // Peter Acklam's rational approximation for the inverse normal cdf;
  // relative error below 1.15e-9 on (0, 1).
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("normal_quantile needs p in (0,1)");

  constexpr double a1 = -3.969683028665376e+01;
  constexpr double a2 = 2.209460984245205e+02;
  constexpr double a3 = -2.759285104469687e+02;
  constexpr double a4 = 1.383577518672690e+02;
  constexpr double a5 = -3.066479806614716e+01;
  constexpr double a6 = 2.506628277459239e+00;
  constexpr double b1 = -5.447609879822406e+01;
  constexpr double b2 = 1.615858368580409e+02;
  constexpr double b3 = -1.556989798598866e+02;
  constexpr double b4 = 6.680131188771972e+01;
  constexpr double b5 = -1.328068155288572e+01;
  constexpr double c1 = -7.784894002430293e-03;
  constexpr double c2 = -3.223964580411365e-01;
  constexpr double c3 = -2.400758277161838e+00;
  constexpr double c4 = -2.549732539343734e+00;
  constexpr double c5 = 4.374664141464968e+00;
  constexpr double c6 = 2.938163982698783e+00;
  constexpr double d1 = 7.784695709041462e-03;
  constexpr double d2 = 3.224671290700398e-01;
  constexpr double d3 = 2.445134137142996e+00;
  constexpr double d4 = 3.754408661907416e+00;
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c1 * q + c2) * q + c3) * q + c4) * q + c5) * q + c6) /
           ((((d1 * q + d2) * q + d3) * q + d4) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c1 * q + c2) * q + c3) * q + c4) * q + c5) * q + c6) /
           ((((d1 * q + d2) * q + d3) * q + d4) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a1 * r + a2) * r + a3) * r + a4) * r + a5) * r + a6) * q /
         (((((b1 * r + b2) * r + b3) * r + b4) * r + b5) * r + 1.0);
}

}  // namespace bivsd
