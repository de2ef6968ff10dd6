#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bivsd/sample.hpp"

namespace bivsd {

enum class Axis { x, y };

// Exact evaluator for the empirical cdf of one sample and the derived
// union-event function K(s,t) = F_X(s) + F_Y(t) - F(s,t).
//
// All values are integer event counts divided by the sample size, so two
// evaluation routes of the same rational quantity agree bitwise.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(BivariateSample sample);

  // (1/n) #{i : x_i <= s and y_i <= t}. Queries outside [0,1]^2 throw;
  // clamping would hide rescaling bugs upstream.
  double cdf_at(double s, double t) const;

  // F(v, 1) for Axis::x, F(1, v) for Axis::y.
  double marginal_cdf_at(Axis axis, double v) const;

  // Empirical probability of the union event {x_i <= s or y_i <= t},
  // computed from integer counts via inclusion-exclusion.
  double k_at(double s, double t) const;

  // Integer building blocks, exposed so exactness can be tested.
  std::size_t count_le(double s, double t) const;
  std::size_t count_union(double s, double t) const;

  const BivariateSample& sample() const { return sample_; }
  std::size_t size() const { return sample_.points.size(); }
  std::span<const double> sorted_x() const { return sorted_x_; }
  std::span<const double> sorted_y() const { return sorted_y_; }

 private:
  BivariateSample sample_;
  std::vector<double> sorted_x_;
  std::vector<double> sorted_y_;
};

// Union of both samples' coordinates with {0,1} per axis. Every empirical
// surface built from the two samples is piecewise constant (or piecewise
// bilinear, for the integral functionals) on the cells of this grid, so
// suprema over [0,1]^2 are attained at grid vertices.
struct CombinedGrid {
  std::vector<double> xs;  // strictly increasing, front 0, back 1
  std::vector<double> ys;
};

CombinedGrid combined_grid(const BivariateSample& a, const BivariateSample& b);

enum class SurfaceKind {
  delta_cdf,    // F_a - F_b
  delta_union,  // K_a - K_b
};

struct SupremumResult {
  double value = 0.0;
  double arg_x = 0.0;
  double arg_y = 0.0;
};

struct SupremumResult1D {
  double value = 0.0;
  double arg = 0.0;
};

// Exact supremum of the chosen difference surface over [0,1]^2. Both
// surfaces are right-continuous and constant on grid cells, so the maximum
// over grid vertices is the supremum. Ties resolve to the lexicographically
// smallest (x, y).
SupremumResult sup_delta_surface(SurfaceKind kind, const EmpiricalCdf& a,
                                 const EmpiricalCdf& b,
                                 const CombinedGrid& grid);

// Exact supremum of F^axis_a - F^axis_b over [0,1]; the univariate
// first-order marginal statistic before scaling.
SupremumResult1D sup_delta_marginal_cdf(Axis axis, const EmpiricalCdf& a,
                                        const EmpiricalCdf& b,
                                        const CombinedGrid& grid);

}  // namespace bivsd
