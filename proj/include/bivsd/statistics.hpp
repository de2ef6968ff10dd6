#pragma once

#include <optional>
#include <utility>

#include "bivsd/functionals.hpp"

namespace bivsd {

enum class Order { first, second };

// Which dominance condition the statistic addresses. submodular/supermodular
// select the principal bivariate surface (delta F or delta K at first order,
// delta H or delta L at second order); the marginal kinds are the univariate
// sub-conditions on one axis.
enum class StatClass { submodular, supermodular, marginal_x, marginal_y };

struct StatisticKind {
  Order order = Order::first;
  StatClass cls = StatClass::submodular;
};

bool is_marginal(StatisticKind kind);

struct StatisticValue {
  StatisticKind kind;
  double raw_sup = 0.0;  // unscaled supremum, kept for auditability
  double scale = 0.0;    // sqrt(mn/(m+n))
  double value = 0.0;    // scale * raw_sup
  // Location of the supremum: (argmax1, argmax2) for surface statistics,
  // argmax1 alone (the tested-axis coordinate) for marginal kinds.
  double argmax1 = 0.0;
  std::optional<double> argmax2;
};

double two_sample_scale(std::size_t m, std::size_t n);

StatisticValue compute_statistic(StatisticKind kind, const BivariateSample& a,
                                 const BivariateSample& b);

// Variant taking a caller-supplied grid. The grid must contain 0, 1 and
// every coordinate of both samples on each axis; any superset of the
// samples' own combined grid (e.g. the pooled grid during bootstrap) yields
// the identical supremum and argmax.
StatisticValue compute_statistic(StatisticKind kind, const BivariateSample& a,
                                 const BivariateSample& b,
                                 const CombinedGrid& grid);

// Forward and reverse statistics. Rejecting one direction never implies the
// other; both hypotheses are tested separately.
std::pair<StatisticValue, StatisticValue> statistic_pair(
    StatisticKind kind, const BivariateSample& a, const BivariateSample& b);

}  // namespace bivsd
