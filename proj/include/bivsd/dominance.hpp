#pragma once

#include <string>
#include <vector>

#include "bivsd/bootstrap.hpp"

namespace bivsd {

enum class Direction { a_dominates_b, b_dominates_a };
enum class ModClass { submodular, supermodular };
enum class Adjustment { none, bonferroni };

struct Hypothesis {
  Order order = Order::first;
  ModClass cls = ModClass::submodular;
  Direction direction = Direction::a_dominates_b;
};

struct ConditionResult {
  std::string name;  // delta_F, delta_K, delta_F_x, ..., delta_H_y
  BootstrapDistribution dist;
  double level = 0.05;  // per-condition beta actually applied
  Decision decision = Decision::fail_to_reject;
};

enum class JointDecision { reject_dominance, fail_to_reject };

struct DominanceTestReport {
  Hypothesis hypothesis;
  std::vector<ConditionResult> conditions;
  JointDecision joint = JointDecision::fail_to_reject;
  Adjustment adjustment = Adjustment::none;
  double beta = 0.05;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::uint64_t seed = 0;
  RescaleTransform transform;
};

// The sub-conditions a hypothesis requires. First-order submodular needs
// only the principal surface; first-order supermodular adds both marginal
// cdf conditions; both second-order classes add the marginal H conditions.
std::vector<std::pair<std::string, StatisticKind>> conditions_for(
    Order order, ModClass cls);

// Runs one bootstrap per required condition and assembles the report.
// Dominance is rejected as soon as any sub-condition rejects; under
// Adjustment::bonferroni each condition is tested at beta/k.
DominanceTestReport run_test(const Hypothesis& hyp, const BivariateSample& a,
                             const BivariateSample& b,
                             const BootstrapConfig& cfg,
                             Adjustment adjustment);

}  // namespace bivsd
