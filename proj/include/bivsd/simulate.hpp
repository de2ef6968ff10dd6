#pragma once

#include "bivsd/dominance.hpp"
#include "bivsd/synth.hpp"

namespace bivsd {

// Monte Carlo size/power study: repeat (generate, run_test) and count
// rejections. Equal generators measure size; ordered generators measure
// power.
struct SimulationSpec {
  Hypothesis hypothesis;
  GeneratorSpec gen_a;  // per-trial seeds are derived from bootstrap.seed
  GeneratorSpec gen_b;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint32_t trials = 0;
  BootstrapConfig bootstrap;
  Adjustment adjustment = Adjustment::none;
};

struct SimulationResult {
  std::uint32_t trials = 0;
  std::uint32_t rejections = 0;
  double rejection_rate = 0.0;
  double binomial_std_error = 0.0;
};

SimulationResult run_simulation(const SimulationSpec& spec);

}  // namespace bivsd
