#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bivsd/sample.hpp"

namespace bivsd {

enum class Family {
  independent_uniform,
  comonotone_uniform,      // (U, U)
  countermonotone_uniform, // (U, 1-U)
  scaled_uniform,          // (cU, cV), c in (0,1]
  gaussian_copula,         // uniform marginals, normal dependence, rho in (-1,1)
};

struct GeneratorSpec {
  Family family = Family::independent_uniform;
  double param = 0.0;  // scale c or correlation rho; unused otherwise
  std::uint64_t seed = 0;
};

// n i.i.d. draws on [0,1]^2, fully determined by (spec, n).
BivariateSample generate(const GeneratorSpec& spec, std::size_t n);

// Parses "independent-uniform", "scaled-uniform:0.8", "gaussian-copula:0.5",
// etc. The seed field is left at zero for the caller to fill.
GeneratorSpec parse_generator(std::string_view text);

std::string generator_name(const GeneratorSpec& spec);

}  // namespace bivsd
