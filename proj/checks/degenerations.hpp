#pragma once

#include <string>
#include <vector>

#include "generators.hpp"
#include "tropbn/brill_noether.hpp"

namespace tropbn::checks {

struct NamedType {
  std::string family;
  CombinatorialType type;
};

/// dumbbell, theta with a tail, chain of three loops, wedge of two cycles, K4.
std::vector<NamedType> degeneration_families();

/// Random spec on the family: a non-empty contracted set, base lengths from random_length,
/// and an effective pattern of the given degree on the unit curve.
DegenerationSpec random_spec(Rng& rng, const NamedType& family, long degree, int steps = 6);

}  // namespace tropbn::checks
