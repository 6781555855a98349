#pragma once

#include <random>

#include "tropbn/curve.hpp"
#include "tropbn/divisor.hpp"

namespace tropbn::checks {

using Rng = std::mt19937_64;

struct CurveShape {
  int max_vertices = 5;
  int max_edges = 7;
  int max_weight = 2;
  /// Upper bound on the genus; extra edges and weights are dropped to respect it.
  int max_genus = 4;
  bool allow_loops = true;
  bool unit_lengths = false;
};

/// Random connected weighted curve; lengths from a small set of rationals.
TropicalCurve random_curve(Rng& rng, const CurveShape& shape);

/// Uniform random rational from {1/3, 1/2, 2/3, 1, 3/2, 2, 5/2}.
Rational random_length(Rng& rng);

/// Random point: a vertex, or an interior point at a random rational offset.
Point random_point(Rng& rng, const TropicalCurve& curve, bool allow_interior);

/// Random divisor with the given degree; `spread` extra chip pairs (+p, -q) make it non-effective.
Divisor random_divisor(Rng& rng, const TropicalCurve& curve, long degree, int spread, bool allow_interior);

int uniform_int(Rng& rng, int lo, int hi);

}  // namespace tropbn::checks
