#pragma once

#include <optional>

#include "tropbn/curve.hpp"
#include "tropbn/divisor.hpp"
#include "tropbn/pl_function.hpp"

namespace tropbn {

struct ReducedForm {
  Divisor divisor;
  Point base;
};

/// The unique q-reduced divisor linearly equivalent to d, computed by metric Dhar burning.
/// d may have support anywhere on the curve and need not be effective; the result is
/// non-negative away from q, and d is equivalent to an effective divisor iff it is also
/// non-negative at q.
ReducedForm dhar_reduce(const TropicalCurve& curve, const Divisor& d, const Point& q);

/// Non-negative off q, and a fire started at q burns the whole curve.
bool is_q_reduced(const TropicalCurve& curve, const Divisor& d, const Point& q);

/// Some effective divisor equivalent to d, if one exists.
std::optional<Divisor> effective_representative(const TropicalCurve& curve, const Divisor& d);
bool equivalent_to_effective(const TropicalCurve& curve, const Divisor& d);

/// For effective e: is e - sum m_p p equivalent to an effective divisor? If so, returns one.
std::optional<Divisor> subtract_effective(const TropicalCurve& curve, const Divisor& e, const Divisor& removed);

/// The PL function f with div(f) = d and f = 0 at the first vertex, if d is principal.
std::optional<PLFunction> solve_potential(const TropicalCurve& curve, const Divisor& d);

struct Equivalence {
  bool equivalent = false;
  /// When equivalent: d1 - d2 = div(witness).
  std::optional<PLFunction> witness;
};

Equivalence is_equivalent(const TropicalCurve& curve, const Divisor& d1, const Divisor& d2);

}  // namespace tropbn
