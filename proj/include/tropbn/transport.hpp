#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropbn/divisor.hpp"
#include "tropbn/pl_function.hpp"
#include "tropbn/subcurve.hpp"

namespace tropbn {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of a transport construction. `witness` satisfies divisor = input + div(witness).
struct TransportResult {
  Divisor divisor;
  Subcurve region;
  std::optional<PLFunction> witness;
  std::vector<Check> checks;
  std::vector<std::string> log;

  bool ok() const;
  const Check* find(const std::string& name) const;
};

/// True iff every linear piece of f has |slope| <= d.
bool slope_bound_check(const PLFunction& f, long d);

/// r + min(r, g(lambda)).
int r_lambda(int r, const Subcurve& lambda);

/// Is restrict(d, region) - removed equivalent to an effective divisor on the region viewed as a curve?
bool effective_on_region(const Divisor& d, const Divisor& removed, const Subcurve& region);

/// Weighted rank of restrict(d, region) on the region viewed as a weighted curve.
int rank_on_region(const Divisor& d, const Subcurve& region);

/// Pushes d towards lambda so that the enlarged region carries a divisor containing E*.
/// eps is the diameter bound of lambda; the clamp uses N_eps(lambda).
TransportResult push_single(const Divisor& d, const Subcurve& lambda, const Divisor& e, const Rational& eps);

/// eps * (3d)^(d-r+1).
Rational pushing_radius(const Rational& eps, long d, int r);

/// Repeated pushing over all degree-r divisors on the loopless vertex set of lambda.
/// Throws DomainError if N_R(lambda), R = pushing_radius, does not retract onto lambda or
/// contains weighted vertices outside it.
TransportResult concentrate(const Divisor& d, const Subcurve& lambda, int r, const Rational& eps);

/// Moves chips so that the restriction to a slightly larger region has degree exactly k.
/// f_target is an effective divisor equivalent to e with fewer than k chips on lambda.
/// radius caps the enlargement; by default half the shortest free outward segment.
TransportResult dilute(const Divisor& e, const Subcurve& lambda, long k, const Divisor& f_target,
                       std::optional<Rational> radius = std::nullopt);

struct ConfinementReport {
  std::optional<Divisor> candidate;
  int resolution = 0;
  long budget = 0;
  long tests_used = 0;
  long candidates_tried = 0;
  std::vector<std::string> log;
};

/// Bounded search for k points on lambda whose chips cannot be moved off lambda.
/// A candidate V is rejected when, for V + X with X effective on outside lattice points
/// (degree <= extra_degree), some lattice divisor P outside lambda of degree deg(V + X) - k + 1
/// has V + X - P equivalent to an effective divisor.
ConfinementReport confinement_search(const Subcurve& lambda, int k, int resolution, long budget, int extra_degree = 1);

/// Finds an effective divisor equivalent to d with fewer than k chips on region, searching
/// lattice divisors outside the region at the given resolution.
std::optional<Divisor> find_escape(const Divisor& d, const Subcurve& region, long k, int resolution, long budget);

struct ArrangeTarget {
  Subcurve lambda;
  int r = 0;
  Rational eps;
};

/// Simultaneous arrangement on several disjoint subcurves with targets sum r_i <= rank(d).
TransportResult arrange_multi(const Divisor& d, const std::vector<ArrangeTarget>& targets, int resolution = 2,
                              long budget = 20000);

}  // namespace tropbn
