#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropbn/curve.hpp"
#include "tropbn/divisor.hpp"

namespace tropbn {

struct BNQuery {
  long d = 0;
  int r = 0;
  int resolution = 4;
};

/// rank_weighted(curve, d) >= r.
bool wdr_member(const TropicalCurve& curve, const Divisor& d, int r);

struct BNResult {
  int rho = -1;
  int resolution = 0;
  /// First lattice E (in enumeration order) of degree r + rho + 1 that does not extend.
  std::optional<Divisor> counterexample;
  long rank_calls = 0;
};

/// Brill-Noether rank with E and the extension F supported on lattice_points(curve, N).
/// Worker count comes from TROPBN_THREADS (default: hardware concurrency); the result does not
/// depend on it.
BNResult bn_rank_detail(const TropicalCurve& curve, const BNQuery& query);
int bn_rank(const TropicalCurve& curve, const BNQuery& query);

/// Lengths s_i on the type's edges: base lengths, with the contracted edges scaled by 1/2^i.
/// The limit has zeros exactly on the contracted set.
struct DegenerationSpec {
  std::string name;
  CombinatorialType type;
  std::set<std::size_t> contracted;
  std::vector<Rational> base;  // empty means all ones
  Divisor pattern;             // on type.unit_curve()
  int steps = 6;

  ConeVector step(int i) const;
  ConeVector limit() const;
};

/// Throws DomainError on a malformed spec.
void validate(const DegenerationSpec& spec);

struct ExperimentStep {
  int index = 0;
  std::vector<Rational> s;
  int value = 0;
};

struct ExperimentReport {
  std::string kind;
  std::string name;
  long d = 0;
  int r = 0;
  int resolution = 0;
  std::vector<ExperimentStep> steps;
  int limit_value = 0;
  bool vacuous = false;
  bool pass = false;
  std::vector<std::string> log;
};

/// Ranks of the pattern on each Gamma_{s_i} and of its pushforward on the limit.
/// PASS iff the limit rank is >= r; vacuous (and passing) when some step already has rank < r.
ExperimentReport run_closedness_experiment(const DegenerationSpec& spec, long d, int r);

/// bn_rank on each Gamma_{s_i} and on the limit at resolution N.
/// PASS iff the limit value is >= the minimum over the steps; the rho implication is logged.
ExperimentReport run_usc_experiment(const DegenerationSpec& spec, long d, int r, int rho, int resolution);

/// Worker count from TROPBN_THREADS, at least 1.
unsigned worker_count();

}  // namespace tropbn
