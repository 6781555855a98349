#pragma once

#include <map>
#include <vector>

#include "tropbn/curve.hpp"
#include "tropbn/divisor.hpp"

namespace tropbn {

/// Vertices plus the midpoint of every loop: the vertex set of the loopless model,
/// which is a rank-determining set.
std::vector<Point> loopless_vertex_set(const TropicalCurve& curve);

/// Rank computations on one curve, memoized by q-reduced class representative.
/// Not thread-safe; use one engine per thread.
class RankEngine {
 public:
  explicit RankEngine(TropicalCurve curve);

  const TropicalCurve& curve() const { return curve_; }
  const std::vector<Point>& rank_determining_set() const { return rds_; }

  /// Baker-Norine rank on the underlying metric graph (weights ignored); -1 if d is not
  /// equivalent to an effective divisor.
  int rank_pure(const Divisor& d);
  /// min over 0 <= F <= W of deg F + rank_pure(d - 2F).
  int rank_weighted(const Divisor& d);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  int rank_of_reduced(const Divisor& reduced);

  TropicalCurve curve_;
  std::vector<Point> rds_;
  Point base_;
  std::map<Divisor, int> memo_;
};

/// Throws DomainError on a weighted curve.
int rank_pure(const TropicalCurve& curve, const Divisor& d);
int rank_weighted(const TropicalCurve& curve, const Divisor& d);
/// rank_pure on attach_loops(curve, eps).
int rank_weighted_loops(const TropicalCurve& curve, const Divisor& d, const Rational& eps);
/// Largest r such that d - E* is equivalent to an effective divisor for every effective E
/// of degree r supported on a.
int weighted_A_rank(const TropicalCurve& curve, const Divisor& d, const std::vector<Point>& a);
/// Closed form for the rose R_g (one vertex of weight g) and D = d v.
int rose_rank(int g, long d);
/// K = sum (valence(v) - 2 + 2 w(v)) v.
Divisor canonical(const TropicalCurve& curve);

/// All effective divisors of the given degree supported on points (multisets, fixed order).
std::vector<Divisor> effective_divisors(const std::vector<Point>& points, long degree);

}  // namespace tropbn
