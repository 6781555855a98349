#pragma once

#include <vector>

#include "tropbn/curve.hpp"
#include "tropbn/divisor.hpp"
#include "tropbn/subcurve.hpp"

namespace tropbn {

struct Knot {
  Rational offset;
  Rational value;
  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Continuous piecewise-linear function with integer slopes.
/// Each edge stores its knots from offset 0 to the edge length; collinear knots are removed,
/// so two functions are equal iff they agree everywhere.
class PLFunction {
 public:
  /// Knot lists must start at 0, end at the edge length, and match the endpoint vertex values.
  PLFunction(const TropicalCurve& curve, std::vector<Rational> vertex_values, std::vector<std::vector<Knot>> knots);

  static PLFunction constant(const TropicalCurve& curve, const Rational& c);
  /// Linear on every edge between the given vertex values.
  static PLFunction linear(const TropicalCurve& curve, std::vector<Rational> vertex_values);

  const Rational& vertex_value(VertexId v) const { return vertex_values_.at(v.value); }
  const std::vector<Rational>& vertex_values() const { return vertex_values_; }
  const std::vector<Knot>& knots(EdgeId e) const { return knots_.at(e.value); }
  std::size_t num_edges() const { return knots_.size(); }

  Rational value_at(const Point& p) const;
  Rational value_on_edge(EdgeId e, const Rational& offset) const;
  /// Slope on edge e just after offset x (just before when x is the edge length).
  Rational slope_after(EdgeId e, const Rational& x) const;
  Rational slope_before(EdgeId e, const Rational& x) const;
  /// Interior knots (breakpoints) of every edge.
  std::vector<Point> breakpoints() const;
  long max_abs_slope() const;
  Rational min_value() const;
  Rational max_value() const;

  /// Sum of incoming slopes at every point.
  Divisor div(const TropicalCurve& curve) const;

  PLFunction operator-() const;
  PLFunction plus_constant(const Rational& c) const;
  friend PLFunction operator+(const PLFunction& a, const PLFunction& b);
  friend PLFunction operator-(const PLFunction& a, const PLFunction& b) { return a + (-b); }
  friend bool operator==(const PLFunction&, const PLFunction&) = default;

  PLFunction min_with(const Rational& c) const;
  PLFunction max_with(const Rational& c) const;

  /// mu on the region and min(f, mu) elsewhere. Throws InvariantViolation if the result
  /// would be discontinuous (f < mu somewhere on the region's boundary).
  PLFunction clamp(const TropicalCurve& curve, const Rational& mu, const Subcurve& region) const;

  /// Same knots outside (a, b) on edge e, with the single linear piece (a, va)-(b, vb) inside.
  PLFunction replace_linear(const TropicalCurve& curve, EdgeId e, const Rational& a, const Rational& b,
                            const Rational& va, const Rational& vb) const;

 private:
  using BinaryOp = Rational (*)(const Rational&, const Rational&);

  PLFunction() = default;
  static PLFunction combine(const PLFunction& a, const PLFunction& b, bool crossings, BinaryOp op);
  friend PLFunction pl_min(const PLFunction& a, const PLFunction& b);
  friend PLFunction pl_max(const PLFunction& a, const PLFunction& b);
  void normalize_and_check(const TropicalCurve* curve);

  std::vector<Rational> vertex_values_;
  std::vector<std::vector<Knot>> knots_;
  std::vector<std::pair<VertexId, VertexId>> ends_;
};

PLFunction pl_min(const PLFunction& a, const PLFunction& b);
PLFunction pl_max(const PLFunction& a, const PLFunction& b);

}  // namespace tropbn
