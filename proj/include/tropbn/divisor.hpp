#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropbn/curve.hpp"
#include "tropbn/subcurve.hpp"

namespace tropbn {

/// Finite integer combination of points. Zero coefficients are never stored, so
/// equality is exact support-map equality. The curve is passed to operations that need it.
class Divisor {
 public:
  using Map = std::map<Point, long>;

  Divisor() = default;
  explicit Divisor(Map chips);
  static Divisor single(const Point& p, long mult = 1);

  long coefficient(const Point& p) const;
  void add(const Point& p, long mult);
  long degree() const;
  bool is_effective() const;
  bool is_zero() const { return chips_.empty(); }
  const Map& chips() const { return chips_; }
  std::vector<Point> support() const;
  /// Coefficientwise max(D, 0) and max(-D, 0).
  Divisor positive_part() const;
  Divisor negative_part() const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(long k, const Divisor& d);
  Divisor operator-() const { return -1 * *this; }
  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend bool operator<(const Divisor& a, const Divisor& b) { return a.chips_ < b.chips_; }

 private:
  Map chips_;
};

/// Throws DomainError if some support point is not on the curve.
void validate(const TropicalCurve& curve, const Divisor& d);
std::string describe(const TropicalCurve& curve, const Divisor& d);

/// E*: coefficient b at p becomes b + min(b, w(p)). E must be effective.
Divisor star(const TropicalCurve& curve, const Divisor& e);

/// Keeps support points lying in lambda, boundary included.
Divisor restrict(const Divisor& d, const Subcurve& lambda);

/// Sum of w(v) * v.
Divisor weight_divisor(const TropicalCurve& curve);

}  // namespace tropbn
