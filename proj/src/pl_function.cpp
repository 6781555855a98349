#include "tropbn/pl_function.hpp"

#include <algorithm>

#include "tropbn/error.hpp"

namespace tropbn {

namespace {

Rational slope_between(const Knot& a, const Knot& b) { return (b.value - a.value) / (b.offset - a.offset); }

Rational interpolate(const std::vector<Knot>& knots, const Rational& x) {
  auto it = std::lower_bound(knots.begin(), knots.end(), x, [](const Knot& k, const Rational& v) { return k.offset < v; });
  if (it == knots.end()) throw DomainError("offset beyond edge");
  if (it->offset == x) return it->value;
  if (it == knots.begin()) throw DomainError("offset before edge");
  const Knot& lo = *(it - 1);
  return lo.value + slope_between(lo, *it) * (x - lo.offset);
}

std::vector<Rational> merged_offsets(const std::vector<Knot>& a, const std::vector<Knot>& b) {
  std::vector<Rational> xs;
  for (const auto& k : a) xs.push_back(k.offset);
  for (const auto& k : b) xs.push_back(k.offset);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

/// Pointwise binary operation; `crossings` inserts the points where a - b changes sign.
template <class Op>
std::vector<Knot> combine_edge(const std::vector<Knot>& a, const std::vector<Knot>& b, bool crossings, Op op) {
  auto xs = merged_offsets(a, b);
  std::vector<Knot> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational va = interpolate(a, xs[i]), vb = interpolate(b, xs[i]);
    if (crossings && i > 0) {
      Rational pa = interpolate(a, xs[i - 1]), pb = interpolate(b, xs[i - 1]);
      Rational d0 = pa - pb, d1 = va - vb;
      if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
        Rational x = xs[i - 1] + (xs[i] - xs[i - 1]) * d0 / (d0 - d1);
        out.push_back({x, interpolate(a, x)});
      }
    }
    out.push_back({xs[i], op(va, vb)});
  }
  return out;
}

}  // namespace

PLFunction::PLFunction(const TropicalCurve& curve, std::vector<Rational> vertex_values,
                       std::vector<std::vector<Knot>> knots)
    : vertex_values_(std::move(vertex_values)), knots_(std::move(knots)) {
  normalize_and_check(&curve);
}

void PLFunction::normalize_and_check(const TropicalCurve* curve) {
  if (curve) {
    if (vertex_values_.size() != curve->num_vertices() || knots_.size() != curve->num_edges())
      throw DomainError("PL function does not match the curve");
    ends_.clear();
    for (const auto& e : curve->edges()) ends_.emplace_back(e.tail, e.head);
  }
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    auto& list = knots_[i];
    std::sort(list.begin(), list.end(), [](const Knot& a, const Knot& b) { return a.offset < b.offset; });
    if (list.size() < 2 || list.front().offset != 0) throw DomainError("edge knots must start at offset 0");
    if (curve && list.back().offset != curve->edge(EdgeId{i}).length)
      throw DomainError("edge knots must end at the edge length");
    if (list.front().value != vertex_values_[ends_[i].first.value] ||
        list.back().value != vertex_values_[ends_[i].second.value])
      throw InvariantViolation("PL function is discontinuous at a vertex");
    std::vector<Knot> kept{list.front()};
    for (std::size_t k = 1; k < list.size(); ++k) {
      if (list[k].offset == kept.back().offset) {
        if (list[k].value != kept.back().value) throw InvariantViolation("PL function is discontinuous on an edge");
        continue;
      }
      if (!is_integer(slope_between(kept.back(), list[k]))) throw InvariantViolation("PL function has a non-integer slope");
      if (kept.size() >= 2 && slope_between(kept[kept.size() - 2], kept.back()) == slope_between(kept.back(), list[k]))
        kept.back() = list[k];
      else
        kept.push_back(list[k]);
    }
    list = std::move(kept);
  }
}

PLFunction PLFunction::constant(const TropicalCurve& curve, const Rational& c) {
  return linear(curve, std::vector<Rational>(curve.num_vertices(), c));
}

PLFunction PLFunction::linear(const TropicalCurve& curve, std::vector<Rational> vertex_values) {
  if (vertex_values.size() != curve.num_vertices()) throw DomainError("one value per vertex expected");
  std::vector<std::vector<Knot>> knots;
  for (const auto& e : curve.edges())
    knots.push_back({{Rational(0), vertex_values[e.tail.value]}, {e.length, vertex_values[e.head.value]}});
  return PLFunction(curve, std::move(vertex_values), std::move(knots));
}

Rational PLFunction::value_at(const Point& p) const {
  if (p.is_vertex()) return vertex_value(p.vertex());
  return value_on_edge(p.edge(), p.offset());
}

Rational PLFunction::value_on_edge(EdgeId e, const Rational& offset) const { return interpolate(knots(e), offset); }

Rational PLFunction::slope_after(EdgeId e, const Rational& x) const {
  const auto& list = knots(e);
  if (x >= list.back().offset) return slope_before(e, x);
  auto it = std::upper_bound(list.begin(), list.end(), x, [](const Rational& v, const Knot& k) { return v < k.offset; });
  return slope_between(*(it - 1), *it);
}

Rational PLFunction::slope_before(EdgeId e, const Rational& x) const {
  const auto& list = knots(e);
  if (x <= 0) return slope_after(e, x);
  auto it = std::lower_bound(list.begin(), list.end(), x, [](const Knot& k, const Rational& v) { return k.offset < v; });
  return slope_between(*(it - 1), *it);
}

std::vector<Point> PLFunction::breakpoints() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < knots_.size(); ++i)
    for (std::size_t k = 1; k + 1 < knots_[i].size(); ++k) out.push_back(Point::interior(EdgeId{i}, knots_[i][k].offset));
  return out;
}

long PLFunction::max_abs_slope() const {
  long best = 0;
  for (const auto& list : knots_)
    for (std::size_t k = 1; k < list.size(); ++k) best = std::max(best, std::labs(to_long(slope_between(list[k - 1], list[k]))));
  return best;
}

Rational PLFunction::min_value() const {
  Rational best = vertex_values_.front();
  for (const auto& list : knots_)
    for (const auto& k : list) best = rmin(best, k.value);
  for (const auto& v : vertex_values_) best = rmin(best, v);
  return best;
}

Rational PLFunction::max_value() const {
  Rational best = vertex_values_.front();
  for (const auto& list : knots_)
    for (const auto& k : list) best = rmax(best, k.value);
  for (const auto& v : vertex_values_) best = rmax(best, v);
  return best;
}

Divisor PLFunction::div(const TropicalCurve& curve) const {
  Divisor out;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const auto& list = knots_[i];
    const auto& e = curve.edge(EdgeId{i});
    // Incoming slope at the tail is minus the first slope, at the head the last slope.
    out.add(Point::at(e.tail), -to_long(slope_between(list[0], list[1])));
    out.add(Point::at(e.head), to_long(slope_between(list[list.size() - 2], list.back())));
    for (std::size_t k = 1; k + 1 < list.size(); ++k) {
      long left = to_long(slope_between(list[k - 1], list[k]));
      long right = to_long(slope_between(list[k], list[k + 1]));
      out.add(Point::interior(EdgeId{i}, list[k].offset), left - right);
    }
  }
  return out;
}

PLFunction PLFunction::operator-() const {
  PLFunction out = *this;
  for (auto& v : out.vertex_values_) v = -v;
  for (auto& list : out.knots_)
    for (auto& k : list) k.value = -k.value;
  return out;
}

PLFunction PLFunction::plus_constant(const Rational& c) const {
  PLFunction out = *this;
  for (auto& v : out.vertex_values_) v += c;
  for (auto& list : out.knots_)
    for (auto& k : list) k.value += c;
  return out;
}

PLFunction PLFunction::combine(const PLFunction& a, const PLFunction& b, bool crossings, BinaryOp op) {
  if (a.num_edges() != b.num_edges() || a.vertex_values_.size() != b.vertex_values_.size())
    throw DomainError("PL functions live on different curves");
  PLFunction out;
  out.ends_ = a.ends_;
  for (std::size_t v = 0; v < a.vertex_values_.size(); ++v) out.vertex_values_.push_back(op(a.vertex_values_[v], b.vertex_values_[v]));
  for (std::size_t i = 0; i < a.num_edges(); ++i) out.knots_.push_back(combine_edge(a.knots_[i], b.knots_[i], crossings, op));
  out.normalize_and_check(nullptr);
  return out;
}

namespace {

Rational add_values(const Rational& x, const Rational& y) { return x + y; }

}  // namespace

PLFunction operator+(const PLFunction& a, const PLFunction& b) { return PLFunction::combine(a, b, false, add_values); }

PLFunction PLFunction::min_with(const Rational& c) const {
  PLFunction other = *this;
  for (auto& v : other.vertex_values_) v = c;
  for (auto& list : other.knots_) list = {{Rational(0), c}, {list.back().offset, c}};
  return pl_min(*this, other);
}

PLFunction PLFunction::max_with(const Rational& c) const { return -((-*this).min_with(-c)); }

PLFunction pl_min(const PLFunction& a, const PLFunction& b) { return PLFunction::combine(a, b, true, rmin); }

PLFunction pl_max(const PLFunction& a, const PLFunction& b) { return PLFunction::combine(a, b, true, rmax); }

PLFunction PLFunction::clamp(const TropicalCurve& curve, const Rational& mu, const Subcurve& region) const {
  PLFunction out = min_with(mu);
  for (auto v : region.vertices()) out.vertex_values_[v.value] = mu;
  for (std::size_t i = 0; i < out.knots_.size(); ++i) {
    const auto& pieces = region.intervals(EdgeId{i});
    auto& list = out.knots_[i];
    std::vector<Knot> next;
    for (const auto& k : list) {
      bool inside = std::any_of(pieces.begin(), pieces.end(),
                                [&](const Interval& s) { return s.lo <= k.offset && k.offset <= s.hi; });
      if (!inside) next.push_back(k);
    }
    for (const auto& s : pieces) {
      if (s.lo > 0 && out.value_on_edge(EdgeId{i}, s.lo) != mu)
        throw InvariantViolation("clamp level exceeds the function on the region boundary");
      if (s.hi < list.back().offset && out.value_on_edge(EdgeId{i}, s.hi) != mu)
        throw InvariantViolation("clamp level exceeds the function on the region boundary");
      next.push_back({s.lo, mu});
      next.push_back({s.hi, mu});
    }
    if (region.vertices().count(curve.edge(EdgeId{i}).tail)) next.push_back({Rational(0), mu});
    if (region.vertices().count(curve.edge(EdgeId{i}).head)) next.push_back({list.back().offset, mu});
    std::sort(next.begin(), next.end(), [](const Knot& a, const Knot& b) { return a.offset < b.offset; });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    list = std::move(next);
  }
  out.normalize_and_check(&curve);
  return out;
}

PLFunction PLFunction::replace_linear(const TropicalCurve& curve, EdgeId e, const Rational& a, const Rational& b,
                                      const Rational& va, const Rational& vb) const {
  if (!(0 <= a && a < b && b <= curve.edge(e).length)) throw DomainError("replace_linear needs 0 <= a < b <= length");
  PLFunction out = *this;
  auto& list = out.knots_.at(e.value);
  std::vector<Knot> next;
  for (const auto& k : list)
    if (k.offset < a || k.offset > b) next.push_back(k);
  next.push_back({a, va});
  next.push_back({b, vb});
  std::sort(next.begin(), next.end(), [](const Knot& x, const Knot& y) { return x.offset < y.offset; });
  list = std::move(next);
  const auto& edge = curve.edge(e);
  if (a == 0) out.vertex_values_[edge.tail.value] = va;
  if (b == edge.length) out.vertex_values_[edge.head.value] = vb;
  out.normalize_and_check(&curve);
  return out;
}

}  // namespace tropbn
