#include "tropbn/divisor.hpp"

#include <algorithm>

#include "tropbn/error.hpp"

namespace tropbn {

Divisor::Divisor(Map chips) {
  for (auto& [p, m] : chips)
    if (m != 0) chips_.emplace(p, m);
}

Divisor Divisor::single(const Point& p, long mult) {
  Divisor d;
  d.add(p, mult);
  return d;
}

long Divisor::coefficient(const Point& p) const {
  auto it = chips_.find(p);
  return it == chips_.end() ? 0 : it->second;
}

void Divisor::add(const Point& p, long mult) {
  if (mult == 0) return;
  auto [it, inserted] = chips_.emplace(p, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) chips_.erase(it);
  }
}

long Divisor::degree() const {
  long total = 0;
  for (const auto& [p, m] : chips_) total += m;
  return total;
}

bool Divisor::is_effective() const {
  return std::all_of(chips_.begin(), chips_.end(), [](const auto& c) { return c.second > 0; });
}

std::vector<Point> Divisor::support() const {
  std::vector<Point> out;
  for (const auto& [p, m] : chips_) out.push_back(p);
  return out;
}

Divisor Divisor::positive_part() const {
  Divisor out;
  for (const auto& [p, m] : chips_)
    if (m > 0) out.chips_.emplace(p, m);
  return out;
}

Divisor Divisor::negative_part() const {
  Divisor out;
  for (const auto& [p, m] : chips_)
    if (m < 0) out.chips_.emplace(p, -m);
  return out;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [p, m] : other.chips_) add(p, m);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  for (const auto& [p, m] : other.chips_) add(p, -m);
  return *this;
}

Divisor operator*(long k, const Divisor& d) {
  Divisor out;
  if (k == 0) return out;
  for (const auto& [p, m] : d.chips_) out.chips_.emplace(p, k * m);
  return out;
}

void validate(const TropicalCurve& curve, const Divisor& d) {
  for (const auto& [p, m] : d.chips()) curve.validate(p);
}

std::string describe(const TropicalCurve& curve, const Divisor& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [p, m] : d.chips()) {
    if (!out.empty()) out += m < 0 ? " - " : " + ";
    else if (m < 0) out += "-";
    long a = m < 0 ? -m : m;
    if (a != 1) out += std::to_string(a) + "*";
    out += curve.describe(p);
  }
  return out;
}

Divisor star(const TropicalCurve& curve, const Divisor& e) {
  if (!e.is_effective()) throw DomainError("star needs an effective divisor");
  Divisor out;
  for (const auto& [p, b] : e.chips()) out.add(p, b + std::min<long>(b, curve.weight_at(p)));
  return out;
}

Divisor restrict(const Divisor& d, const Subcurve& lambda) {
  Divisor out;
  for (const auto& [p, m] : d.chips())
    if (lambda.contains(p)) out.add(p, m);
  return out;
}

Divisor weight_divisor(const TropicalCurve& curve) {
  Divisor out;
  for (std::size_t v = 0; v < curve.num_vertices(); ++v) out.add(Point::at(VertexId{v}), curve.vertex(VertexId{v}).weight);
  return out;
}

}  // namespace tropbn
