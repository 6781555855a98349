#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tropbn/curve.hpp"
#include "tropbn/divisor.hpp"

namespace tropbn::test {

inline VertexId V(std::size_t i) { return VertexId{i}; }
inline EdgeId E(std::size_t i) { return EdgeId{i}; }
inline Point at(std::size_t v) { return Point::at(VertexId{v}); }
inline Point on(const TropicalCurve& c, std::size_t e, const Rational& x) { return c.point_on_edge(EdgeId{e}, x); }
inline Divisor chips(std::initializer_list<std::pair<Point, long>> list) {
  Divisor d;
  for (const auto& [p, m] : list) d.add(p, m);
  return d;
}

inline std::vector<Vertex> named(std::size_t n, std::vector<int> weights = {}) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({"v" + std::to_string(i), i < weights.size() ? weights[i] : 0});
  return out;
}

/// One vertex of weight g, no edges.
inline TropicalCurve rose(int g) { return TropicalCurve({{"v", g}}, {}); }

/// One vertex with g loops of length len.
inline TropicalCurve petals(int g, const Rational& len = 1) {
  std::vector<Edge> edges;
  for (int i = 0; i < g; ++i) edges.push_back({"p" + std::to_string(i), V(0), V(0), len});
  return TropicalCurve({{"v", 0}}, edges);
}

/// A single loop of the given circumference at v0.
inline TropicalCurve loop(const Rational& len = 1) { return TropicalCurve({{"v0", 0}}, {{"l", V(0), V(0), len}}); }

/// Cycle v0 -> v1 -> ... -> v(n-1) -> v0 with the given lengths.
inline TropicalCurve cycle(std::vector<Rational> lengths, std::vector<int> weights = {}) {
  std::size_t n = lengths.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({"e" + std::to_string(i), V(i), V((i + 1) % n), lengths[i]});
  return TropicalCurve(named(n, weights), edges);
}

/// Two vertices joined by three edges.
inline TropicalCurve theta(std::vector<int> weights = {}, std::vector<Rational> lengths = {1, 1, 1}) {
  return TropicalCurve(named(2, weights), {{"e0", V(0), V(1), lengths[0]},
                                           {"e1", V(0), V(1), lengths[1]},
                                           {"e2", V(0), V(1), lengths[2]}});
}

/// Path v0 - v1 - ... with the given lengths.
inline TropicalCurve path(std::vector<Rational> lengths, std::vector<int> weights = {}) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lengths.size(); ++i) edges.push_back({"e" + std::to_string(i), V(i), V(i + 1), lengths[i]});
  return TropicalCurve(named(lengths.size() + 1, weights), edges);
}

inline std::shared_ptr<const TropicalCurve> share(TropicalCurve c) {
  return std::make_shared<const TropicalCurve>(std::move(c));
}

}  // namespace tropbn::test
