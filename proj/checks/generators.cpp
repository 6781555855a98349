#include "generators.hpp"

namespace tropbn::checks {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_length(Rng& rng) {
  static const Rational choices[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1),
                                     Rational(3, 2), Rational(2),    Rational(5, 2)};
  return choices[uniform_int(rng, 0, 6)];
}

TropicalCurve random_curve(Rng& rng, const CurveShape& shape) {
  const int n = uniform_int(rng, 1, shape.max_vertices);
  std::vector<Vertex> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), 0});
  std::vector<Edge> edges;
  auto length = [&] { return shape.unit_lengths ? Rational(1) : random_length(rng); };
  auto add_edge = [&](int a, int b) {
    std::string name = "e" + std::to_string(edges.size());
    edges.push_back({name, VertexId{static_cast<std::size_t>(a)}, VertexId{static_cast<std::size_t>(b)}, length()});
  };
  for (int i = 1; i < n; ++i) add_edge(uniform_int(rng, 0, i - 1), i);
  int genus = 0;
  const int extra = uniform_int(rng, 0, std::max(0, shape.max_edges - (n - 1)));
  for (int k = 0; k < extra && genus < shape.max_genus; ++k) {
    int a = uniform_int(rng, 0, n - 1), b = uniform_int(rng, 0, n - 1);
    if (a == b && !shape.allow_loops) continue;
    add_edge(a, b);
    ++genus;
  }
  // Weights skew towards zero: probability 3/5 for 0, then the rest spread evenly.
  for (auto& v : vertices) {
    if (genus >= shape.max_genus || shape.max_weight == 0) break;
    if (uniform_int(rng, 0, 4) < 3) continue;
    int w = uniform_int(rng, 1, shape.max_weight);
    w = std::min(w, shape.max_genus - genus);
    v.weight = w;
    genus += w;
  }
  return TropicalCurve(std::move(vertices), std::move(edges));
}

Point random_point(Rng& rng, const TropicalCurve& curve, bool allow_interior) {
  if (!allow_interior || curve.num_edges() == 0 || uniform_int(rng, 0, 1) == 0)
    return Point::at(VertexId{static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(curve.num_vertices()) - 1))});
  EdgeId e{static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(curve.num_edges()) - 1))};
  // Offsets k/6 of the edge length with 0 < k < 6.
  Rational offset = curve.edge(e).length * ratio(uniform_int(rng, 1, 5), 6);
  return curve.point_on_edge(e, offset);
}

Divisor random_divisor(Rng& rng, const TropicalCurve& curve, long degree, int spread, bool allow_interior) {
  Divisor d;
  long positive = degree + spread;
  if (positive < 0) {
    spread -= static_cast<int>(positive);
    positive = 0;
  }
  for (long i = 0; i < positive; ++i) d.add(random_point(rng, curve, allow_interior), 1);
  for (int i = 0; i < spread; ++i) d.add(random_point(rng, curve, allow_interior), -1);
  return d;
}

}  // namespace tropbn::checks
