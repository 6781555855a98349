#include "tropbn/jacobian.hpp"

#include <deque>

#include "tropbn/error.hpp"

namespace tropbn {

namespace {

struct SpanningTree {
  std::vector<std::optional<EdgeId>> parent_edge;
  std::vector<std::size_t> parent;
  std::vector<bool> tree_edge;
};

SpanningTree bfs_tree(const TropicalCurve& curve) {
  const std::size_t n = curve.num_vertices();
  SpanningTree t{std::vector<std::optional<EdgeId>>(n), std::vector<std::size_t>(n, 0),
                 std::vector<bool>(curve.num_edges(), false)};
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    std::vector<EdgeEnd> ends(curve.incident(VertexId{v}).begin(), curve.incident(VertexId{v}).end());
    std::stable_sort(ends.begin(), ends.end(), [](const EdgeEnd& a, const EdgeEnd& b) { return a.edge < b.edge; });
    for (const auto& end : ends) {
      const auto& e = curve.edge(end.edge);
      auto w = end.at_tail ? e.head.value : e.tail.value;
      if (seen[w]) continue;
      seen[w] = true;
      t.parent_edge[w] = end.edge;
      t.parent[w] = v;
      t.tree_edge[end.edge.value] = true;
      queue.push_back(w);
    }
  }
  return t;
}

/// Signed edge vector of the tree path from the root to v.
std::vector<long> root_path(const TropicalCurve& curve, const SpanningTree& t, std::size_t v) {
  std::vector<long> path(curve.num_edges(), 0);
  while (t.parent_edge[v]) {
    EdgeId e = *t.parent_edge[v];
    // Traversed from parent to child.
    path[e.value] += curve.edge(e).tail.value == t.parent[v] && curve.edge(e).head.value == v ? 1 : -1;
    v = t.parent[v];
  }
  return path;
}

}  // namespace

CycleBasis cycle_basis(const TropicalCurve& curve) {
  auto tree = bfs_tree(curve);
  CycleBasis basis;
  basis.tree_edge = tree.tree_edge;
  for (std::size_t i = 0; i < curve.num_edges(); ++i) {
    if (tree.tree_edge[i]) continue;
    const auto& e = curve.edge(EdgeId{i});
    // Along e from tail to head, then back to the root and down to the tail.
    auto to_tail = root_path(curve, tree, e.tail.value);
    auto to_head = root_path(curve, tree, e.head.value);
    std::vector<long> cycle(curve.num_edges(), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k) cycle[k] = to_tail[k] - to_head[k];
    cycle[i] += 1;
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

std::vector<std::vector<Rational>> scale_cycles(const CycleBasis& basis, const ConeVector& s) {
  std::vector<std::vector<Rational>> out;
  for (const auto& c : basis.cycles) {
    if (c.size() != s.size()) throw DomainError("cone vector has the wrong dimension");
    std::vector<Rational> scaled;
    for (std::size_t k = 0; k < c.size(); ++k) scaled.push_back(s[k] * c[k]);
    out.push_back(std::move(scaled));
  }
  return out;
}

std::vector<std::vector<Rational>> gram_matrix(const TropicalCurve& curve, const CycleBasis& basis) {
  const std::size_t g = basis.genus();
  std::vector<std::vector<Rational>> q(g, std::vector<Rational>(g, Rational(0)));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < curve.num_edges(); ++k)
        if (basis.cycles[i][k] != 0 && basis.cycles[j][k] != 0)
          q[i][j] += curve.edge(EdgeId{k}).length * (basis.cycles[i][k] * basis.cycles[j][k]);
  return q;
}

std::vector<Rational> abel_jacobi(const TropicalCurve& curve, const Divisor& d, const Point& basepoint) {
  validate(curve, d);
  curve.validate(basepoint);
  if (d.degree() != 0) throw DomainError("Abel-Jacobi coordinates need a degree-0 divisor");
  auto tree = bfs_tree(curve);
  auto basis = cycle_basis(curve);
  const std::size_t g = basis.genus();
  // Length-weighted chain from the root to every support point, summed with multiplicities.
  std::vector<Rational> chain(curve.num_edges(), Rational(0));
  for (const auto& [p, m] : d.chips()) {
    std::size_t v = p.is_vertex() ? p.vertex().value : curve.edge(p.edge()).tail.value;
    auto path = root_path(curve, tree, v);
    for (std::size_t k = 0; k < path.size(); ++k)
      if (path[k] != 0) chain[k] += curve.edge(EdgeId{k}).length * (path[k] * m);
    if (!p.is_vertex()) chain[p.edge().value] += p.offset() * m;
  }
  std::vector<Rational> b(g, Rational(0));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t k = 0; k < chain.size(); ++k)
      if (basis.cycles[i][k] != 0) b[i] += chain[k] * basis.cycles[i][k];
  auto q = gram_matrix(curve, basis);
  // Gaussian elimination; Q is symmetric positive definite.
  for (std::size_t col = 0; col < g; ++col) {
    for (std::size_t row = 0; row < g; ++row) {
      if (row == col || q[row][col] == 0) continue;
      Rational factor = q[row][col] / q[col][col];
      for (std::size_t k = col; k < g; ++k) q[row][k] -= factor * q[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> t;
  for (std::size_t i = 0; i < g; ++i) t.push_back(frac(b[i] / q[i][i]));
  return t;
}

UniversalCoords universal_coords(const CombinatorialType& type, const ConeVector& s, const Divisor& d,
                                 const Point& unit_basepoint) {
  auto realization = realize(type, s);
  type.unit_curve().validate(unit_basepoint);
  Point image = realization.map(unit_basepoint);
  Divisor shifted = pushforward_class(realization, d) - Divisor::single(image, d.degree());
  return {s, abel_jacobi(realization.curve(), shifted, image), d.degree(), unit_basepoint};
}

Divisor pushforward_class(const Realization& realization, const Divisor& d) {
  Divisor out;
  for (const auto& [p, m] : d.chips()) out.add(realization.map(p), m);
  return out;
}

}  // namespace tropbn
