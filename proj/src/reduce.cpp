#include "tropbn/reduce.hpp"

#include <map>

#include "tropbn/error.hpp"

namespace tropbn {

namespace {

/// Model of the curve whose nodes are the vertices plus the given interior points.
struct NodeGraph {
  struct Segment {
    std::size_t a;
    std::size_t b;
    Rational length;
    EdgeId edge;
    Rational offset_a;
  };

  std::vector<Point> nodes;
  std::map<Point, std::size_t> index;
  std::vector<Segment> segments;
  std::vector<std::vector<std::pair<std::size_t, bool>>> incident;  // (segment, node is end a)

  NodeGraph(const TropicalCurve& curve, const std::vector<Point>& marks) {
    for (std::size_t v = 0; v < curve.num_vertices(); ++v) add_node(Point::at(VertexId{v}));
    std::vector<std::vector<Rational>> cuts(curve.num_edges());
    for (const auto& p : marks)
      if (!p.is_vertex() && !index.count(p)) {
        add_node(p);
        cuts[p.edge().value].push_back(p.offset());
      }
    incident.resize(nodes.size());
    for (std::size_t i = 0; i < curve.num_edges(); ++i) {
      const auto& e = curve.edge(EdgeId{i});
      auto& c = cuts[i];
      std::sort(c.begin(), c.end());
      std::size_t prev = e.tail.value;
      Rational prev_offset = 0;
      for (std::size_t k = 0; k <= c.size(); ++k) {
        std::size_t next = k < c.size() ? index.at(Point::interior(EdgeId{i}, c[k])) : e.head.value;
        Rational next_offset = k < c.size() ? c[k] : e.length;
        std::size_t s = segments.size();
        segments.push_back({prev, next, next_offset - prev_offset, EdgeId{i}, prev_offset});
        incident[prev].emplace_back(s, true);
        incident[next].emplace_back(s, false);
        prev = next;
        prev_offset = next_offset;
      }
    }
  }

  void add_node(const Point& p) {
    index.emplace(p, nodes.size());
    nodes.push_back(p);
  }

  std::size_t other_end(std::size_t s, bool at_a) const { return at_a ? segments[s].b : segments[s].a; }
};

struct Burn {
  std::vector<bool> node_burnt;
  std::vector<bool> segment_burnt;
  std::vector<long> arrivals;
  bool all_burnt = true;
};

Burn burn_from(const NodeGraph& g, const std::vector<long>& chips, std::size_t q) {
  Burn burn{std::vector<bool>(g.nodes.size(), false), std::vector<bool>(g.segments.size(), false),
            std::vector<long>(g.nodes.size(), 0)};
  std::vector<std::size_t> stack{q};
  burn.node_burnt[q] = true;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto [s, at_a] : g.incident[x]) {
      if (burn.segment_burnt[s]) continue;
      burn.segment_burnt[s] = true;
      auto y = g.other_end(s, at_a);
      if (burn.node_burnt[y]) continue;
      if (++burn.arrivals[y] > chips[y]) {
        burn.node_burnt[y] = true;
        stack.push_back(y);
      }
    }
  }
  for (bool b : burn.node_burnt) burn.all_burnt = burn.all_burnt && b;
  return burn;
}

std::vector<Point> marks_of(const Divisor& d, const Point& q) {
  auto marks = d.support();
  marks.push_back(q);
  return marks;
}

constexpr long kMaxFirings = 2'000'000;

Divisor reduce_effective(const TropicalCurve& curve, Divisor d, const Point& q) {
  for (long step = 0; step < kMaxFirings; ++step) {
    NodeGraph g(curve, marks_of(d, q));
    std::vector<long> chips(g.nodes.size(), 0);
    for (const auto& [p, m] : d.chips()) chips[g.index.at(p)] = m;
    auto burn = burn_from(g, chips, g.index.at(q));
    if (burn.all_burnt) return d;

    // The unburnt set fires: each boundary direction moves one chip a distance delta.
    std::optional<Rational> delta;
    for (std::size_t x = 0; x < g.nodes.size(); ++x) {
      if (burn.node_burnt[x]) continue;
      for (auto [s, at_a] : g.incident[x])
        if (burn.segment_burnt[s] && (!delta || g.segments[s].length < *delta)) delta = g.segments[s].length;
    }
    if (!delta) throw InvariantViolation("unburnt region without boundary");
    for (std::size_t x = 0; x < g.nodes.size(); ++x) {
      if (burn.node_burnt[x] || burn.arrivals[x] == 0) continue;
      d.add(g.nodes[x], -burn.arrivals[x]);
      for (auto [s, at_a] : g.incident[x]) {
        if (!burn.segment_burnt[s]) continue;
        const auto& seg = g.segments[s];
        Rational offset = at_a ? Rational(seg.offset_a + *delta) : Rational(seg.offset_a + seg.length - *delta);
        d.add(curve.point_on_edge(seg.edge, offset), 1);
      }
    }
  }
  throw InvariantViolation("Dhar reduction did not terminate within the firing budget");
}

}  // namespace

bool is_q_reduced(const TropicalCurve& curve, const Divisor& d, const Point& q) {
  validate(curve, d);
  curve.validate(q);
  for (const auto& [p, m] : d.chips())
    if (m < 0 && !(p == q)) return false;
  NodeGraph g(curve, marks_of(d, q));
  std::vector<long> chips(g.nodes.size(), 0);
  for (const auto& [p, m] : d.chips()) chips[g.index.at(p)] = m;
  return burn_from(g, chips, g.index.at(q)).all_burnt;
}

std::optional<Divisor> subtract_effective(const TropicalCurve& curve, const Divisor& e, const Divisor& removed) {
  if (!e.is_effective() || !removed.is_effective()) throw DomainError("subtract_effective needs effective divisors");
  if (removed.degree() > e.degree()) return std::nullopt;
  Divisor current = e;
  for (const auto& [p, m] : removed.chips()) {
    current = reduce_effective(curve, std::move(current), p);
    if (current.coefficient(p) < m) return std::nullopt;
    current.add(p, -m);
  }
  return current;
}

std::optional<Divisor> effective_representative(const TropicalCurve& curve, const Divisor& d) {
  validate(curve, d);
  return subtract_effective(curve, d.positive_part(), d.negative_part());
}

bool equivalent_to_effective(const TropicalCurve& curve, const Divisor& d) {
  return effective_representative(curve, d).has_value();
}

ReducedForm dhar_reduce(const TropicalCurve& curve, const Divisor& d, const Point& q) {
  validate(curve, d);
  curve.validate(q);
  if (d.is_effective()) return {reduce_effective(curve, d, q), q};
  // Trade each negative chip n*p for an effective B ~ (n+g)q - np, then
  // reduce the effective d + m q and remove the m chips at q again.
  const long g = curve.betti();
  Divisor e = d.positive_part();
  long m = 0;
  const Divisor negative = d.negative_part();
  for (const auto& [p, n] : negative.chips()) {
    Divisor r = reduce_effective(curve, Divisor::single(q, n + g), p);
    if (r.coefficient(p) < n) throw InvariantViolation("degree-g divisor not equivalent to an effective one");
    r.add(p, -n);
    e += r;
    m += n + g;
  }
  Divisor reduced = reduce_effective(curve, std::move(e), q);
  reduced.add(q, -m);
  return {reduced, q};
}

namespace {

/// Solves A x = b exactly; A is square and nonsingular.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InvariantViolation("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

std::optional<PLFunction> solve_potential(const TropicalCurve& curve, const Divisor& d) {
  validate(curve, d);
  if (d.degree() != 0) return std::nullopt;
  NodeGraph g(curve, d.support());
  const std::size_t n = g.nodes.size();
  // div f(x) = sum over segments at x of (f(x) - f(y)) / length: the weighted Laplacian.
  std::vector<std::vector<Rational>> lap(n - 1, std::vector<Rational>(n - 1, Rational(0)));
  std::vector<Rational> rhs(n - 1, Rational(0));
  for (const auto& seg : g.segments) {
    if (seg.a == seg.b) continue;
    Rational w = 1 / seg.length;
    if (seg.a > 0) lap[seg.a - 1][seg.a - 1] += w;
    if (seg.b > 0) lap[seg.b - 1][seg.b - 1] += w;
    if (seg.a > 0 && seg.b > 0) {
      lap[seg.a - 1][seg.b - 1] -= w;
      lap[seg.b - 1][seg.a - 1] -= w;
    }
  }
  for (const auto& [p, m] : d.chips()) {
    auto i = g.index.at(p);
    if (i > 0) rhs[i - 1] = m;
  }
  std::vector<Rational> f(n, Rational(0));
  if (n > 1) {
    auto x = solve_linear(std::move(lap), std::move(rhs));
    for (std::size_t i = 1; i < n; ++i) f[i] = x[i - 1];
  }
  std::vector<std::vector<Knot>> knots(curve.num_edges());
  for (const auto& seg : g.segments) {
    if (!is_integer((f[seg.b] - f[seg.a]) / seg.length)) return std::nullopt;
    auto& list = knots[seg.edge.value];
    if (list.empty()) list.push_back({seg.offset_a, f[seg.a]});
    list.push_back({seg.offset_a + seg.length, f[seg.b]});
  }
  std::vector<Rational> vertex_values(f.begin(), f.begin() + static_cast<long>(curve.num_vertices()));
  return PLFunction(curve, std::move(vertex_values), std::move(knots));
}

Equivalence is_equivalent(const TropicalCurve& curve, const Divisor& d1, const Divisor& d2) {
  auto f = solve_potential(curve, d1 - d2);
  return {f.has_value(), std::move(f)};
}

}  // namespace tropbn
