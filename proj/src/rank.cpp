#include "tropbn/rank.hpp"

#include <algorithm>
#include <functional>

#include "tropbn/error.hpp"
#include "tropbn/reduce.hpp"

namespace tropbn {

std::vector<Point> loopless_vertex_set(const TropicalCurve& curve) {
  auto out = curve.vertex_points();
  for (std::size_t i = 0; i < curve.num_edges(); ++i) {
    const auto& e = curve.edge(EdgeId{i});
    if (e.is_loop()) out.push_back(Point::interior(EdgeId{i}, e.length / 2));
  }
  return out;
}

RankEngine::RankEngine(TropicalCurve curve)
    : curve_(std::move(curve)), rds_(loopless_vertex_set(curve_)), base_(Point::at(VertexId{0})) {}

int RankEngine::rank_pure(const Divisor& d) {
  validate(curve_, d);
  auto rep = effective_representative(curve_, d);
  if (!rep) return -1;
  return rank_of_reduced(dhar_reduce(curve_, *rep, base_).divisor);
}

int RankEngine::rank_of_reduced(const Divisor& reduced) {
  if (auto it = memo_.find(reduced); it != memo_.end()) return it->second;
  // r(D) = 1 + min over a in the rank-determining set of r(D - a), and r(D) <= deg D.
  long best = reduced.degree();
  for (const auto& a : rds_) {
    if (best == 0) break;
    auto rest = subtract_effective(curve_, reduced, Divisor::single(a));
    if (!rest) {
      best = 0;
      break;
    }
    int sub = rank_of_reduced(dhar_reduce(curve_, *rest, base_).divisor);
    best = std::min<long>(best, 1 + sub);
  }
  memo_.emplace(reduced, static_cast<int>(best));
  return static_cast<int>(best);
}

int RankEngine::rank_weighted(const Divisor& d) {
  validate(curve_, d);
  std::vector<std::pair<Point, int>> weighted;
  for (std::size_t v = 0; v < curve_.num_vertices(); ++v)
    if (int w = curve_.vertex(VertexId{v}).weight; w > 0) weighted.emplace_back(Point::at(VertexId{v}), w);
  int total = 0;
  for (const auto& [p, w] : weighted) total += w;

  // Enumerate F by increasing degree; deg F + r(D - 2F) >= deg F - 1 allows an early stop.
  std::optional<int> best;
  for (int k = 0; k <= total; ++k) {
    if (best && k - 1 >= *best) break;
    std::vector<int> f(weighted.size(), 0);
    std::function<void(std::size_t, int)> visit = [&](std::size_t i, int left) {
      if (i == weighted.size()) {
        if (left != 0) return;
        Divisor twice_f;
        for (std::size_t j = 0; j < weighted.size(); ++j) twice_f.add(weighted[j].first, 2L * f[j]);
        int value = k + rank_pure(d - twice_f);
        if (!best || value < *best) best = value;
        return;
      }
      for (int x = 0; x <= std::min(left, weighted[i].second); ++x) {
        f[i] = x;
        visit(i + 1, left - x);
      }
      f[i] = 0;
    };
    visit(0, k);
  }
  return *best;
}

int rank_pure(const TropicalCurve& curve, const Divisor& d) {
  if (!curve.is_pure()) throw DomainError("rank_pure needs a curve with all weights zero");
  return RankEngine(curve).rank_pure(d);
}

int rank_weighted(const TropicalCurve& curve, const Divisor& d) { return RankEngine(curve).rank_weighted(d); }

int rank_weighted_loops(const TropicalCurve& curve, const Divisor& d, const Rational& eps) {
  validate(curve, d);
  // Points of the original curve keep their ids on the curve with loops attached.
  return RankEngine(attach_loops(curve, eps)).rank_pure(d);
}

std::vector<Divisor> effective_divisors(const std::vector<Point>& points, long degree) {
  std::vector<Divisor> out;
  if (degree < 0) return out;
  Divisor current;
  std::function<void(std::size_t, long)> visit = [&](std::size_t i, long left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    if (i == points.size()) return;
    for (long x = left; x >= 0; --x) {
      current.add(points[i], x);
      visit(i + 1, left - x);
      current.add(points[i], -x);
    }
  };
  visit(0, degree);
  return out;
}

int weighted_A_rank(const TropicalCurve& curve, const Divisor& d, const std::vector<Point>& a) {
  validate(curve, d);
  for (const auto& p : a) curve.validate(p);
  auto rep = effective_representative(curve, d);
  if (!rep) return -1;
  for (long r = 1; r <= d.degree() + 1; ++r) {
    for (const auto& e : effective_divisors(a, r)) {
      Divisor removed = star(curve, e);
      if (!subtract_effective(curve, *rep, removed)) return static_cast<int>(r - 1);
    }
  }
  throw InvariantViolation("weighted A-rank exceeded the degree");
}

int rose_rank(int g, long d) {
  if (d < 0) return -1;
  if (d > 2L * g) return static_cast<int>(d - g);
  return static_cast<int>(d / 2);
}

Divisor canonical(const TropicalCurve& curve) {
  Divisor k;
  for (std::size_t v = 0; v < curve.num_vertices(); ++v) {
    VertexId id{v};
    k.add(Point::at(id), curve.valence(id) - 2 + 2L * curve.vertex(id).weight);
  }
  return k;
}

}  // namespace tropbn
