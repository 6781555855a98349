#include <chrono>
#include <cmath>
#include <sstream>

#include "criteria.hpp"
#include "criteria_util.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "tropbn/jacobian.hpp"
#include "tropbn/rank.hpp"
#include "tropbn/reduce.hpp"

namespace tropbn::checks {

namespace {

// The rose R_g with D = d v, written out independently of the library.
int expected_rose(int g, long d) {
  if (d < 0) return -1;
  return d > 2 * g ? static_cast<int>(d - g) : static_cast<int>(d / 2);
}

TropicalCurve rose(int g) { return TropicalCurve({{"v", g}}, {}); }

}  // namespace

CriterionResult rose_table(const CriterionOptions&) {
  auto result = make_result(1, "rose", "rose table", 6 * 13 * 3, 10);
  Timer timer;
  for (int g = 0; g <= 5; ++g) {
    TropicalCurve curve = rose(g);
    RankEngine engine(curve);
    for (long d = 0; d <= 12; ++d) {
      Divisor D = Divisor::single(Point::at(VertexId{0}), d);
      int want = expected_rose(g, d);
      int got[3] = {engine.rank_weighted(D), rank_weighted_loops(curve, D, Rational(1)),
                    rank_weighted_loops(curve, D, Rational(1, 3))};
      const char* how[3] = {"weighted", "loops eps=1", "loops eps=1/3"};
      for (int k = 0; k < 3; ++k) {
        ++result.instances;
        if (got[k] != want)
          note_failure(result, "g=" + std::to_string(g) + " d=" + std::to_string(d) + " " + how[k] + ": " +
                                   std::to_string(got[k]) + " != " + std::to_string(want));
      }
    }
  }
  result.seconds = timer.seconds();
  return result;
}

CriterionResult riemann_roch(const CriterionOptions& options) {
  auto result = make_result(2, "riemann_roch", "Riemann-Roch", scaled(500, options), 300);
  Timer timer;
  Rng rng(options.seed + 2);
  CurveShape shape;
  while (result.instances < result.required) {
    TropicalCurve curve = random_curve(rng, shape);
    int g = genus(curve);
    long degree = uniform_int(rng, -6, 6);
    Divisor d = random_divisor(rng, curve, degree, uniform_int(rng, 0, 2), true);
    if (std::labs(d.degree()) > 6) continue;
    Divisor k = canonical(curve);
    RankEngine engine(curve);
    int lhs = engine.rank_weighted(d) - engine.rank_weighted(k - d);
    long rhs = d.degree() - g + 1;
    ++result.instances;
    if (lhs != rhs) note_failure(result, describe(curve, d) + " on genus " + std::to_string(g));
  }
  result.seconds = timer.seconds();
  return result;
}

CriterionResult cross_definition(const CriterionOptions& options) {
  auto result = make_result(3, "cross_definition", "weighted rank = rank with loops", scaled(200, options), 300);
  Timer timer;
  Rng rng(options.seed + 3);
  CurveShape shape;
  const Rational eps_choices[] = {Rational(1), Rational(1, 2), Rational(1, 3)};
  while (result.instances < result.required) {
    TropicalCurve curve = random_curve(rng, shape);
    if (curve.is_pure()) continue;
    Divisor d = random_divisor(rng, curve, uniform_int(rng, -1, 5), uniform_int(rng, 0, 1), true);
    const Rational& eps = eps_choices[uniform_int(rng, 0, 2)];
    int a = rank_weighted(curve, d), b = rank_weighted_loops(curve, d, eps);
    ++result.instances;
    if (a != b)
      note_failure(result, describe(curve, d) + ": " + std::to_string(a) + " vs " + std::to_string(b) + " at eps " +
                               to_string(eps));
  }
  result.seconds = timer.seconds();
  return result;
}

CriterionResult oracle_equivalence(const CriterionOptions&) {
  auto result = make_result(4, "oracle", "pure rank = brute-force oracle", 10000, 600);
  Timer timer;
  auto graphs = small_graphs(4, 5);
  for (const auto& curve : graphs) {
    FiniteGraph finite = midpoint_subdivision(curve);
    RankEngine engine(curve);
    std::size_t n = curve.num_vertices();
    std::vector<long> c(n, -2);
    while (true) {
      long degree = 0;
      for (auto x : c) degree += x;
      if (degree >= -1 && degree <= 4) {
        Divisor d;
        for (std::size_t i = 0; i < n; ++i) d.add(Point::at(VertexId{i}), c[i]);
        int a = engine.rank_pure(d), b = brute_force_rank(finite, chip_vector(curve, d));
        ++result.instances;
        if (a != b) note_failure(result, describe(curve, d) + ": " + std::to_string(a) + " vs " + std::to_string(b));
      }
      std::size_t i = 0;
      while (i < n && c[i] == 4) c[i++] = -2;
      if (i == n) break;
      ++c[i];
    }
  }
  result.notes.push_back(std::to_string(graphs.size()) + " graphs up to isomorphism");
  result.seconds = timer.seconds();
  return result;
}

CriterionResult weighted_rds(const CriterionOptions& options) {
  auto result = make_result(5, "weighted_rds", "rank over the loopless vertex set", scaled(200, options), 300);
  Timer timer;
  Rng rng(options.seed + 5);
  CurveShape shape;
  while (result.instances < result.required) {
    TropicalCurve curve = random_curve(rng, shape);
    Divisor d = random_divisor(rng, curve, uniform_int(rng, -1, 5), uniform_int(rng, 0, 1), true);
    int a = weighted_A_rank(curve, d, loopless_vertex_set(curve)), b = rank_weighted(curve, d);
    ++result.instances;
    if (a != b) note_failure(result, describe(curve, d) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
  result.seconds = timer.seconds();
  return result;
}

CriterionResult abel_jacobi_consistency(const CriterionOptions& options) {
  auto result = make_result(9, "abel_jacobi", "Abel-Jacobi equality = reduced-form equality", scaled(300, options), 120);
  Timer timer;
  Rng rng(options.seed + 9);
  CurveShape shape;
  shape.max_weight = 0;
  long equal = 0;
  while (result.instances < result.required) {
    TropicalCurve curve = random_curve(rng, shape);
    Point base = random_point(rng, curve, true);
    Divisor d1 = random_divisor(rng, curve, 0, uniform_int(rng, 1, 3), true);
    Divisor d2;
    switch (uniform_int(rng, 0, 2)) {
      case 0:
        d2 = random_divisor(rng, curve, 0, uniform_int(rng, 1, 3), true);
        break;
      default: {
        // Same class: reduce d1 - (point) + (point) at a random base.
        Point p = random_point(rng, curve, true);
        d2 = dhar_reduce(curve, d1, p).divisor;
        break;
      }
    }
    Point q = Point::at(VertexId{0});
    bool reduced_equal = dhar_reduce(curve, d1, q).divisor == dhar_reduce(curve, d2, q).divisor;
    bool aj_equal = abel_jacobi(curve, d1, base) == abel_jacobi(curve, d2, base);
    ++result.instances;
    equal += reduced_equal;
    if (reduced_equal != aj_equal)
      note_failure(result, describe(curve, d1) + " vs " + describe(curve, d2) + ": reduced " +
                               std::to_string(reduced_equal) + ", AJ " + std::to_string(aj_equal));
  }
  result.notes.push_back(std::to_string(equal) + " equivalent pairs");
  result.seconds = timer.seconds();
  return result;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream out;
  out.precision(3);
  out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << " " << r.key << ": " << r.instances << "/" << r.required
      << " instances, " << r.failures << " failures, " << r.seconds << "s (limit " << r.time_limit << "s)";
  return out.str();
}

const std::vector<Criterion>& all_criteria() {
  static const std::vector<Criterion> list = {
      {1, "rose", rose_table},
      {2, "riemann_roch", riemann_roch},
      {3, "cross_definition", cross_definition},
      {4, "oracle", oracle_equivalence},
      {5, "weighted_rds", weighted_rds},
      {6, "closedness", closedness},
      {7, "usc", semicontinuity},
      {8, "transport", transport_postconditions},
      {9, "abel_jacobi", abel_jacobi_consistency},
  };
  return list;
}

}  // namespace tropbn::checks
