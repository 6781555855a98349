#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "tropbn/jacobian.hpp"
#include "tropbn/reduce.hpp"

using namespace tropbn;
using namespace tropbn::test;

TEST_CASE("cycle basis") {
  CHECK(cycle_basis(path({1, 2})).genus() == 0);
  CycleBasis c = cycle_basis(loop());
  REQUIRE(c.genus() == 1);
  CHECK(c.cycles[0] == std::vector<long>{1});
  CHECK_FALSE(c.tree_edge[0]);

  CycleBasis t = cycle_basis(theta());
  REQUIRE(t.genus() == 2);
  for (const auto& cyc : t.cycles) {
    long nonzero = 0;
    for (long a : cyc) nonzero += a != 0;
    CHECK(nonzero == 2);
  }
  // Every cycle closes up: the signed boundary vanishes at each vertex.
  TropicalCurve th = theta();
  for (const auto& cyc : t.cycles) {
    std::vector<long> boundary(th.num_vertices(), 0);
    for (std::size_t e = 0; e < cyc.size(); ++e) {
      boundary[th.edge(E(e)).head.value] += cyc[e];
      boundary[th.edge(E(e)).tail.value] -= cyc[e];
    }
    for (long b : boundary) CHECK(b == 0);
  }
}

TEST_CASE("scaled cycles and Gram matrix") {
  CycleBasis t = cycle_basis(theta());
  auto ones = scale_cycles(t, ConeVector({1, 1, 1}));
  for (std::size_t i = 0; i < t.genus(); ++i)
    for (std::size_t e = 0; e < 3; ++e) CHECK(ones[i][e] == Rational(t.cycles[i][e]));
  auto zero = scale_cycles(t, ConeVector({0, 1, 1}));
  for (std::size_t i = 0; i < t.genus(); ++i) CHECK(zero[i][0] == 0);
  auto twice = scale_cycles(t, ConeVector({2, 2, 2}));
  for (std::size_t i = 0; i < t.genus(); ++i)
    for (std::size_t e = 0; e < 3; ++e) CHECK(twice[i][e] == 2 * ones[i][e]);

  auto q = gram_matrix(theta({}, {1, 2, 3}), t);
  CHECK(q[0][1] == q[1][0]);
  CHECK(q[0][0] > 0);
}

TEST_CASE("Abel-Jacobi on a circle") {
  TropicalCurve circle = loop(1);
  CHECK(abel_jacobi(circle, Divisor(), at(0)) == std::vector<Rational>{0});
  for (long k = 1; k < 6; ++k) {
    Rational x = ratio(k, 6);
    auto t = abel_jacobi(circle, Divisor::single(on(circle, 0, x)) - Divisor::single(at(0)), at(0));
    REQUIRE(t.size() == 1);
    CHECK((t[0] == x || t[0] == 1 - x));
  }
  // 2p - 2q for antipodal points is principal.
  auto anti = abel_jacobi(circle, Divisor::single(on(circle, 0, Rational(1, 2)), 2) - Divisor::single(at(0), 2), at(0));
  CHECK(anti == std::vector<Rational>{0});
}

TEST_CASE("Abel-Jacobi detects equivalence on theta graphs") {
  checks::Rng rng(21);
  TropicalCurve t = theta({}, {1, Rational(3, 2), Rational(2, 3)});
  int equal = 0;
  for (int i = 0; i < 100; ++i) {
    Divisor d1 = checks::random_divisor(rng, t, 2, 1, false);
    Divisor d2 = (i % 2 == 0) ? dhar_reduce(t, d1, checks::random_point(rng, t, true)).divisor
                              : checks::random_divisor(rng, t, 2, 1, false);
    bool same = abel_jacobi(t, d1 - d2, at(0)) == std::vector<Rational>{0, 0};
    CHECK(same == is_equivalent(t, d1, d2).equivalent);
    equal += same;
  }
  CHECK(equal >= 50);
}

TEST_CASE("universal coordinates") {
  CombinatorialType th = CombinatorialType::of(theta());
  Point p = at(0);
  UniversalCoords base = universal_coords(th, ConeVector({1, 1, 1}), Divisor::single(p, 3), p);
  CHECK(base.degree == 3);
  CHECK(base.t == std::vector<Rational>{0, 0});

  // On an interior cone point the coordinates agree with the Abel-Jacobi map of Gamma_s.
  ConeVector s({2, 1, Rational(1, 2)});
  Realization r = realize(th, s);
  TropicalCurve unit = th.unit_curve();
  Divisor d = chips({{on(unit, 0, Rational(1, 3)), 1}, {at(1), 1}});
  UniversalCoords u = universal_coords(th, s, d, p);
  CHECK(u.t == abel_jacobi(r.curve(), pushforward_class(r, d) - Divisor::single(r.map(p), 2), r.map(p)));

  // Contracting one loop of a genus 2 chain leaves one coordinate.
  CombinatorialType chain = CombinatorialType::of(
      TropicalCurve(named(2), {{"a", V(0), V(0), 1}, {"b", V(0), V(1), 1}, {"c", V(1), V(1), 1}}));
  UniversalCoords c = universal_coords(chain, ConeVector({0, 1, 1}), Divisor::single(at(1)), at(0));
  CHECK(c.t.size() == 1);
}

TEST_CASE("pushforward") {
  CombinatorialType th = CombinatorialType::of(theta());
  TropicalCurve unit = th.unit_curve();

  Realization scaled = realize(th, ConeVector({2, 2, 2}));
  Divisor d = Divisor::single(on(unit, 1, Rational(1, 4)));
  Divisor pushed = pushforward_class(scaled, d);
  CHECK(pushed == Divisor::single(on(scaled.curve(), 1, Rational(1, 2))));

  Realization contracted = realize(th, ConeVector({0, 1, 1}));
  Divisor on_contracted = Divisor::single(on(unit, 0, Rational(1, 2)), 2);
  Divisor image = pushforward_class(contracted, on_contracted);
  REQUIRE(image.support().size() == 1);
  CHECK(image.support()[0].is_vertex());
  CHECK(image.degree() == 2);

  // A principal divisor supported on a contracted edge pushes forward to zero.
  TropicalCurve lp = TropicalCurve(named(1), {{"a", V(0), V(0), 1}, {"b", V(0), V(0), 1}});
  CombinatorialType rose2 = CombinatorialType::of(lp);
  Realization half = realize(rose2, ConeVector({0, 1}));
  Divisor tent = Divisor::single(on(rose2.unit_curve(), 0, Rational(1, 2)), 2) - Divisor::single(at(0), 2);
  CHECK(pushforward_class(half, tent).is_zero());
}
