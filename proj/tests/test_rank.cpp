#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "tropbn/error.hpp"
#include "tropbn/rank.hpp"

using namespace tropbn;
using namespace tropbn::test;

TEST_CASE("rank of small examples") {
  TropicalCurve circle = loop(1);
  CHECK(rank_pure(circle, Divisor::single(at(0), -1)) == -1);
  CHECK(rank_pure(circle, Divisor()) == 0);
  CHECK(rank_pure(circle, Divisor::single(at(0))) == 0);
  CHECK(rank_pure(circle, Divisor::single(at(0), 2)) == 1);
  CHECK(rank_pure(circle, Divisor::single(on(circle, 0, Rational(1, 3)), 3)) == 2);

  TropicalCurve tree = path({1, 2});
  CHECK(rank_pure(tree, Divisor::single(on(tree, 1, 1), 3)) == 3);

  // On the theta graph the canonical class is the hyperelliptic g^1_2.
  TropicalCurve t = theta();
  CHECK(rank_pure(t, chips({{at(0), 1}, {at(1), 1}})) == 1);
  CHECK(rank_pure(t, Divisor::single(at(0), 2)) == 0);
  CHECK(rank_pure(t, chips({{at(0), 1}, {on(t, 0, Rational(1, 2)), 1}})) == 0);
}

TEST_CASE("rose formula") {
  CHECK(rose_rank(3, 7) == 4);
  CHECK(rose_rank(3, 5) == 2);
  CHECK(rose_rank(3, 6) == 3);
  CHECK(rose_rank(3, -1) == -1);
  for (long d = 0; d <= 6; ++d) CHECK(rose_rank(0, d) == d);
  for (int g = 0; g <= 4; ++g)
    for (long d = 0; d <= 10; ++d) {
      Divisor D = Divisor::single(at(0), d);
      CHECK(rank_weighted(rose(g), D) == rose_rank(g, d));
      CHECK(rank_weighted_loops(rose(g), D, 1) == rose_rank(g, d));
      CHECK(rank_weighted_loops(rose(g), D, Rational(1, 2)) == rose_rank(g, d));
      CHECK(rank_pure(petals(g), D) == rose_rank(g, d));
    }
}

TEST_CASE("weighted rank reduces to the pure rank without weights") {
  checks::Rng rng(3);
  checks::CurveShape shape;
  shape.max_weight = 0;
  for (int i = 0; i < 40; ++i) {
    TropicalCurve c = checks::random_curve(rng, shape);
    Divisor d = checks::random_divisor(rng, c, checks::uniform_int(rng, -1, 4), 1, true);
    CHECK(rank_weighted(c, d) == rank_pure(c, d));
    CHECK(rank_weighted_loops(c, d, Rational(1, 3)) == rank_pure(c, d));
  }
  CHECK_THROWS_AS(rank_pure(rose(1), Divisor()), DomainError);
}

TEST_CASE("weighted theta graph") {
  TropicalCurve t = theta({1, 0});
  Divisor d = Divisor::single(at(0), 2);
  CHECK(rank_weighted(t, d) == rank_weighted_loops(t, d, 1));
  CHECK(rank_weighted_loops(t, d, Rational(1, 2)) == rank_weighted_loops(t, d, 1));
  // The weight at v0 does not help points on the theta edges.
  CHECK(rank_weighted(t, d) == 0);
  // deg 4 = 2g - 2 but 4 v0 is not canonical (K = 3 v0 + v1), so Riemann-Roch gives g - 2.
  CHECK(canonical(t) == chips({{at(0), 3}, {at(1), 1}}));
  CHECK(rank_weighted(t, Divisor::single(at(0), 4)) == 1);
  CHECK(rank_weighted(t, canonical(t)) == 2);
  CHECK(rank_weighted(t, Divisor::single(at(1), 2)) == 0);
}

TEST_CASE("rank over a finite set") {
  TropicalCurve t = theta({0, 2});
  RankEngine engine(t);
  CHECK(engine.rank_determining_set() == loopless_vertex_set(t));
  Divisor d = chips({{at(1), 3}, {on(t, 0, Rational(1, 2)), 1}});
  CHECK(weighted_A_rank(t, d, loopless_vertex_set(t)) == rank_weighted(t, d));
  CHECK(weighted_A_rank(t, Divisor::single(at(0)), {on(t, 2, Rational(1, 3))}) >= 0);
  for (int g = 0; g <= 3; ++g)
    for (long d2 = 0; d2 <= 7; ++d2)
      CHECK(weighted_A_rank(rose(g), Divisor::single(at(0), d2), {at(0)}) == rose_rank(g, d2));
}

TEST_CASE("canonical divisor") {
  CHECK(canonical(cycle({1, 1})).is_zero());
  CHECK(canonical(theta()) == chips({{at(0), 1}, {at(1), 1}}));
  for (int g = 0; g <= 4; ++g) CHECK(canonical(rose(g)) == Divisor::single(at(0), 2 * g - 2));
  CHECK(canonical(path({1}, {1, 0})) == chips({{at(0), 1}, {at(1), -1}}));
  CHECK(canonical(theta({1, 2})).degree() == 2 * genus(theta({1, 2})) - 2);
}

TEST_CASE("Riemann-Roch on a sample") {
  checks::Rng rng(8);
  checks::CurveShape shape;
  for (int i = 0; i < 40; ++i) {
    TropicalCurve c = checks::random_curve(rng, shape);
    Divisor d = checks::random_divisor(rng, c, checks::uniform_int(rng, -3, 6), 1, true);
    RankEngine engine(c);
    CHECK(engine.rank_weighted(d) - engine.rank_weighted(canonical(c) - d) == d.degree() - genus(c) + 1);
  }
}

TEST_CASE("effective divisor enumeration") {
  std::vector<Point> pts = {at(0), at(1), at(2)};
  CHECK(effective_divisors(pts, 0).size() == 1);
  CHECK(effective_divisors(pts, 2).size() == 6);
  CHECK(effective_divisors(pts, 3).size() == 10);
  for (const auto& d : effective_divisors(pts, 3)) CHECK(d.degree() == 3);
}
