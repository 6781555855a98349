#include <doctest.h>

#include "helpers.hpp"
#include "tropbn/error.hpp"
#include "tropbn/subcurve.hpp"

using namespace tropbn;
using namespace tropbn::test;

TEST_CASE("neighbourhoods of a vertex in a triangle") {
  auto tri = share(cycle({1, 1, 1}));
  Subcurve v = Subcurve::point(tri, at(0));

  Subcurve zero = neighborhood(v, 0);
  CHECK(zero == v);

  Subcurve small = neighborhood(v, Rational(1, 4));
  CHECK(small.contains(on(*tri, 0, Rational(1, 4))));
  CHECK_FALSE(small.contains(on(*tri, 0, Rational(1, 3))));
  CHECK(small.contains(on(*tri, 2, Rational(3, 4))));
  CHECK(small.length() == Rational(1, 2));
  CHECK(small.betti() == 0);
  CHECK(deformation_retracts(small, v));

  // Radius 1 reaches both other vertices; the far edge is at distance up to 3/2.
  Subcurve one = neighborhood(v, 1);
  CHECK(one.contains(at(1)));
  CHECK(one.contains(at(2)));
  CHECK_FALSE(one.contains(on(*tri, 1, Rational(1, 2))));
  CHECK(one.betti() == 0);
  CHECK(deformation_retracts(one, v));

  Subcurve big = neighborhood(v, Rational(3, 2));
  CHECK(big == Subcurve::whole(tri));
  CHECK(big.betti() == 1);
  CHECK_FALSE(deformation_retracts(big, v));

  Subcurve half = neighborhood(v, Rational(1, 2));
  CHECK_FALSE(half.contains(on(*tri, 1, Rational(1, 2))));
  CHECK(deformation_retracts(half, v));
}

TEST_CASE("subcurve structure") {
  auto c = share(TropicalCurve({{"a", 1}, {"b", 0}, {"c", 2}},
                               {{"l", V(0), V(0), 1}, {"ab", V(0), V(1), 4}, {"bc", V(1), V(2), 1}}));
  Subcurve lam = Subcurve::induced(c, {V(0)});
  CHECK(lam.contains_whole_edge(E(0)));
  CHECK(lam.betti() == 1);
  CHECK(lam.genus() == 2);
  CHECK(lam.length() == 1);
  CHECK(lam.weighted_vertices_outside() == std::vector<VertexId>{V(2)});
  auto dirs = lam.outward_directions();
  REQUIRE(dirs.size() == 1);
  CHECK(dirs[0].edge == E(1));
  CHECK(dirs[0].forward);
  CHECK(lam.boundary() == std::vector<Point>{at(0)});

  Subcurve grown = neighborhood(lam, 1);
  CHECK(grown.contains(lam));
  CHECK_FALSE(lam.contains(grown));
  CHECK(grown.boundary() == std::vector<Point>{on(*c, 1, 1)});
  CHECK(distance_to(lam, at(2)) == 5);
  CHECK(deformation_retracts(grown, lam));
  Subcurve all = neighborhood(lam, 5);
  CHECK(all == Subcurve::whole(c));
  CHECK(deformation_retracts(all, lam));
  CHECK(all.weighted_vertices_outside().empty());
}

TEST_CASE("subcurve intervals are normalised and checked") {
  auto seg = share(path({2}));
  std::vector<std::vector<Interval>> pieces = {{{Rational(1, 2), 1}, {1, Rational(3, 2)}}};
  Subcurve s(seg, {}, pieces);
  CHECK(s.intervals(E(0)).size() == 1);
  CHECK(s.intervals(E(0))[0].lo == Rational(1, 2));
  CHECK(s.intervals(E(0))[0].hi == Rational(3, 2));
  CHECK(s.length() == 1);
  CHECK(s.boundary().size() == 2);

  std::vector<std::vector<Interval>> apart = {{{0, Rational(1, 2)}, {1, 2}}};
  CHECK_THROWS_AS(Subcurve(seg, {}, apart), DomainError);
}

TEST_CASE("the model of a subcurve is a curve") {
  auto c = share(theta({0, 1}, {1, 2, 3}));
  std::vector<std::vector<Interval>> pieces = {{{0, 1}}, {{0, 2}}, {{0, 1}}};
  Subcurve s(c, {V(0), V(1)}, pieces);
  CHECK(s.betti() == 1);
  CHECK(s.genus() == 2);
  auto model = s.model();
  CHECK(model.curve().num_edges() == 3);
  CHECK(genus(model.curve()) == 2);
  Point inner = on(*c, 2, Rational(1, 2));
  CHECK(model.to_parent(model.from_parent(*c, inner)) == inner);
}
