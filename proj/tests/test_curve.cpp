#include <doctest.h>

#include "helpers.hpp"
#include "tropbn/error.hpp"

using namespace tropbn;
using namespace tropbn::test;

TEST_CASE("genus counts cycles and weights") {
  CHECK(genus(theta()) == 2);
  CHECK(genus(rose(4)) == 4);
  CHECK(genus(path({1, 2, Rational(1, 2)})) == 0);
  CHECK(genus(theta({1, 2})) == 5);
  CHECK(theta({1, 2}).betti() == 2);
}

TEST_CASE("construction rejects malformed curves") {
  CHECK_THROWS_AS(TropicalCurve({}, {}), DomainError);
  CHECK_THROWS_AS(TropicalCurve(named(2), {{"e", V(0), V(1), -1}}), DomainError);
  CHECK_THROWS_AS(TropicalCurve(named(2), {{"e", V(0), V(1), 0}}), DomainError);
  CHECK_THROWS_AS(TropicalCurve(named(2), {}), DomainError);  // disconnected
  CHECK_THROWS_AS(TropicalCurve({{"a", 0}, {"a", 0}}, {{"e", V(0), V(1), 1}}), DomainError);
  CHECK_THROWS_AS(TropicalCurve({{"a", -1}}, {}), DomainError);
  CHECK_THROWS_AS(TropicalCurve(named(2), {{"e", V(0), V(2), 1}}), DomainError);
}

TEST_CASE("points normalize at edge ends") {
  TropicalCurve c = path({Rational(3, 2)});
  CHECK(c.point_on_edge(E(0), 0) == at(0));
  CHECK(c.point_on_edge(E(0), Rational(3, 2)) == at(1));
  CHECK_FALSE(c.point_on_edge(E(0), Rational(1, 2)).is_vertex());
  CHECK_THROWS_AS(c.point_on_edge(E(0), 2), DomainError);
  CHECK(c.describe(on(c, 0, Rational(1, 3))) == "e0@1/3");
  CHECK(c.distance(at(0), on(c, 0, Rational(1, 3))) == Rational(1, 3));
}

TEST_CASE("distances go around cycles the short way") {
  TropicalCurve c = cycle({1, 2, 3});
  CHECK(c.distance(at(0), at(2)) == 3);
  CHECK(c.distance(on(c, 1, 1), on(c, 2, 2)) == 3);
  CHECK(c.total_length() == 6);
}

TEST_CASE("underlying_pure zeroes weights only") {
  CHECK(underlying_pure(rose(3)).vertex(V(0)).weight == 0);
  CHECK(underlying_pure(rose(3)).num_edges() == 0);
  TropicalCurve t = underlying_pure(theta({1, 2}, {1, 2, 3}));
  CHECK(t.is_pure());
  CHECK(t.edge(E(2)).length == 3);
  CHECK(underlying_pure(theta()).num_edges() == 3);
}

TEST_CASE("attach_loops replaces weights by loops") {
  TropicalCurve r = attach_loops(rose(3), 1);
  CHECK(r.num_vertices() == 1);
  CHECK(r.num_edges() == 3);
  CHECK(r.is_pure());
  for (const auto& e : r.edges()) CHECK(e.length == 1);

  TropicalCurve t = attach_loops(theta({1, 0}), Rational(1, 2));
  CHECK(t.num_edges() == 4);
  CHECK(t.edge(E(3)).is_loop());
  CHECK(t.edge(E(3)).tail == V(0));
  CHECK(t.edge(E(3)).length == Rational(1, 2));
  CHECK(genus(t) == genus(theta({1, 0})));

  CHECK(attach_loops(theta(), 1).num_edges() == 3);
}

TEST_CASE("loopless model splits loops at their midpoints") {
  Refinement r = loopless_model(petals(3));
  CHECK(r.curve().num_vertices() == 4);
  CHECK(r.curve().num_edges() == 6);
  for (const auto& e : r.curve().edges()) {
    CHECK(e.length == Rational(1, 2));
    CHECK_FALSE(e.is_loop());
  }

  Refinement single = loopless_model(loop(Rational(2, 3)));
  CHECK(single.curve().num_vertices() == 2);
  CHECK(single.curve().num_edges() == 2);
  CHECK(single.curve().edge(E(0)).length == Rational(1, 3));
  CHECK(single.curve().edge(E(1)).length == Rational(1, 3));
  Point mid = on(loop(Rational(2, 3)), 0, Rational(1, 3));
  CHECK(single.forward(mid).is_vertex());
  CHECK(single.backward(single.forward(mid)) == mid);

  TropicalCurve t = theta();
  Refinement same = loopless_model(t);
  CHECK(same.curve().num_edges() == 3);
  CHECK(same.forward(on(t, 1, Rational(1, 4))) == on(same.curve(), 1, Rational(1, 4)));
}

TEST_CASE("subdivide cuts edges at marks") {
  TropicalCurve seg = path({1});
  Refinement none = subdivide(seg, std::vector<Point>{});
  CHECK(none.curve().num_edges() == 1);

  std::vector<Point> marks = {on(seg, 0, Rational(1, 3))};
  Refinement r = subdivide(seg, marks);
  REQUIRE(r.curve().num_edges() == 2);
  CHECK(r.curve().edge(E(0)).length == Rational(1, 3));
  CHECK(r.curve().edge(E(1)).length == Rational(2, 3));
  CHECK(r.forward(marks[0]).is_vertex());
  Point later = on(seg, 0, Rational(1, 2));
  CHECK(r.backward(r.forward(later)) == later);

  TropicalCurve tri = cycle({1, 1, 1});
  std::vector<Point> mids = {on(tri, 0, Rational(1, 2)), on(tri, 1, Rational(1, 2)), on(tri, 2, Rational(1, 2))};
  Refinement hex = subdivide(tri, mids);
  CHECK(hex.curve().num_vertices() == 6);
  CHECK(hex.curve().num_edges() == 6);
  CHECK(genus(hex.curve()) == 1);
  CHECK(hex.curve().total_length() == 3);
}

TEST_CASE("lattice points") {
  TropicalCurve t = theta();
  CHECK(lattice_points(t, 1).size() == 2);
  auto pts = lattice_points(t, 3);
  CHECK(pts.size() == 2 + 3 * 2);
  CHECK(std::find(pts.begin(), pts.end(), on(t, 2, Rational(2, 3))) != pts.end());
}

TEST_CASE("realize contracts edges and records genus as weight") {
  // Loop at a weight-0 vertex.
  CombinatorialType lp = CombinatorialType::of(loop());
  Realization r = realize(lp, ConeVector({0}));
  CHECK(r.curve().num_vertices() == 1);
  CHECK(r.curve().num_edges() == 0);
  CHECK(r.curve().vertex(V(0)).weight == 1);

  // Bridge between weights 1 and 2.
  CombinatorialType br = CombinatorialType::of(path({1}, {1, 2}));
  Realization b = realize(br, ConeVector({0}));
  CHECK(b.curve().num_vertices() == 1);
  CHECK(b.curve().vertex(V(0)).weight == 3);
  CHECK(b.curve().vertex(V(0)).name == "v0+v1");

  // Everything contracted: R_g.
  CombinatorialType th = CombinatorialType::of(theta());
  Realization all = realize(th, ConeVector({0, 0, 0}));
  CHECK(all.curve().num_vertices() == 1);
  CHECK(all.curve().vertex(V(0)).weight == 2);
  CHECK(genus(all.curve()) == th.genus());

  // Partial contraction of the theta graph keeps genus: two loops survive.
  Realization part = realize(th, ConeVector({0, 1, 2}));
  CHECK(part.curve().num_vertices() == 1);
  CHECK(part.curve().num_edges() == 2);
  CHECK(genus(part.curve()) == 2);
  CHECK(part.map(on(th.unit_curve(), 0, Rational(1, 2))) == at(0));
  CHECK(part.map(on(th.unit_curve(), 2, Rational(1, 2))) == on(part.curve(), 1, 1));
  CHECK(part.collapsed_onto(V(0)).size() == 2);
}

TEST_CASE("rescale scales offsets") {
  CombinatorialType seg = CombinatorialType::of(path({1}));
  Realization id = rescale(seg, ConeVector({1}));
  CHECK(id.curve().edge(E(0)).length == 1);
  Point half = on(seg.unit_curve(), 0, Rational(1, 2));
  CHECK(id.map(half) == half);

  Realization r = rescale(seg, ConeVector({Rational(3, 2)}));
  CHECK(r.map(half) == on(r.curve(), 0, Rational(3, 4)));
  CHECK(r.preimage(on(r.curve(), 0, Rational(3, 4))) == half);

  CombinatorialType tri = CombinatorialType::of(cycle({1, 1, 1}));
  CHECK(rescale(tri, ConeVector({2, 2, 2})).curve().total_length() == 6);
  CHECK_THROWS_AS(rescale(tri, ConeVector({2, 0, 2})), DomainError);
  CHECK_THROWS_AS(ConeVector({1, -1}), DomainError);
}
