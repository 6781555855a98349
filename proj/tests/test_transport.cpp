#include <doctest.h>

#include "helpers.hpp"
#include "tropbn/error.hpp"
#include "tropbn/reduce.hpp"
#include "tropbn/transport.hpp"

using namespace tropbn;
using namespace tropbn::test;

namespace {

// Loops of length loop_len at a and b joined by a bridge.
TropicalCurve dumbbell(const Rational& loop_len, const Rational& bridge, const Rational& far_loop) {
  return TropicalCurve(named(2), {{"la", V(0), V(0), loop_len}, {"ab", V(0), V(1), bridge}, {"lb", V(1), V(1), far_loop}});
}

void require_sound(const TransportResult& r, const Divisor& input) {
  for (const auto& c : r.checks) INFO(c.name << ": " << c.detail);
  CHECK(r.ok());
  CHECK(r.divisor.is_effective());
  CHECK(r.divisor.degree() == input.degree());
  CHECK(is_equivalent(r.region.parent(), r.divisor, input).equivalent);
  if (r.witness) CHECK(r.divisor == input + r.witness->div(r.region.parent()));
}

}  // namespace

TEST_CASE("slope bound") {
  TropicalCurve seg = path({1});
  PLFunction f = PLFunction::linear(seg, {0, 3});
  CHECK(slope_bound_check(f, 3));
  CHECK_FALSE(slope_bound_check(f, 2));
  CHECK(slope_bound_check(PLFunction::constant(seg, 5), 0));
}

TEST_CASE("pushing pulls chips onto a small loop") {
  auto c = share(TropicalCurve(named(3), {{"ab", V(0), V(1), 5},
                                          {"bc", V(1), V(2), 5},
                                          {"ca", V(2), V(0), 5},
                                          {"l", V(0), V(0), Rational(1, 10)}}));
  Subcurve lambda = Subcurve::induced(c, {V(0)});
  Divisor d = Divisor::single(on(*c, 1, Rational(5, 2)), 2);
  TransportResult r = push_single(d, lambda, Divisor::single(at(0)), Rational(1, 10));
  require_sound(r, d);
  CHECK(r.region.contains(lambda));
  CHECK(restrict(r.divisor, r.region).degree() >= 1);
  REQUIRE(r.find("contains_estar"));
  CHECK(r.find("contains_estar")->passed);

  TransportResult nothing = push_single(d, lambda, Divisor(), Rational(1, 10));
  require_sound(nothing, d);

  Subcurve all = Subcurve::whole(c);
  TransportResult whole = push_single(d, all, Divisor::single(on(*c, 3, Rational(1, 20))), Rational(1, 10));
  require_sound(whole, d);
  // E* moves the loop point to its base vertex.
  CHECK(equivalent_to_effective(*c, whole.divisor - star(*c, Divisor::single(on(*c, 3, Rational(1, 20))))));
}

TEST_CASE("concentrating onto a point of a path") {
  auto c = share(path({100}));
  Subcurve lambda = Subcurve::point(c, at(0));
  Divisor d = Divisor::single(at(1));
  TransportResult zero = concentrate(d, lambda, 0, Rational(1, 10));
  require_sound(zero, d);

  TransportResult one = concentrate(d, lambda, 1, Rational(1, 10));
  require_sound(one, d);
  CHECK(restrict(one.divisor, one.region).degree() == 1);
  CHECK(one.region.contains(one.divisor.support()[0]));
}

TEST_CASE("concentrating onto a small loop of a dumbbell") {
  auto c = share(dumbbell(Rational(1, 100), 20, 1));
  Subcurve lambda = Subcurve::induced(c, {V(0)});
  Divisor d = Divisor::single(at(1), 3);
  TransportResult r = concentrate(d, lambda, 1, Rational(1, 100));
  require_sound(r, d);
  CHECK(restrict(r.divisor, r.region).degree() >= 2);
  CHECK(rank_on_region(r.divisor, r.region) >= 1);
  CHECK(r_lambda(1, lambda) == 2);
}

TEST_CASE("concentrate rejects regions that do not retract") {
  auto c = share(dumbbell(Rational(1, 100), Rational(1, 100), Rational(1, 100)));
  Subcurve lambda = Subcurve::induced(c, {V(0)});
  CHECK_THROWS_AS(concentrate(Divisor::single(at(1), 3), lambda, 1, Rational(1, 100)), DomainError);
}

TEST_CASE("diluting") {
  auto seg = share(path({3}));
  Subcurve a = Subcurve::point(seg, at(0));
  Divisor e = Divisor::single(at(0), 3);
  TransportResult same = dilute(e, a, 3, Divisor::single(at(1), 3));
  CHECK(same.ok());
  CHECK(same.divisor == e);

  TransportResult r = dilute(e, a, 1, Divisor::single(at(1), 3));
  require_sound(r, e);
  CHECK(restrict(r.divisor, r.region).degree() == 1);
  CHECK(r.region.contains(a));

  // Star x - c - y: moving 3c to 2x + y leaves along slopes 2 and 1.
  auto star = share(TropicalCurve(named(3), {{"cx", V(0), V(1), 1}, {"cy", V(0), V(2), 1}}));
  Subcurve center = Subcurve::point(star, at(0));
  Divisor e3 = Divisor::single(at(0), 3);
  TransportResult partial = dilute(e3, center, 1, chips({{at(1), 2}, {at(2), 1}}));
  require_sound(partial, e3);
  CHECK(restrict(partial.divisor, partial.region).degree() == 1);

  CHECK_THROWS_AS(dilute(e, a, 1, Divisor::single(at(0), 3)), DomainError);
}

TEST_CASE("confinement search") {
  // Loop at a with a bridge to b: chips at a slide down the bridge, the antipode of a does not.
  auto c = share(TropicalCurve(named(2), {{"l", V(0), V(0), 1}, {"ab", V(0), V(1), 1}}));
  Subcurve lambda = Subcurve::induced(c, {V(0)});
  ConfinementReport none = confinement_search(lambda, 0, 2, 1000);
  REQUIRE(none.candidate);
  CHECK(none.candidate->is_zero());

  ConfinementReport one = confinement_search(lambda, 1, 2, 1000);
  REQUIRE(one.candidate);
  CHECK(one.candidate->degree() == 1);
  CHECK(*one.candidate != Divisor::single(at(0)));
  // Independent check: no lattice point outside is equivalent to the candidate.
  for (const auto& p : lattice_points(*c, 2))
    if (!lambda.contains(p)) CHECK_FALSE(is_equivalent(*c, *one.candidate, Divisor::single(p)).equivalent);
  CHECK(one.tests_used <= one.budget);
}

TEST_CASE("confinement on a theta with a tail") {
  auto c = share(TropicalCurve(named(3), {{"e0", V(0), V(1), 1}, {"e1", V(0), V(1), 1}, {"e2", V(0), V(1), 1},
                                          {"t", V(1), V(2), 1}}));
  Subcurve lambda = Subcurve::induced(c, {V(0), V(1)});
  ConfinementReport rep = confinement_search(lambda, 2, 2, 20000);
  if (rep.candidate) {
    CHECK(rep.candidate->degree() == 2);
    for (const auto& [p, m] : rep.candidate->chips()) CHECK(lambda.contains(p));
    for (const auto& p : lattice_points(*c, 2))
      if (!lambda.contains(p)) CHECK_FALSE(equivalent_to_effective(*c, *rep.candidate - Divisor::single(p)));
  }
  MESSAGE("theta candidate: " << (rep.candidate ? std::string("found") : std::string("none")) << ", tests " << rep.tests_used);
}

TEST_CASE("arranging on several subcurves") {
  auto p = share(path({10, 10}));
  Divisor d = Divisor::single(at(1), 2);
  TransportResult single = arrange_multi(d, {{Subcurve::point(p, at(0)), 1, Rational(1, 10)}});
  require_sound(single, d);

  TransportResult both = arrange_multi(
      d, {{Subcurve::point(p, at(0)), 1, Rational(1, 10)}, {Subcurve::point(p, at(2)), 1, Rational(1, 10)}});
  require_sound(both, d);
  Rational cap = pushing_radius(Rational(1, 10), 2, 1);
  CHECK(restrict(both.divisor, neighborhood(Subcurve::point(p, at(0)), cap)).degree() >= 1);
  CHECK(restrict(both.divisor, neighborhood(Subcurve::point(p, at(2)), cap)).degree() >= 1);

  auto db = share(dumbbell(Rational(1, 100), 100, Rational(1, 100)));
  Divisor four = Divisor::single(on(*db, 1, 50), 4);
  TransportResult loops = arrange_multi(four, {{Subcurve::induced(db, {V(0)}), 1, Rational(1, 1000)},
                                               {Subcurve::induced(db, {V(1)}), 1, Rational(1, 1000)}});
  require_sound(loops, four);
}
