#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "tropbn/brill_noether.hpp"
#include "tropbn/error.hpp"

using namespace tropbn;
using namespace tropbn::test;

namespace {

// Every effective divisor on R_g is m v, contained in d v; so the value follows from the rank of d v.
int rose_bn(int g, long d, int r) { return d >= r + std::min(r, g) ? static_cast<int>(d - r) : -1; }

TropicalCurve two_loops() {
  return TropicalCurve(named(2), {{"la", V(0), V(0), 1}, {"ab", V(0), V(1), 1}, {"lb", V(1), V(1), 1}});
}

}  // namespace

TEST_CASE("membership in W^r_d") {
  TropicalCurve circle = loop();
  CHECK(wdr_member(circle, Divisor::single(at(0), 2), 1));
  CHECK_FALSE(wdr_member(circle, Divisor::single(at(0), 2), 2));
  CHECK(wdr_member(rose(2), Divisor::single(at(0), 2), 1));
  CHECK_FALSE(wdr_member(rose(2), Divisor::single(at(0), 1), 1));
}

TEST_CASE("Brill-Noether rank of roses") {
  CHECK(bn_rank(rose(3), {4, 2, 2}) == 2);
  for (int g = 0; g <= 4; ++g)
    for (long d = 0; d <= 10; ++d)
      for (int r = 0; r <= 4; ++r) {
        CAPTURE(g);
        CAPTURE(d);
        CAPTURE(r);
        CHECK(bn_rank(rose(g), {d, r, 2}) == rose_bn(g, d, r));
      }
}

TEST_CASE("Brill-Noether rank on metric graphs") {
  CHECK(bn_rank(loop(), {1, 1, 4}) == -1);
  CHECK(bn_rank(loop(), {2, 1, 4}) == 1);
  TropicalCurve t = theta();
  for (long d = 0; d <= 3; ++d) CHECK(bn_rank(t, {d, 0, 2}) == d);
  for (long d = 1; d <= 4; ++d) {
    int previous = bn_rank(t, {d, 0, 2});
    for (int r = 1; r <= 2; ++r) {
      int value = bn_rank(t, {d, r, 2});
      CHECK(value <= d - r);
      CHECK(value <= previous);
      previous = value;
    }
  }
  BNResult detail = bn_rank_detail(t, {2, 1, 2});
  CHECK(detail.rho == 0);
  REQUIRE(detail.counterexample);
  CHECK(detail.counterexample->degree() == 2);
  CHECK(detail.rank_calls > 0);

  BNResult fine = bn_rank_detail(t, {2, 1, 4});
  MESSAGE("theta w^1_2 at N=2: " << detail.rho << ", at N=4: " << fine.rho);
}

TEST_CASE("result does not depend on the worker count") {
  TropicalCurve c = two_loops();
  ::setenv("TROPBN_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  BNResult one = bn_rank_detail(c, {3, 1, 2});
  ::setenv("TROPBN_THREADS", "4", 1);
  CHECK(worker_count() == 4);
  BNResult four = bn_rank_detail(c, {3, 1, 2});
  ::unsetenv("TROPBN_THREADS");
  CHECK(one.rho == four.rho);
  CHECK(one.counterexample.has_value() == four.counterexample.has_value());
  if (one.counterexample && four.counterexample) CHECK(*one.counterexample == *four.counterexample);
}

TEST_CASE("degeneration steps") {
  CombinatorialType type = CombinatorialType::of(two_loops());
  DegenerationSpec spec{"chain", type, {1}, {}, Divisor::single(at(0), 2), 3};
  CHECK(spec.step(0).entries() == std::vector<Rational>{1, 1, 1});
  CHECK(spec.step(2).entries() == std::vector<Rational>{1, Rational(1, 4), 1});
  CHECK(spec.limit().entries() == std::vector<Rational>{1, 0, 1});
  validate(spec);

  DegenerationSpec bad = spec;
  bad.contracted = {7};
  CHECK_THROWS_AS(validate(bad), DomainError);
  bad = spec;
  bad.base = {1, 2};
  CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("closedness experiments") {
  CombinatorialType bell = CombinatorialType::of(two_loops());
  DegenerationSpec bridge{"dumbbell", bell, {1}, {}, Divisor::single(at(0), 2), 4};
  ExperimentReport r = run_closedness_experiment(bridge, 2, 1);
  CHECK(r.steps.size() == 4);
  CHECK_FALSE(r.vacuous);
  CHECK(r.pass);
  CHECK(r.limit_value >= 1);
  CHECK_THROWS_AS(run_closedness_experiment(bridge, 3, 1), DomainError);

  // K4 with five edges contracted: the canonical class stays canonical.
  TropicalCurve k4(named(4), {{"ab", V(0), V(1), 1},
                              {"ac", V(0), V(2), 1},
                              {"ad", V(0), V(3), 1},
                              {"bc", V(1), V(2), 1},
                              {"bd", V(1), V(3), 1},
                              {"cd", V(2), V(3), 1}});
  DegenerationSpec k{"k4", CombinatorialType::of(k4), {0, 1, 2, 3, 4}, {}, chips({{at(0), 1}, {at(1), 1}, {at(2), 1}, {at(3), 1}}), 3};
  ExperimentReport kr = run_closedness_experiment(k, 4, 1);
  CHECK(kr.pass);
  CHECK(kr.limit_value == 2);
  for (const auto& s : kr.steps) CHECK(s.value == 2);

  DegenerationSpec constant{"constant", bell, {}, {}, Divisor::single(at(1), 2), 2};
  ExperimentReport cr = run_closedness_experiment(constant, 2, 1);
  CHECK(cr.pass);
  for (const auto& s : cr.steps) CHECK(s.value == cr.limit_value);
}

TEST_CASE("upper semicontinuity experiments") {
  CombinatorialType circle = CombinatorialType::of(loop());
  DegenerationSpec shrink{"circle", circle, {0}, {}, Divisor(), 3};
  ExperimentReport c = run_usc_experiment(shrink, 2, 1, 0, 3);
  for (const auto& s : c.steps) CHECK(s.value == 1);
  CHECK(c.limit_value == 1);
  CHECK(c.pass);

  CombinatorialType chain = CombinatorialType::of(two_loops());
  DegenerationSpec all{"chain", chain, {0, 1, 2}, {}, Divisor(), 2};
  ExperimentReport ch = run_usc_experiment(all, 2, 1, 0, 2);
  for (const auto& s : ch.steps) CHECK(s.value == 0);
  CHECK(ch.limit_value == 1);
  CHECK(ch.pass);

  DegenerationSpec constant{"constant", chain, {}, {}, Divisor(), 2};
  ExperimentReport k = run_usc_experiment(constant, 2, 1, 0, 2);
  CHECK(k.pass);
  CHECK(k.limit_value == k.steps.front().value);
}
