#include <memory>

#include "criteria.hpp"
#include "criteria_util.hpp"
#include "generators.hpp"
#include "tropbn/rank.hpp"
#include "tropbn/transport.hpp"

namespace tropbn::checks {

namespace {

struct Setup {
  std::shared_ptr<const TropicalCurve> curve;
  Subcurve lambda;
  Rational eps;
};

/// A small subcurve at vertex a, a bridge of length 10, and a random genus <= 2 piece beyond it.
Setup random_setup(Rng& rng) {
  const Rational eps(1, 100);
  const Rational small[] = {Rational(1, 100), Rational(1, 200)};
  std::vector<Vertex> vertices = {{"a", 0}, {"b", 0}};
  std::vector<Edge> edges;
  const VertexId a{0}, b{1};
  int kind = uniform_int(rng, 0, 3);
  switch (kind) {
    case 0:
      edges.push_back({"l", a, a, small[uniform_int(rng, 0, 1)]});
      break;
    case 1:
      vertices.push_back({"a2", 0});
      for (int i = 0; i < 3; ++i) edges.push_back({"t" + std::to_string(i), a, VertexId{2}, small[uniform_int(rng, 0, 1)]});
      break;
    case 2:
      edges.push_back({"l1", a, a, small[uniform_int(rng, 0, 1)]});
      edges.push_back({"l2", a, a, small[uniform_int(rng, 0, 1)]});
      break;
    default:
      vertices[0].weight = 1;
      break;
  }
  edges.push_back({"bridge", a, b, Rational(10)});
  switch (uniform_int(rng, 0, 2)) {
    case 0:
      edges.push_back({"lb", b, b, random_length(rng)});
      break;
    case 1: {
      VertexId c{vertices.size()};
      vertices.push_back({"c", 1});
      edges.push_back({"bc", b, c, random_length(rng)});
      break;
    }
    default: {
      VertexId c{vertices.size()};
      vertices.push_back({"c", 0});
      edges.push_back({"bc1", b, c, random_length(rng)});
      edges.push_back({"bc2", b, c, random_length(rng)});
      break;
    }
  }
  auto curve = std::make_shared<const TropicalCurve>(std::move(vertices), std::move(edges));
  std::set<VertexId> inside = {a};
  if (kind == 1) inside.insert(VertexId{2});
  return {curve, Subcurve::induced(curve, inside), eps};
}

Point random_point_on(Rng& rng, const Subcurve& lambda) {
  std::vector<Point> options;
  for (auto v : lambda.vertices()) options.push_back(Point::at(v));
  const auto& curve = lambda.parent();
  for (std::size_t e = 0; e < curve.num_edges(); ++e)
    for (const auto& s : lambda.intervals(EdgeId{e})) {
      options.push_back(curve.point_on_edge(EdgeId{e}, (s.lo + s.hi) / 2));
      options.push_back(curve.point_on_edge(EdgeId{e}, (3 * s.lo + s.hi) / 4));
    }
  return options.at(uniform_int(rng, 0, static_cast<int>(options.size()) - 1));
}

void record(CriterionResult& result, const char* op, const std::string& where, const TransportResult& t) {
  ++result.instances;
  for (const auto& c : t.checks)
    if (!c.passed) note_failure(result, std::string(op) + " " + where + ": " + c.name + " " + c.detail);
}

}  // namespace

CriterionResult transport_postconditions(const CriterionOptions& options) {
  auto result = make_result(8, "transport", "push, concentrate and dilute postconditions", scaled(50, options), 600);
  Timer timer;
  Rng rng(options.seed + 8);
  long pushes = 0, concentrations = 0, dilutions = 0, no_escape = 0;
  while (result.instances < result.required) {
    Setup setup = random_setup(rng);
    const auto& curve = *setup.curve;
    long d = uniform_int(rng, 2, 3);
    Divisor D = random_divisor(rng, curve, d, 0, true);
    int rank = rank_weighted(curve, D);
    if (rank < 1) continue;
    int r = uniform_int(rng, 1, std::min(rank, 2));
    std::string where = setup.lambda.describe() + " D=" + describe(curve, D) + " r=" + std::to_string(r);

    Divisor E;
    for (int i = uniform_int(rng, 1, r); i > 0; --i) E.add(random_point_on(rng, setup.lambda), 1);
    record(result, "push_single", where, push_single(D, setup.lambda, E, setup.eps));
    ++pushes;

    TransportResult conc = concentrate(D, setup.lambda, r, setup.eps);
    record(result, "concentrate", where, conc);
    ++concentrations;

    long k = r;
    if (restrict(conc.divisor, conc.region).degree() > k) {
      if (auto escape = find_escape(conc.divisor, conc.region, k, 2, 20000)) {
        record(result, "dilute", where, dilute(conc.divisor, conc.region, k, *escape));
        ++dilutions;
      } else {
        ++no_escape;
      }
    }
  }
  result.notes.push_back(std::to_string(pushes) + " pushes, " + std::to_string(concentrations) + " concentrations, " +
                         std::to_string(dilutions) + " dilutions, " + std::to_string(no_escape) +
                         " regions with no lattice escape");
  result.seconds = timer.seconds();
  return result;
}

}  // namespace tropbn::checks
