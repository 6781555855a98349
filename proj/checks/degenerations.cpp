#include "degenerations.hpp"

namespace tropbn::checks {

namespace {

CombinatorialType make_type(const std::vector<std::string>& names,
                            const std::vector<std::tuple<std::string, std::size_t, std::size_t>>& edges) {
  std::vector<Vertex> vertices;
  for (const auto& n : names) vertices.push_back({n, 0});
  std::vector<CombinatorialType::EdgeEnds> ends;
  for (const auto& [name, a, b] : edges) ends.push_back({name, VertexId{a}, VertexId{b}});
  return CombinatorialType(std::move(vertices), std::move(ends));
}

}  // namespace

std::vector<NamedType> degeneration_families() {
  return {
      {"dumbbell", make_type({"a", "b"}, {{"la", 0, 0}, {"br", 0, 1}, {"lb", 1, 1}})},
      {"theta_tail", make_type({"x", "y", "t"}, {{"e1", 0, 1}, {"e2", 0, 1}, {"e3", 0, 1}, {"tail", 1, 2}})},
      {"chain3", make_type({"v0", "v1", "v2", "v3"},
                           {{"a1", 0, 1}, {"b1", 0, 1}, {"a2", 1, 2}, {"b2", 1, 2}, {"a3", 2, 3}, {"b3", 2, 3}})},
      {"wedge", make_type({"c", "p", "q"}, {{"p1", 0, 1}, {"p2", 0, 1}, {"q1", 0, 2}, {"q2", 0, 2}})},
      {"k4", make_type({"a", "b", "c", "d"},
                       {{"ab", 0, 1}, {"ac", 0, 2}, {"ad", 0, 3}, {"bc", 1, 2}, {"bd", 1, 3}, {"cd", 2, 3}})},
  };
}

DegenerationSpec random_spec(Rng& rng, const NamedType& family, long degree, int steps) {
  const auto& type = family.type;
  std::size_t n = type.num_edges();
  std::set<std::size_t> contracted;
  while (contracted.empty())
    for (std::size_t e = 0; e < n; ++e)
      if (uniform_int(rng, 0, 2) == 0) contracted.insert(e);
  std::vector<Rational> base;
  for (std::size_t e = 0; e < n; ++e) base.push_back(random_length(rng));
  TropicalCurve unit = type.unit_curve();
  Divisor pattern = random_divisor(rng, unit, degree, 0, true);
  std::string name = family.family + "/Z=";
  for (auto e : contracted) name += type.edges()[e].name + ",";
  name.pop_back();
  return DegenerationSpec{name, type, contracted, base, pattern, steps};
}

}  // namespace tropbn::checks
