#include "tropbn/io.hpp"

#include <fstream>

#include "tropbn/error.hpp"

namespace tropbn::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw DomainError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
  return j.get<long>();
}

VertexId vertex_named(const TropicalCurve& curve, const std::string& name) {
  if (auto v = curve.find_vertex(name)) return *v;
  throw DomainError("unknown vertex \"" + name + "\"");
}

EdgeId edge_named(const TropicalCurve& curve, const std::string& name) {
  if (auto e = curve.find_edge(name)) return *e;
  throw DomainError("unknown edge \"" + name + "\"");
}

std::vector<Vertex> vertices_from(const Json& j) {
  std::vector<Vertex> out;
  const auto& list = field(j, "vertices");
  if (!list.is_array()) throw DomainError("\"vertices\" must be an array");
  for (const auto& v : list) {
    int weight = v.contains("weight") ? static_cast<int>(integer(v.at("weight"), "weight")) : 0;
    out.push_back({text(field(v, "id"), "vertex id"), weight});
  }
  return out;
}

std::pair<std::string, std::string> ends_of(const Json& e) {
  const auto& ends = field(e, "ends");
  if (!ends.is_array() || ends.size() != 2) throw DomainError("\"ends\" must list two vertices");
  return {text(ends[0], "edge end"), text(ends[1], "edge end")};
}

VertexId index_of(const std::vector<Vertex>& vertices, const std::string& name) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name == name) return VertexId{i};
  throw DomainError("unknown vertex \"" + name + "\"");
}

Json vertices_json(const std::vector<Vertex>& vertices) {
  Json out = Json::array();
  for (const auto& v : vertices) out.push_back({{"id", v.name}, {"weight", v.weight}});
  return out;
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw DomainError("rational must be a \"p/q\" string or an integer");
}

Json to_json(const TropicalCurve& curve) {
  Json edges = Json::array();
  for (const auto& e : curve.edges())
    edges.push_back({{"id", e.name},
                     {"ends", {curve.vertex(e.tail).name, curve.vertex(e.head).name}},
                     {"length", to_json(e.length)}});
  return {{"vertices", vertices_json(curve.vertices())}, {"edges", edges}};
}

TropicalCurve curve_from_json(const Json& j) {
  auto vertices = vertices_from(j);
  std::vector<Edge> edges;
  const auto& list = field(j, "edges");
  if (!list.is_array()) throw DomainError("\"edges\" must be an array");
  for (const auto& e : list) {
    auto [tail, head] = ends_of(e);
    edges.push_back({text(field(e, "id"), "edge id"), index_of(vertices, tail), index_of(vertices, head),
                     rational_from_json(field(e, "length"))});
  }
  return TropicalCurve(std::move(vertices), std::move(edges));
}

Json to_json(const TropicalCurve& curve, const Point& p) {
  if (p.is_vertex()) return {{"vertex", curve.vertex(p.vertex()).name}};
  return {{"edge", curve.edge(p.edge()).name}, {"offset", to_json(p.offset())}};
}

Point point_from_json(const TropicalCurve& curve, const Json& j) {
  if (j.is_string()) return Point::at(vertex_named(curve, j.get<std::string>()));
  if (j.contains("vertex")) return Point::at(vertex_named(curve, text(j.at("vertex"), "vertex")));
  EdgeId e = edge_named(curve, text(field(j, "edge"), "edge"));
  return curve.point_on_edge(e, rational_from_json(field(j, "offset")));
}

Point parse_point(const TropicalCurve& curve, const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos) return Point::at(vertex_named(curve, text));
  return curve.point_on_edge(edge_named(curve, text.substr(0, at)), parse_rational(text.substr(at + 1)));
}

Json to_json(const TropicalCurve& curve, const Divisor& d, const std::string& curve_ref) {
  Json chips = Json::array();
  for (const auto& [p, m] : d.chips()) chips.push_back({{"at", to_json(curve, p)}, {"mult", m}});
  Json out = {{"chips", chips}};
  if (!curve_ref.empty()) out["curve"] = curve_ref;
  return out;
}

Divisor divisor_from_json(const TropicalCurve& curve, const Json& j) {
  const Json& chips = j.is_array() ? j : field(j, "chips");
  if (!chips.is_array()) throw DomainError("\"chips\" must be an array");
  Divisor d;
  for (const auto& c : chips) d.add(point_from_json(curve, field(c, "at")), integer(field(c, "mult"), "mult"));
  return d;
}

Json to_json(const CombinatorialType& type) {
  Json edges = Json::array();
  for (const auto& e : type.edges())
    edges.push_back({{"id", e.name}, {"ends", {type.vertices().at(e.tail.value).name, type.vertices().at(e.head.value).name}}});
  return {{"vertices", vertices_json(type.vertices())}, {"edges", edges}};
}

CombinatorialType type_from_json(const Json& j) {
  auto vertices = vertices_from(j);
  std::vector<CombinatorialType::EdgeEnds> edges;
  const auto& list = field(j, "edges");
  if (!list.is_array()) throw DomainError("\"edges\" must be an array");
  for (const auto& e : list) {
    auto [tail, head] = ends_of(e);
    edges.push_back({text(field(e, "id"), "edge id"), index_of(vertices, tail), index_of(vertices, head)});
  }
  return CombinatorialType(std::move(vertices), std::move(edges));
}

Json to_json(const Subcurve& lambda) {
  const auto& curve = lambda.parent();
  Json vertices = Json::array();
  for (auto v : lambda.vertices()) vertices.push_back(curve.vertex(v).name);
  Json intervals = Json::array();
  for (std::size_t e = 0; e < curve.num_edges(); ++e)
    for (const auto& s : lambda.intervals(EdgeId{e}))
      intervals.push_back({{"edge", curve.edge(EdgeId{e}).name}, {"lo", to_json(s.lo)}, {"hi", to_json(s.hi)}});
  return {{"vertices", vertices}, {"intervals", intervals}};
}

Subcurve subcurve_from_json(std::shared_ptr<const TropicalCurve> parent, const Json& j) {
  const auto& curve = *parent;
  std::set<VertexId> vertices;
  if (j.contains("induced")) {
    for (const auto& v : j.at("induced")) vertices.insert(vertex_named(curve, text(v, "vertex")));
    return Subcurve::induced(parent, vertices);
  }
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices")) vertices.insert(vertex_named(curve, text(v, "vertex")));
  std::vector<std::vector<Interval>> intervals(curve.num_edges());
  if (j.contains("intervals"))
    for (const auto& s : j.at("intervals")) {
      EdgeId e = edge_named(curve, text(field(s, "edge"), "edge"));
      intervals[e.value].push_back({rational_from_json(field(s, "lo")), rational_from_json(field(s, "hi"))});
    }
  return Subcurve(std::move(parent), std::move(vertices), std::move(intervals));
}

SpecFile spec_from_json(const Json& j) {
  CombinatorialType type = type_from_json(field(j, "type"));
  TropicalCurve unit = type.unit_curve();
  std::set<std::size_t> contracted;
  if (j.contains("contracted"))
    for (const auto& e : j.at("contracted")) contracted.insert(edge_named(unit, text(e, "edge")).value);
  std::vector<Rational> base;
  if (j.contains("base"))
    for (const auto& b : j.at("base")) base.push_back(rational_from_json(b));
  Divisor pattern = j.contains("pattern") ? divisor_from_json(unit, j.at("pattern")) : Divisor();
  std::string name = j.contains("name") ? text(j.at("name"), "name") : std::string("spec");
  int steps = j.contains("steps") ? static_cast<int>(integer(j.at("steps"), "steps")) : 6;
  SpecFile file{DegenerationSpec{name, type, contracted, base, pattern, steps}};
  file.d = j.contains("d") ? integer(j.at("d"), "d") : pattern.degree();
  file.r = static_cast<int>(integer(field(j, "r"), "r"));
  if (j.contains("rho")) file.rho = static_cast<int>(integer(j.at("rho"), "rho"));
  if (j.contains("resolution")) file.resolution = static_cast<int>(integer(j.at("resolution"), "resolution"));
  validate(file.spec);
  return file;
}

Json to_json(const SpecFile& file) {
  const auto& spec = file.spec;
  TropicalCurve unit = spec.type.unit_curve();
  Json contracted = Json::array();
  for (auto e : spec.contracted) contracted.push_back(spec.type.edges().at(e).name);
  Json out = {{"name", spec.name},
              {"type", to_json(spec.type)},
              {"contracted", contracted},
              {"pattern", to_json(unit, spec.pattern)["chips"]},
              {"steps", spec.steps},
              {"d", file.d},
              {"r", file.r},
              {"rho", file.rho},
              {"resolution", file.resolution}};
  if (!spec.base.empty()) {
    Json base = Json::array();
    for (const auto& b : spec.base) base.push_back(to_json(b));
    out["base"] = base;
  }
  return out;
}

Json to_json(const ExperimentReport& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    Json lengths = Json::array();
    for (const auto& x : s.s) lengths.push_back(to_json(x));
    steps.push_back({{"step", s.index}, {"s", lengths}, {"value", s.value}});
  }
  Json out = {{"kind", report.kind}, {"name", report.name}, {"d", report.d},         {"r", report.r},
              {"steps", steps},      {"limit", report.limit_value}, {"vacuous", report.vacuous},
              {"pass", report.pass}, {"log", report.log}};
  if (report.kind == "usc") out["resolution"] = report.resolution;
  return out;
}

}  // namespace tropbn::io
