#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "tropbn/brill_noether.hpp"
#include "tropbn/curve.hpp"
#include "tropbn/divisor.hpp"
#include "tropbn/subcurve.hpp"

namespace tropbn::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file; DomainError on a missing file or bad syntax.
Json read_file(const std::string& path);

Json to_json(const Rational& q);
/// Accepts "p/q" strings and integers.
Rational rational_from_json(const Json& j);

Json to_json(const TropicalCurve& curve);
TropicalCurve curve_from_json(const Json& j);

Json to_json(const TropicalCurve& curve, const Point& p);
/// {"vertex": id} or {"edge": id, "offset": q}; offsets at an edge end become that vertex.
Point point_from_json(const TropicalCurve& curve, const Json& j);

/// "v1" or "e1@1/3", the format of TropicalCurve::describe.
Point parse_point(const TropicalCurve& curve, const std::string& text);

/// {"chips": [...]}; curve_ref fills the "curve" key when non-empty.
Json to_json(const TropicalCurve& curve, const Divisor& d, const std::string& curve_ref = "");
/// Accepts a divisor object or a bare chip list.
Divisor divisor_from_json(const TropicalCurve& curve, const Json& j);

Json to_json(const CombinatorialType& type);
/// Curve format without lengths (any lengths present are ignored).
CombinatorialType type_from_json(const Json& j);

/// {"vertices": [...], "intervals": [{"edge", "lo", "hi"}]}.
Json to_json(const Subcurve& lambda);
Subcurve subcurve_from_json(std::shared_ptr<const TropicalCurve> parent, const Json& j);

/// A degeneration run: the spec plus the experiment parameters.
struct SpecFile {
  DegenerationSpec spec;
  long d = 0;
  int r = 0;
  int rho = 0;
  int resolution = 3;
};

/// {"name", "type", "contracted": [edge ids], "base"?, "pattern": chips on the unit curve,
///  "steps"?, "d", "r", "rho"?, "resolution"?}. d defaults to the pattern degree.
SpecFile spec_from_json(const Json& j);
Json to_json(const SpecFile& file);

Json to_json(const ExperimentReport& report);

}  // namespace tropbn::io
