// Command-line front end for the tropbn library.
#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "criteria.hpp"
#include "tropbn/brill_noether.hpp"
#include "tropbn/error.hpp"
#include "tropbn/io.hpp"
#include "tropbn/jacobian.hpp"
#include "tropbn/rank.hpp"
#include "tropbn/reduce.hpp"
#include "tropbn/transport.hpp"

using namespace tropbn;
using io::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Global {
  std::string format = "json";
  std::string out;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

// Raised when the command ran but found a violated invariant (closedness FAIL, failed check).
struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// FNV-1a over the named input files.
std::string digest(const std::vector<std::string>& paths) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& p : paths) {
    for (unsigned char c : slurp(p) + '\0') {
      h ^= c;
      h *= 1099511628211ULL;
    }
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

TropicalCurve load_curve(const std::string& path) { return io::curve_from_json(io::read_file(path)); }

Divisor load_divisor(const TropicalCurve& curve, const std::string& path) {
  Divisor d = io::divisor_from_json(curve, io::read_file(path));
  validate(curve, d);
  return d;
}

ConeVector parse_cone(const std::string& text) {
  std::vector<Rational> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) entries.push_back(parse_rational(item));
  return ConeVector(std::move(entries));
}

void emit_csv_scalars(std::ostream& out, const Json& report) {
  out << "key,value\n";
  for (const auto& [key, value] : report.items())
    if (value.is_primitive()) out << key << "," << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

void emit_csv_table(std::ostream& out, const Json& report) {
  out << "step,s,value,limit\n";
  for (const auto& step : report.at("steps")) {
    std::string s;
    for (const auto& x : step.at("s")) s += (s.empty() ? "" : " ") + x.get<std::string>();
    out << step.at("step") << "," << s << "," << step.at("value") << "," << report.at("limit") << "\n";
  }
}

void emit(const Global& g, Json report) {
  if (g.timing)
    report["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - g.start).count();
  std::ofstream file;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) throw DomainError("cannot write " + g.out);
  }
  std::ostream& out = g.out.empty() ? std::cout : file;
  if (g.format == "csv") {
    if (report.contains("steps") && report.at("steps").is_array()) emit_csv_table(out, report);
    else emit_csv_scalars(out, report);
  } else {
    out << report.dump(2) << "\n";
  }
}

Json header(const std::string& command, const std::vector<std::string>& inputs) {
  return {{"command", command}, {"version", kVersion}, {"inputs_digest", digest(inputs)}};
}

Json checks_json(const TransportResult& t) {
  Json checks = Json::array();
  for (const auto& c : t.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisors, ranks and Brill-Noether loci on weighted tropical curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "write the report to this file");
  app.add_flag("--timing", g.timing, "add elapsed seconds (breaks byte-for-byte reproducibility)");

  std::string curve_path, divisor_path, d1_path, d2_path, type_path, cone, basepoint, q_text, eps_text = "1";
  std::string subcurve_path, e_path, target_path, targets_path, spec_path, filter, radius_text;
  bool pure = false, weighted = false, quick = false, inject = false;
  std::string loops_eps;
  long degree = 0, k = 0, budget = 20000;
  int r = 0, resolution = 4;
  std::uint64_t seed = checks::CriterionOptions{}.seed;

  auto* rank = app.add_subcommand("rank", "rank of a divisor");
  rank->add_option("--curve", curve_path)->required();
  rank->add_option("--divisor", divisor_path)->required();
  auto* pure_flag = rank->add_flag("--pure", pure, "ignore vertex weights");
  auto* weighted_flag = rank->add_flag("--weighted", weighted, "weighted rank (default)");
  auto* loops_opt = rank->add_option("--loops", loops_eps, "weighted rank through loops of length EPS");
  pure_flag->excludes(weighted_flag)->excludes(loops_opt);
  weighted_flag->excludes(loops_opt);

  auto* reduce = app.add_subcommand("reduce", "q-reduced representative");
  reduce->add_option("--curve", curve_path)->required();
  reduce->add_option("--divisor", divisor_path)->required();
  reduce->add_option("--q", q_text, "base point, \"v\" or \"e@x\"")->required();

  auto* equiv = app.add_subcommand("equiv", "linear equivalence");
  equiv->add_option("--curve", curve_path)->required();
  equiv->add_option("--d1", d1_path)->required();
  equiv->add_option("--d2", d2_path)->required();

  auto* star_cmd = app.add_subcommand("star", "E* = sum of b + min(b, w)");
  star_cmd->add_option("--curve", curve_path)->required();
  star_cmd->add_option("--divisor", divisor_path)->required();

  auto* aj = app.add_subcommand("aj", "Abel-Jacobi coordinates of a degree-0 divisor");
  aj->add_option("--curve", curve_path)->required();
  aj->add_option("--divisor", divisor_path)->required();
  aj->add_option("--basepoint", basepoint)->required();

  auto* ucoords = app.add_subcommand("ucoords", "coordinates on the universal Jacobian");
  ucoords->add_option("--type", type_path)->required();
  ucoords->add_option("--s", cone, "comma-separated edge lengths")->required();
  ucoords->add_option("--divisor", divisor_path, "divisor on the unit curve")->required();
  ucoords->add_option("--basepoint", basepoint, "point of the unit curve (default: first vertex)");

  auto* contract = app.add_subcommand("contract", "realize a combinatorial type at s");
  contract->add_option("--type", type_path)->required();
  contract->add_option("--s", cone)->required();
  contract->add_option("--divisor", divisor_path, "divisor on the unit curve to push forward");

  auto* transport = app.add_subcommand("transport", "divisor transport toward a subcurve");
  transport->require_subcommand(1);
  transport->fallthrough();
  auto* push = transport->add_subcommand("push", "push a single divisor");
  auto* conc = transport->add_subcommand("concentrate", "repeated pushing");
  auto* dil = transport->add_subcommand("dilute", "restriction of degree exactly k");
  auto* arrange = transport->add_subcommand("arrange", "several subcurves at once");
  for (auto* sub : {push, conc, dil, arrange}) {
    sub->add_option("--curve", curve_path)->required();
    sub->add_option("--divisor", divisor_path)->required();
  }
  for (auto* sub : {push, conc, dil}) sub->add_option("--subcurve", subcurve_path)->required();
  for (auto* sub : {push, conc}) sub->add_option("--eps", eps_text, "diameter bound of the subcurve");
  push->add_option("--e", e_path, "divisor E supported on the subcurve")->required();
  conc->add_option("-r", r)->required();
  dil->add_option("-k", k)->required();
  dil->add_option("--target", target_path, "effective divisor equivalent to D with fewer than k chips on the subcurve")
      ->required();
  dil->add_option("--radius", radius_text);
  arrange->add_option("--targets", targets_path, "[{\"subcurve\":..., \"r\":1, \"eps\":\"1/100\"}]")->required();
  arrange->add_option("--resolution", resolution);
  arrange->add_option("--budget", budget);

  auto* bn = app.add_subcommand("bn-rank", "Brill-Noether rank at lattice resolution N");
  bn->add_option("--curve", curve_path)->required();
  bn->add_option("-d", degree)->required();
  bn->add_option("-r", r)->required();
  bn->add_option("-N,--resolution", resolution);

  auto* experiment = app.add_subcommand("experiment", "degeneration experiments");
  experiment->require_subcommand(1);
  experiment->fallthrough();
  auto* closed = experiment->add_subcommand("closedness", "limit rank along a degeneration");
  auto* usc = experiment->add_subcommand("usc", "limit Brill-Noether rank along a degeneration");
  for (auto* sub : {closed, usc}) sub->add_option("--spec", spec_path)->required();
  usc->add_option("-N,--resolution", resolution, "overrides the spec");

  auto* selftest = app.add_subcommand("selftest", "embedded acceptance checks");
  selftest->add_option("--filter", filter, "run only criteria whose key contains this");
  selftest->add_flag("--quick", quick, "a tenth of the instances");
  selftest->add_option("--seed", seed);
  selftest->add_flag("--inject-negative-length", inject, "feed a corrupted curve to check error reporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (*rank) {
      TropicalCurve curve = load_curve(curve_path);
      Divisor d = load_divisor(curve, divisor_path);
      Json report = header("rank", {curve_path, divisor_path});
      if (pure) {
        report["mode"] = "pure";
        report["rank"] = RankEngine(curve).rank_pure(d);
      } else if (!loops_eps.empty()) {
        report["mode"] = "loops";
        report["eps"] = loops_eps;
        report["rank"] = rank_weighted_loops(curve, d, parse_rational(loops_eps));
      } else {
        report["mode"] = "weighted";
        report["rank"] = rank_weighted(curve, d);
      }
      emit(g, report);
    } else if (*reduce) {
      TropicalCurve curve = load_curve(curve_path);
      Divisor d = load_divisor(curve, divisor_path);
      Point q = io::parse_point(curve, q_text);
      Json report = header("reduce", {curve_path, divisor_path});
      report["q"] = curve.describe(q);
      report["reduced"] = io::to_json(curve, dhar_reduce(curve, d, q).divisor);
      emit(g, report);
    } else if (*equiv) {
      TropicalCurve curve = load_curve(curve_path);
      Divisor a = load_divisor(curve, d1_path), b = load_divisor(curve, d2_path);
      Equivalence e = is_equivalent(curve, a, b);
      Json report = header("equiv", {curve_path, d1_path, d2_path});
      report["equivalent"] = e.equivalent;
      if (e.witness) {
        Json values = Json::object();
        for (std::size_t v = 0; v < curve.num_vertices(); ++v)
          values[curve.vertex(VertexId{v}).name] = io::to_json(e.witness->vertex_value(VertexId{v}));
        report["witness_vertex_values"] = values;
      }
      emit(g, report);
    } else if (*star_cmd) {
      TropicalCurve curve = load_curve(curve_path);
      Divisor d = load_divisor(curve, divisor_path);
      Json report = header("star", {curve_path, divisor_path});
      report["star"] = io::to_json(curve, star(curve, d));
      emit(g, report);
    } else if (*aj) {
      TropicalCurve curve = load_curve(curve_path);
      Divisor d = load_divisor(curve, divisor_path);
      Json t = Json::array();
      for (const auto& x : abel_jacobi(curve, d, io::parse_point(curve, basepoint))) t.push_back(io::to_json(x));
      Json report = header("aj", {curve_path, divisor_path});
      report["t"] = t;
      report["g"] = curve.betti();
      emit(g, report);
    } else if (*ucoords) {
      CombinatorialType type = io::type_from_json(io::read_file(type_path));
      TropicalCurve unit = type.unit_curve();
      Divisor d = load_divisor(unit, divisor_path);
      Point base = basepoint.empty() ? Point::at(VertexId{0}) : io::parse_point(unit, basepoint);
      UniversalCoords u = universal_coords(type, parse_cone(cone), d, base);
      Json s = Json::array(), t = Json::array();
      for (const auto& x : u.s.entries()) s.push_back(io::to_json(x));
      for (const auto& x : u.t) t.push_back(io::to_json(x));
      Json report = header("ucoords", {type_path, divisor_path});
      report["s"] = s;
      report["t"] = t;
      report["degree"] = u.degree;
      emit(g, report);
    } else if (*contract) {
      CombinatorialType type = io::type_from_json(io::read_file(type_path));
      Realization real = realize(type, parse_cone(cone));
      std::vector<std::string> inputs = {type_path};
      Json report;
      if (!divisor_path.empty()) {
        inputs.push_back(divisor_path);
        Divisor d = load_divisor(type.unit_curve(), divisor_path);
        report["divisor"] = io::to_json(real.curve(), pushforward_class(real, d));
      }
      report.update(header("contract", inputs));
      report["curve"] = io::to_json(real.curve());
      report["genus"] = genus(real.curve());
      emit(g, report);
    } else if (*transport) {
      auto curve = std::make_shared<const TropicalCurve>(load_curve(curve_path));
      Divisor d = load_divisor(*curve, divisor_path);
      std::vector<std::string> inputs = {curve_path, divisor_path};
      TransportResult result{d, Subcurve::whole(curve), std::nullopt, {}, {}};
      std::string which;
      if (*arrange) {
        which = "arrange";
        inputs.push_back(targets_path);
        std::vector<ArrangeTarget> targets;
        for (const auto& t : io::read_file(targets_path))
          targets.push_back({io::subcurve_from_json(curve, t.at("subcurve")), t.at("r").get<int>(),
                             io::rational_from_json(t.at("eps"))});
        result = arrange_multi(d, targets, resolution, budget);
      } else {
        inputs.push_back(subcurve_path);
        Subcurve lambda = io::subcurve_from_json(curve, io::read_file(subcurve_path));
        if (*push) {
          which = "push";
          inputs.push_back(e_path);
          result = push_single(d, lambda, load_divisor(*curve, e_path), parse_rational(eps_text));
        } else if (*conc) {
          which = "concentrate";
          result = concentrate(d, lambda, r, parse_rational(eps_text));
        } else {
          which = "dilute";
          inputs.push_back(target_path);
          std::optional<Rational> radius;
          if (!radius_text.empty()) radius = parse_rational(radius_text);
          result = dilute(d, lambda, k, load_divisor(*curve, target_path), radius);
        }
      }
      Json report = header("transport " + which, inputs);
      report["divisor"] = io::to_json(*curve, result.divisor);
      report["region"] = io::to_json(result.region);
      report["checks"] = checks_json(result);
      report["log"] = result.log;
      report["ok"] = result.ok();
      if (result.witness) report["witness_max_slope"] = result.witness->max_abs_slope();
      emit(g, report);
      if (!result.ok()) throw Violation("transport postcondition failed");
    } else if (*bn) {
      TropicalCurve curve = load_curve(curve_path);
      BNResult result = bn_rank_detail(curve, {degree, r, resolution});
      Json report = header("bn-rank", {curve_path});
      report["d"] = degree;
      report["r"] = r;
      report["rho"] = result.rho;
      report["N"] = result.resolution;
      if (result.counterexample) report["counterexample_E"] = io::to_json(curve, *result.counterexample);
      emit(g, report);
    } else if (*experiment) {
      io::SpecFile file = io::spec_from_json(io::read_file(spec_path));
      ExperimentReport result;
      if (*closed) {
        result = run_closedness_experiment(file.spec, file.d, file.r);
      } else {
        if (usc->count("--resolution")) file.resolution = resolution;
        result = run_usc_experiment(file.spec, file.d, file.r, file.rho, file.resolution);
      }
      Json report = header(std::string("experiment ") + result.kind, {spec_path});
      report.update(io::to_json(result));
      emit(g, report);
      if (!result.pass) throw Violation(result.kind + " experiment failed");
    } else if (*selftest) {
      if (inject) {
        // A negative length must be rejected at construction.
        try {
          TropicalCurve bad({{"v", 0}, {"w", 0}}, {{"e", VertexId{0}, VertexId{1}, Rational(-1)}});
        } catch (const DomainError& e) {
          throw InvariantViolation(std::string("corrupted curve rejected: ") + e.what());
        }
        throw InvariantViolation("corrupted curve was accepted");
      }
      checks::CriterionOptions options;
      options.seed = seed;
      options.scale = quick ? 0.1 : 1.0;
      Json rows = Json::array();
      long passed = 0, run = 0;
      for (const auto& c : checks::all_criteria()) {
        if (!filter.empty() && std::string(c.key).find(filter) == std::string::npos) continue;
        auto res = c.run(options);
        ++run;
        passed += res.passed();
        Json row = {{"id", res.id},         {"key", res.key},           {"passed", res.passed()},
                    {"instances", res.instances}, {"required", res.required}, {"failures", res.failures},
                    {"notes", res.notes}};
        if (g.timing) row["seconds"] = res.seconds;
        rows.push_back(row);
        std::cerr << checks::summary_line(res) << "\n";
      }
      Json report = header("selftest", {});
      report["criteria"] = rows;
      report["passed"] = passed;
      report["run"] = run;
      report["seed"] = seed;
      report["quick"] = quick;
      emit(g, report);
      if (passed != run) throw Violation("selftest failures");
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const Violation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
