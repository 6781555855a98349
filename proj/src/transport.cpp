#include "tropbn/transport.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropbn/error.hpp"
#include "tropbn/rank.hpp"
#include "tropbn/reduce.hpp"

namespace tropbn {

bool TransportResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* TransportResult::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool slope_bound_check(const PLFunction& f, long d) { return f.max_abs_slope() <= d; }

int r_lambda(int r, const Subcurve& lambda) { return r + std::min(r, lambda.genus()); }

namespace {

Divisor to_model(const SubcurveModel& model, const TropicalCurve& parent, const Divisor& d) {
  Divisor out;
  for (const auto& [p, m] : d.chips()) out.add(model.from_parent(parent, p), m);
  return out;
}

void require_supported_on(const Divisor& e, const Subcurve& lambda, const char* what) {
  for (const auto& [p, m] : e.chips())
    if (!lambda.contains(p)) throw DomainError(std::string(what) + " must be supported on the subcurve");
}

}  // namespace

bool effective_on_region(const Divisor& d, const Divisor& removed, const Subcurve& region) {
  auto model = region.model();
  Divisor local = to_model(model, region.parent(), restrict(d, region) - removed);
  return equivalent_to_effective(model.curve(), local);
}

int rank_on_region(const Divisor& d, const Subcurve& region) {
  auto model = region.model();
  return RankEngine(model.curve()).rank_weighted(to_model(model, region.parent(), restrict(d, region)));
}

Rational pushing_radius(const Rational& eps, long d, int r) {
  Rational radius = eps;
  for (long i = 0; i < d - r + 1; ++i) radius *= 3 * d;
  return radius;
}

namespace {

/// Lambda together with every path leaving it along which f strictly decreases and stays above mu.
Subcurve descent_region(const PLFunction& f, const Subcurve& lambda, const Rational& mu) {
  const auto& curve = lambda.parent();
  // Cut every edge at f's knots, lambda's segment ends and the points where f crosses mu.
  std::vector<std::vector<Rational>> cuts(curve.num_edges());
  for (std::size_t i = 0; i < curve.num_edges(); ++i) {
    auto& c = cuts[i];
    const auto& knots = f.knots(EdgeId{i});
    for (std::size_t k = 0; k < knots.size(); ++k) {
      c.push_back(knots[k].offset);
      if (k > 0) {
        const auto &a = knots[k - 1], &b = knots[k];
        if ((a.value - mu) * (b.value - mu) < 0)
          c.push_back(a.offset + (mu - a.value) / (b.value - a.value) * (b.offset - a.offset));
      }
    }
    for (const auto& s : lambda.intervals(EdgeId{i})) {
      c.push_back(s.lo);
      c.push_back(s.hi);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  auto node = [&](std::size_t e, std::size_t k) { return curve.point_on_edge(EdgeId{e}, cuts[e][k]); };

  std::set<VertexId> vertices = lambda.vertices();
  std::vector<std::vector<Interval>> intervals(curve.num_edges());
  for (std::size_t i = 0; i < curve.num_edges(); ++i) intervals[i] = lambda.intervals(EdgeId{i});

  std::set<Point> reached;
  std::vector<Point> stack;
  for (std::size_t i = 0; i < curve.num_edges(); ++i)
    for (std::size_t k = 0; k < cuts[i].size(); ++k)
      if (Point p = node(i, k); lambda.contains(p) && reached.insert(p).second) stack.push_back(p);
  for (auto v : lambda.vertices())
    if (reached.insert(Point::at(v)).second) stack.push_back(Point::at(v));

  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    Rational fx = f.value_at(x);
    if (fx <= mu) continue;
    // Segments at x as (edge, index of the cut at x, index of the other cut).
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> steps;
    if (x.is_vertex()) {
      for (const auto& end : curve.incident(x.vertex())) {
        std::size_t e = end.edge.value, m = cuts[e].size() - 1;
        if (end.at_tail) steps.emplace_back(e, 0, 1);
        else steps.emplace_back(e, m, m - 1);
      }
    } else {
      std::size_t e = x.edge().value;
      auto k = static_cast<std::size_t>(std::find(cuts[e].begin(), cuts[e].end(), x.offset()) - cuts[e].begin());
      steps.emplace_back(e, k, k - 1);
      steps.emplace_back(e, k, k + 1);
    }
    for (auto [e, from, to] : steps) {
      Point y = node(e, to);
      Rational lo = rmin(cuts[e][from], cuts[e][to]), hi = rmax(cuts[e][from], cuts[e][to]);
      if (lambda.contains(curve.point_on_edge(EdgeId{e}, (lo + hi) / 2))) continue;
      if (!(f.value_at(y) < fx)) continue;
      intervals[e].push_back({lo, hi});
      if (y.is_vertex()) vertices.insert(y.vertex());
      if (reached.insert(y).second) stack.push_back(y);
    }
  }
  return Subcurve(lambda.parent_ptr(), std::move(vertices), std::move(intervals));
}

TransportResult push_impl(const Divisor& d, const Subcurve& lambda, const Divisor& e, const Rational& eps) {
  const auto& curve = lambda.parent();
  const long deg = d.degree();
  Divisor estar = star(curve, e);
  auto rest = subtract_effective(curve, d, estar);
  if (!rest) throw InvariantViolation("D - E* is not equivalent to an effective divisor despite the rank bound");
  Divisor target = *rest + estar;
  auto f = solve_potential(curve, target - d);
  if (!f) throw InvariantViolation("no potential between equivalent divisors");

  Subcurve n = neighborhood(lambda, eps);
  auto boundary = n.boundary();
  TransportResult result{d, lambda, PLFunction::constant(curve, 0), {}, {}};
  if (boundary.empty()) {
    // The neighbourhood is the whole curve: nothing to clamp.
    result.region = Subcurve::whole(lambda.parent_ptr());
    result.log.push_back("neighbourhood covers the curve");
  } else {
    Rational mu = f->value_at(boundary.front());
    for (const auto& b : boundary) mu = rmin(mu, f->value_at(b));
    PLFunction fbar = f->clamp(curve, mu, n);
    result.divisor = d + fbar.div(curve);
    result.region = descent_region(*f, lambda, mu);
    result.witness = fbar;
    result.log.push_back("mu = " + to_string(mu));
  }
  const auto& out = result.divisor;
  result.checks.push_back({"effective", out.is_effective(), describe(curve, out)});
  result.checks.push_back({"equivalent", is_equivalent(curve, out, d).equivalent, ""});
  result.checks.push_back({"agrees_on_lambda", restrict(out, lambda) == restrict(d, lambda), ""});
  result.checks.push_back({"region_radius", neighborhood(lambda, eps * deg).contains(result.region) ||
                                                result.region == neighborhood(lambda, eps * deg),
                           result.region.describe()});
  result.checks.push_back({"contains_estar", effective_on_region(out, estar, result.region), ""});
  result.checks.push_back({"slope_bound", slope_bound_check(*f, deg) && slope_bound_check(*result.witness, deg),
                           std::to_string(result.witness->max_abs_slope())});
  return result;
}

void check_effective_input(const TropicalCurve& curve, const Divisor& d) {
  validate(curve, d);
  if (!d.is_effective()) throw DomainError("transport needs an effective divisor");
}

}  // namespace

TransportResult push_single(const Divisor& d, const Subcurve& lambda, const Divisor& e, const Rational& eps) {
  const auto& curve = lambda.parent();
  check_effective_input(curve, d);
  if (!e.is_effective()) throw DomainError("E must be effective");
  require_supported_on(e, lambda, "E");
  if (eps <= 0) throw DomainError("eps must be positive");
  if (RankEngine(curve).rank_weighted(d) < e.degree()) throw DomainError("rank of D is below deg E");
  return push_impl(d, lambda, e, eps);
}

TransportResult concentrate(const Divisor& d, const Subcurve& lambda, int r, const Rational& eps) {
  const auto& curve = lambda.parent();
  check_effective_input(curve, d);
  if (r < 0) throw DomainError("r must be non-negative");
  if (eps <= 0) throw DomainError("eps must be positive");
  const long deg = d.degree();
  Rational radius = pushing_radius(eps, deg, r);
  Subcurve big = neighborhood(lambda, radius);
  if (!deformation_retracts(big, lambda)) throw DomainError("N_R(lambda) does not retract onto lambda");
  for (auto v : big.vertices())
    if (curve.vertex(v).weight > 0 && !lambda.vertices().count(v))
      throw DomainError("N_R(lambda) contains a weighted vertex outside lambda");
  if (RankEngine(curve).rank_weighted(d) < r) throw DomainError("rank of D is below r");

  TransportResult result{d, lambda, PLFunction::constant(curve, 0), {}, {}};
  auto model = lambda.model();
  std::vector<Point> rds;
  for (const auto& p : loopless_vertex_set(model.curve())) rds.push_back(model.to_parent(p));
  Rational current_eps = eps;
  int pushes = 0;
  for (const auto& s : effective_divisors(rds, r)) {
    if (effective_on_region(result.divisor, star(curve, s), result.region)) continue;
    auto step = push_impl(result.divisor, result.region, s, current_eps);
    if (!step.ok()) {
      for (const auto& c : step.checks)
        if (!c.passed) result.log.push_back("push for " + describe(curve, s) + " failed " + c.name);
    }
    result.divisor = step.divisor;
    result.region = step.region;
    *result.witness = *result.witness + *step.witness;
    current_eps *= 3 * deg;
    ++pushes;
    result.log.push_back("pushed " + describe(curve, s) + " -> " + result.region.describe());
  }
  const auto& out = result.divisor;
  result.checks.push_back({"effective", out.is_effective(), describe(curve, out)});
  result.checks.push_back({"equivalent", is_equivalent(curve, out, d).equivalent, ""});
  result.checks.push_back({"agrees_on_lambda", restrict(out, lambda) == restrict(d, lambda), ""});
  result.checks.push_back({"region_radius", big.contains(result.region), result.region.describe()});
  result.checks.push_back({"push_count", pushes <= deg - r + 1, std::to_string(pushes)});
  result.checks.push_back({"slope_bound", slope_bound_check(*result.witness, deg),
                           std::to_string(result.witness->max_abs_slope())});
  int region_rank = rank_on_region(out, result.region);
  result.checks.push_back({"region_rank", region_rank >= r, std::to_string(region_rank)});
  long restricted = restrict(out, result.region).degree();
  result.checks.push_back({"region_degree", restricted >= r_lambda(r, lambda), std::to_string(restricted)});
  return result;
}

TransportResult dilute(const Divisor& e, const Subcurve& lambda, long k, const Divisor& f_target,
                       std::optional<Rational> radius) {
  const auto& curve = lambda.parent();
  check_effective_input(curve, e);
  check_effective_input(curve, f_target);
  const long deg_lambda = restrict(e, lambda).degree();
  if (deg_lambda < k) throw DomainError("restriction already has fewer than k chips");
  TransportResult result{e, lambda, PLFunction::constant(curve, 0), {}, {}};
  if (deg_lambda == k) {
    result.checks.push_back({"degree_exact", true, "identity"});
    return result;
  }
  if (restrict(f_target, lambda).degree() >= k) throw DomainError("the target divisor must have fewer than k chips on lambda");
  auto f = solve_potential(curve, f_target - e);
  if (!f) throw DomainError("target divisor is not equivalent to E");

  struct Ray {
    Direction dir;
    Rational level;
    long slope;
    Rational free;
    Rational linear;
    Rational clear;
  };
  std::vector<Ray> rays;
  for (const auto& dir : lambda.outward_directions()) {
    const auto& edge = curve.edge(dir.edge);
    const auto& pieces = lambda.intervals(dir.edge);
    Ray ray{dir, f->value_at(dir.base), 0, 0, 0, 0};
    ray.slope = dir.forward ? to_long(f->slope_after(dir.edge, dir.base_offset))
                            : -to_long(f->slope_before(dir.edge, dir.base_offset));
    // Free length up to the next piece of lambda or the end of the edge.
    Rational end = dir.forward ? edge.length : Rational(0);
    for (const auto& s : pieces) {
      if (dir.forward && s.lo > dir.base_offset) end = rmin(end, s.lo);
      if (!dir.forward && s.hi < dir.base_offset) end = rmax(end, s.hi);
    }
    ray.free = abs(end - dir.base_offset);
    ray.linear = ray.free;
    for (const auto& knot : f->knots(dir.edge)) {
      Rational dist = dir.forward ? Rational(knot.offset - dir.base_offset) : Rational(dir.base_offset - knot.offset);
      if (dist > 0) ray.linear = rmin(ray.linear, dist);
    }
    ray.clear = ray.free;
    for (const auto& [p, m] : e.chips()) {
      if (p.is_vertex() || p.edge() != dir.edge) continue;
      Rational dist = dir.forward ? Rational(p.offset() - dir.base_offset) : Rational(dir.base_offset - p.offset());
      if (dist > 0) ray.clear = rmin(ray.clear, dist);
    }
    rays.push_back(ray);
  }
  std::stable_sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.slope < b.slope;
  });

  const long target = deg_lambda - k;
  long prefix = 0;
  std::size_t alpha = rays.size();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (prefix + rays[i].slope > target) {
      alpha = i;
      break;
    }
    prefix += rays[i].slope;
  }
  if (alpha == rays.size()) throw InvariantViolation("outgoing slopes do not exceed deg(E|lambda) - k");
  const long c = target - prefix;
  const Rational level = rays[alpha].level;

  Rational delta = radius.value_or(Rational(0));
  if (!radius) {
    delta = rays.front().free / 2;
    for (const auto& ray : rays) delta = rmin(delta, ray.free / 2);
  }
  long max_slope = 1;
  for (const auto& ray : rays) max_slope = std::max(max_slope, std::labs(ray.slope));
  for (const auto& ray : rays) {
    delta = rmin(delta, ray.free / 2);
    delta = rmin(delta, ray.linear);
    delta = rmin(delta, ray.clear / 2);
    if (ray.level > level) delta = rmin(delta, (ray.level - level) / (4 * max_slope));
  }
  if (delta <= 0) throw InvariantViolation("no room to enlarge lambda");
  const Rational eta = c > 0 ? Rational(c * delta / 2) : Rational(rays[alpha].slope * delta / 2);
  const Rational top = level + eta;

  PLFunction fbar = f->min_with(top);
  if (c > 0) {
    const auto& dir = rays[alpha].dir;
    if (dir.forward)
      fbar = fbar.replace_linear(curve, dir.edge, dir.base_offset, dir.base_offset + delta / 2, level, top);
    else
      fbar = fbar.replace_linear(curve, dir.edge, dir.base_offset - delta / 2, dir.base_offset, top, level);
  }
  std::set<VertexId> vertices = lambda.vertices();
  std::vector<std::vector<Interval>> intervals(curve.num_edges());
  for (std::size_t i = 0; i < curve.num_edges(); ++i) intervals[i] = lambda.intervals(EdgeId{i});
  for (std::size_t i = (c > 0 ? alpha + 1 : alpha); i < rays.size(); ++i) {
    const auto& dir = rays[i].dir;
    if (dir.forward) intervals[dir.edge.value].push_back({dir.base_offset, dir.base_offset + delta});
    else intervals[dir.edge.value].push_back({dir.base_offset - delta, dir.base_offset});
  }
  result.region = Subcurve(lambda.parent_ptr(), std::move(vertices), std::move(intervals));
  result.divisor = e + fbar.div(curve);
  result.witness = fbar;
  result.log.push_back("alpha=" + std::to_string(alpha) + " c=" + std::to_string(c) + " delta=" + to_string(delta));

  const auto& out = result.divisor;
  result.checks.push_back({"effective", out.is_effective(), describe(curve, out)});
  result.checks.push_back({"equivalent", is_equivalent(curve, out, e).equivalent, ""});
  long got = restrict(out, result.region).degree();
  result.checks.push_back({"degree_exact", got == k, std::to_string(got)});
  result.checks.push_back({"contains_lambda", result.region.contains(lambda), ""});
  result.checks.push_back({"slope_bound", slope_bound_check(fbar, e.degree()), std::to_string(fbar.max_abs_slope())});
  Rational cap = radius.value_or(delta);
  result.checks.push_back({"region_radius", neighborhood(lambda, cap).contains(result.region), to_string(delta)});
  return result;
}

std::optional<Divisor> find_escape(const Divisor& d, const Subcurve& region, long k, int resolution, long budget) {
  const auto& curve = region.parent();
  auto rep = effective_representative(curve, d);
  if (!rep) return std::nullopt;
  if (restrict(*rep, region).degree() < k) return rep;
  long need = d.degree() - k + 1;
  if (need <= 0) return std::nullopt;
  std::vector<Point> outside;
  for (const auto& p : lattice_points(curve, resolution))
    if (!region.contains(p)) outside.push_back(p);
  long used = 0;
  for (const auto& p : effective_divisors(outside, need)) {
    if (++used > budget) break;
    if (auto left = subtract_effective(curve, *rep, p)) return *left + p;
  }
  return std::nullopt;
}

ConfinementReport confinement_search(const Subcurve& lambda, int k, int resolution, long budget, int extra_degree) {
  const auto& curve = lambda.parent();
  if (k < 0 || k > lambda.betti()) throw DomainError("k must lie between 0 and the genus of the subcurve's metric space");
  ConfinementReport report;
  report.resolution = resolution;
  report.budget = budget;
  if (k == 0) {
    report.candidate = Divisor();
    return report;
  }
  auto model = lambda.model();
  // Interior lattice points first: vertices and attachment points are the first to leak.
  std::vector<Point> inside, inside_vertices;
  for (const auto& p : lattice_points(model.curve(), resolution)) {
    Point q = model.to_parent(p);
    (p.is_vertex() ? inside_vertices : inside).push_back(q);
  }
  inside.insert(inside.end(), inside_vertices.begin(), inside_vertices.end());
  std::vector<Point> outside;
  for (const auto& p : lattice_points(curve, resolution))
    if (!lambda.contains(p)) outside.push_back(p);

  for (const auto& v : effective_divisors(inside, k)) {
    ++report.candidates_tried;
    bool falsified = false;
    for (int x = 0; x <= extra_degree && !falsified; ++x) {
      for (const auto& extra : effective_divisors(outside, x)) {
        Divisor e = v + extra;
        for (const auto& p : effective_divisors(outside, e.degree() - k + 1)) {
          if (++report.tests_used > budget) {
            report.log.push_back("budget exhausted");
            return report;
          }
          if (subtract_effective(curve, e, p)) {
            falsified = true;
            report.log.push_back(describe(curve, v) + " leaks via " + describe(curve, p));
            break;
          }
        }
        if (falsified) break;
      }
    }
    if (!falsified) {
      report.candidate = v;
      report.log.push_back(describe(curve, v) + " survives at resolution " + std::to_string(resolution));
      return report;
    }
  }
  report.log.push_back("every candidate leaked");
  return report;
}

TransportResult arrange_multi(const Divisor& d, const std::vector<ArrangeTarget>& targets, int resolution, long budget) {
  if (targets.empty()) throw DomainError("at least one subcurve is required");
  const auto& curve = targets.front().lambda.parent();
  check_effective_input(curve, d);
  int total = 0;
  for (const auto& t : targets) total += t.r;
  RankEngine engine(curve);
  if (engine.rank_weighted(d) < total) throw DomainError("sum of targets exceeds the rank of D");
  const long deg = d.degree();
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      auto a = neighborhood(targets[i].lambda, pushing_radius(targets[i].eps, deg, targets[i].r));
      auto b = neighborhood(targets[j].lambda, pushing_radius(targets[j].eps, deg, targets[j].r));
      for (std::size_t v = 0; v < curve.num_vertices(); ++v)
        if (a.contains(Point::at(VertexId{v})) && b.contains(Point::at(VertexId{v})))
          throw DomainError("neighbourhoods of the subcurves overlap");
      for (std::size_t e = 0; e < curve.num_edges(); ++e)
        for (const auto& x : a.intervals(EdgeId{e}))
          for (const auto& y : b.intervals(EdgeId{e}))
            if (x.lo <= y.hi && y.lo <= x.hi) throw DomainError("neighbourhoods of the subcurves overlap");
    }

  TransportResult result{d, targets.front().lambda, PLFunction::constant(curve, 0), {}, {}};
  std::vector<Divisor> pinned;
  std::vector<Subcurve> regions;
  Divisor current = d;
  for (const auto& t : targets) {
    Divisor others;
    for (const auto& u : pinned) others += u;
    Divisor base = current - others;
    if (!base.is_effective()) throw InvariantViolation("pinned divisors are not contained in the current divisor");
    int s = std::min(t.r, t.lambda.betti());
    auto conf = confinement_search(t.lambda, s, resolution, budget);
    for (const auto& line : conf.log) result.log.push_back(line);
    Divisor v = conf.candidate.value_or(Divisor());
    if (!conf.candidate) result.log.push_back("no confined configuration found; continuing without one");
    if (auto rest = subtract_effective(curve, base, v)) base = *rest + v;
    else v = Divisor();
    auto conc = concentrate(base, t.lambda, t.r, t.eps);
    for (const auto& c : conc.checks)
      if (!c.passed) result.log.push_back("concentrate check failed: " + c.name);
    Divisor dprime = conc.divisor;
    Subcurve region = conc.region;
    Divisor u;
    Divisor tilde = dprime;
    if (auto escape = find_escape(dprime - v, region, t.r, resolution, budget)) {
      auto dil = dilute(dprime - v, region, t.r, *escape);
      for (const auto& c : dil.checks)
        if (!c.passed) result.log.push_back("dilute check failed: " + c.name);
      region = dil.region;
      u = restrict(dil.divisor, region);
      tilde = dil.divisor + v;
    } else {
      // Any degree-r sub-divisor on the region containing v.
      u = v;
      Divisor spare = restrict(dprime, region) - v;
      for (const auto& [p, m] : spare.chips()) {
        long take = std::min<long>(m, t.r - u.degree());
        u.add(p, take);
        if (u.degree() == t.r) break;
      }
    }
    pinned.push_back(u);
    regions.push_back(region);
    current = tilde + others;
  }
  result.divisor = current;
  result.region = regions.back();
  result.witness = solve_potential(curve, current - d);
  result.checks.push_back({"effective", current.is_effective(), describe(curve, current)});
  result.checks.push_back({"equivalent", is_equivalent(curve, current, d).equivalent, ""});
  for (std::size_t i = 0; i < targets.size(); ++i) {
    long got = restrict(current, regions[i]).degree();
    int want = r_lambda(targets[i].r, targets[i].lambda);
    result.checks.push_back({"region_degree_" + std::to_string(i + 1), got >= want,
                             std::to_string(got) + " >= " + std::to_string(want)});
    Rational cap = pushing_radius(targets[i].eps, deg, targets[i].r);
    result.checks.push_back({"region_radius_" + std::to_string(i + 1),
                             neighborhood(targets[i].lambda, cap).contains(regions[i]), regions[i].describe()});
    result.log.push_back("region " + std::to_string(i + 1) + ": " + regions[i].describe());
  }
  return result;
}

}  // namespace tropbn
