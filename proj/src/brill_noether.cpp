#include "tropbn/brill_noether.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include "tropbn/error.hpp"
#include "tropbn/jacobian.hpp"
#include "tropbn/rank.hpp"
#include "tropbn/reduce.hpp"

namespace tropbn {

bool wdr_member(const TropicalCurve& curve, const Divisor& d, int r) { return rank_weighted(curve, d) >= r; }

unsigned worker_count() {
  if (const char* env = std::getenv("TROPBN_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

/// Rank calls memoized by the reduced form of the class.
class ExtensionSearch {
 public:
  ExtensionSearch(const TropicalCurve& curve, const std::vector<Point>& lattice, int r)
      : engine_(curve), lattice_(lattice), r_(r) {}

  bool extends(const Divisor& e, long extra) {
    for (const auto& f : extensions(extra))
      if (rank_at_least(e + f)) return true;
    return false;
  }
  long calls() const { return calls_; }

 private:
  const std::vector<Divisor>& extensions(long degree) {
    auto it = by_degree_.find(degree);
    if (it == by_degree_.end()) it = by_degree_.emplace(degree, effective_divisors(lattice_, degree)).first;
    return it->second;
  }
  bool rank_at_least(const Divisor& d) {
    Divisor key = dhar_reduce(engine_.curve(), d, Point::at(VertexId{0})).divisor;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++calls_;
    bool ok = engine_.rank_weighted(d) >= r_;
    memo_.emplace(key, ok);
    return ok;
  }

  RankEngine engine_;
  const std::vector<Point>& lattice_;
  int r_;
  std::map<long, std::vector<Divisor>> by_degree_;
  std::map<Divisor, bool> memo_;
  long calls_ = 0;
};

}  // namespace

BNResult bn_rank_detail(const TropicalCurve& curve, const BNQuery& query) {
  if (query.resolution < 1) throw DomainError("resolution must be at least 1");
  if (query.d < 0) throw DomainError("degree must be non-negative");
  if (query.r < 0) throw DomainError("rank target must be non-negative");
  BNResult result;
  result.resolution = query.resolution;
  if (query.d < query.r) return result;

  const auto lattice = lattice_points(curve, query.resolution);
  const unsigned workers = worker_count();
  std::vector<ExtensionSearch> searches;
  searches.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) searches.emplace_back(curve, lattice, query.r);

  // Extending every E of degree r + rho implies the same for smaller degrees, so stop at the first failure.
  for (long rho = 0; rho <= query.d - query.r; ++rho) {
    const auto candidates = effective_divisors(lattice, query.r + rho);
    const long extra = query.d - query.r - rho;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{candidates.size()};
    auto work = [&](ExtensionSearch& search) {
      for (std::size_t i = next++; i < candidates.size(); i = next++) {
        if (i > first_failure.load()) break;
        if (!search.extends(candidates[i], extra)) {
          std::size_t seen = first_failure.load();
          while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
          }
        }
      }
    };
    if (workers == 1 || candidates.size() < 2) {
      work(searches.front());
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(searches[w]));
      for (auto& t : pool) t.join();
    }
    if (first_failure.load() < candidates.size()) {
      result.counterexample = candidates[first_failure.load()];
      break;
    }
    result.rho = static_cast<int>(rho);
  }
  for (const auto& s : searches) result.rank_calls += s.calls();
  return result;
}

int bn_rank(const TropicalCurve& curve, const BNQuery& query) { return bn_rank_detail(curve, query).rho; }

namespace {

std::vector<Rational> base_lengths(const DegenerationSpec& spec) {
  if (spec.base.empty()) return std::vector<Rational>(spec.type.num_edges(), Rational(1));
  return spec.base;
}

}  // namespace

ConeVector DegenerationSpec::step(int i) const {
  auto s = base_lengths(*this);
  Rational scale(1, 1);
  for (int k = 0; k < i; ++k) scale /= 2;
  for (auto e : contracted) s.at(e) *= scale;
  return ConeVector(std::move(s));
}

ConeVector DegenerationSpec::limit() const {
  auto s = base_lengths(*this);
  for (auto e : contracted) s.at(e) = 0;
  return ConeVector(std::move(s));
}

void validate(const DegenerationSpec& spec) {
  if (spec.steps < 1) throw DomainError("a degeneration needs at least one step");
  if (!spec.base.empty() && spec.base.size() != spec.type.num_edges())
    throw DomainError("base lengths must match the number of edges");
  for (const auto& b : spec.base)
    if (b <= 0) throw DomainError("base lengths must be positive");
  for (auto e : spec.contracted)
    if (e >= spec.type.num_edges()) throw DomainError("contracted edge index out of range");
  validate(spec.type.unit_curve(), spec.pattern);
}

namespace {

std::vector<Rational> entries_of(const ConeVector& s) { return s.entries(); }

}  // namespace

ExperimentReport run_closedness_experiment(const DegenerationSpec& spec, long d, int r) {
  validate(spec);
  if (spec.pattern.degree() != d) throw DomainError("pattern degree differs from d");
  ExperimentReport report;
  report.kind = "closedness";
  report.name = spec.name;
  report.d = d;
  report.r = r;
  for (int i = 1; i <= spec.steps; ++i) {
    ConeVector s = spec.step(i);
    Realization real = rescale(spec.type, s);
    Divisor di = pushforward_class(real, spec.pattern);
    int rank = rank_weighted(real.curve(), di);
    report.steps.push_back({i, entries_of(s), rank});
    if (rank < r) report.vacuous = true;
  }
  Realization limit = realize(spec.type, spec.limit());
  Divisor dl = pushforward_class(limit, spec.pattern);
  report.limit_value = rank_weighted(limit.curve(), dl);
  report.log.push_back("limit divisor " + describe(limit.curve(), dl));
  if (report.vacuous) report.log.push_back("pattern has rank below r on some step");
  report.pass = report.vacuous || report.limit_value >= r;
  return report;
}

ExperimentReport run_usc_experiment(const DegenerationSpec& spec, long d, int r, int rho, int resolution) {
  validate(spec);
  ExperimentReport report;
  report.kind = "usc";
  report.name = spec.name;
  report.d = d;
  report.r = r;
  report.resolution = resolution;
  int lowest = d - r + 1;
  for (int i = 1; i <= spec.steps; ++i) {
    ConeVector s = spec.step(i);
    Realization real = rescale(spec.type, s);
    int value = bn_rank(real.curve(), {d, r, resolution});
    report.steps.push_back({i, entries_of(s), value});
    lowest = std::min(lowest, value);
  }
  Realization limit = realize(spec.type, spec.limit());
  report.limit_value = bn_rank(limit.curve(), {d, r, resolution});
  report.pass = report.limit_value >= lowest;
  bool premise = lowest >= rho;
  report.log.push_back(std::string("rho implication ") + (!premise || report.limit_value >= rho ? "holds" : "fails") +
                       " for rho = " + std::to_string(rho));
  return report;
}

}  // namespace tropbn
