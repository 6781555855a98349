#include "criteria.hpp"
#include "criteria_util.hpp"
#include "degenerations.hpp"
#include "tropbn/jacobian.hpp"
#include "tropbn/rank.hpp"

namespace tropbn::checks {

namespace {

int min_step_rank(const DegenerationSpec& spec) {
  int lowest = -2;
  for (int i = 1; i <= spec.steps; ++i) {
    Realization real = rescale(spec.type, spec.step(i));
    int r = rank_weighted(real.curve(), pushforward_class(real, spec.pattern));
    lowest = lowest == -2 ? r : std::min(lowest, r);
  }
  return lowest;
}

}  // namespace

CriterionResult closedness(const CriterionOptions& options) {
  auto result = make_result(6, "closedness", "closedness of the universal locus", scaled(100, options), 900);
  Timer timer;
  Rng rng(options.seed + 6);
  auto families = degeneration_families();
  const long per_family = (result.required + static_cast<long>(families.size()) - 1) / static_cast<long>(families.size());
  long vacuous = 0, positive = 0;
  for (const auto& family : families) {
    for (long k = 0; k < per_family; ++k) {
      long d = uniform_int(rng, 1, 4);
      DegenerationSpec spec = random_spec(rng, family, d);
      int r = min_step_rank(spec);
      // Prefer patterns of positive rank; resample a few times before settling.
      for (int tries = 0; tries < 20 && r < 1; ++tries) {
        spec = random_spec(rng, family, d);
        r = min_step_rank(spec);
      }
      r = std::max(r, 0);
      if (r >= 1) ++positive;
      ExperimentReport report = run_closedness_experiment(spec, d, r);
      ++result.instances;
      if (report.vacuous) ++vacuous;
      if (!report.pass)
        note_failure(result, spec.name + " d=" + std::to_string(d) + " r=" + std::to_string(r) + ": limit rank " +
                                 std::to_string(report.limit_value));
    }
  }
  result.notes.push_back(std::to_string(families.size()) + " families, " + std::to_string(positive) +
                         " runs with r >= 1, " + std::to_string(vacuous) + " vacuous");
  result.seconds = timer.seconds();
  return result;
}

CriterionResult semicontinuity(const CriterionOptions& options) {
  auto result = make_result(7, "usc", "upper semicontinuity of the BN rank (N = 3)", scaled(50, options), 900);
  Timer timer;
  Rng rng(options.seed + 7);
  auto families = degeneration_families();
  const long per_family = (result.required + static_cast<long>(families.size()) - 1) / static_cast<long>(families.size());
  for (const auto& family : families) {
    for (long k = 0; k < per_family; ++k) {
      long d = uniform_int(rng, 1, 3);
      int r = uniform_int(rng, 0, std::min(2, static_cast<int>(d)));
      DegenerationSpec spec = random_spec(rng, family, d);
      ExperimentReport report = run_usc_experiment(spec, d, r, 0, 3);
      ++result.instances;
      if (!report.pass)
        note_failure(result, spec.name + " d=" + std::to_string(d) + " r=" + std::to_string(r) + ": limit " +
                                 std::to_string(report.limit_value));
    }
  }
  result.notes.push_back("property-based sample of degenerations, not all sequences");
  result.seconds = timer.seconds();
  return result;
}

}  // namespace tropbn::checks
