#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tropbn::checks {

struct CriterionOptions {
  std::uint64_t seed = 20261014;
  /// Multiplies instance counts; values below 1 give a quick run that is not the acceptance bar.
  double scale = 1.0;
};

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  long required = 0;
  long instances = 0;
  long failures = 0;
  double seconds = 0;
  double time_limit = 0;
  std::vector<std::string> notes;

  bool passed() const { return failures == 0 && instances >= required && seconds <= time_limit; }
};

using CriterionFn = CriterionResult (*)(const CriterionOptions&);

struct Criterion {
  int id;
  const char* key;
  CriterionFn run;
};

CriterionResult rose_table(const CriterionOptions& options);
CriterionResult riemann_roch(const CriterionOptions& options);
CriterionResult cross_definition(const CriterionOptions& options);
CriterionResult oracle_equivalence(const CriterionOptions& options);
CriterionResult weighted_rds(const CriterionOptions& options);
CriterionResult closedness(const CriterionOptions& options);
CriterionResult semicontinuity(const CriterionOptions& options);
CriterionResult transport_postconditions(const CriterionOptions& options);
CriterionResult abel_jacobi_consistency(const CriterionOptions& options);

const std::vector<Criterion>& all_criteria();

/// "[PASS] 2 riemann_roch: 500/500 instances, 0 failures, 1.2s"
std::string summary_line(const CriterionResult& result);

}  // namespace tropbn::checks
