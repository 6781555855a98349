#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "criteria.hpp"

namespace tropbn::checks {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline long scaled(long n, const CriterionOptions& options) {
  return std::max(1L, static_cast<long>(std::ceil(static_cast<double>(n) * options.scale)));
}

inline CriterionResult make_result(int id, const char* key, const char* title, long required, double limit) {
  CriterionResult r;
  r.id = id;
  r.key = key;
  r.title = title;
  r.required = required;
  r.time_limit = limit;
  return r;
}

inline void note_failure(CriterionResult& result, const std::string& what) {
  ++result.failures;
  if (result.notes.size() < 10) result.notes.push_back(what);
}

}  // namespace tropbn::checks
