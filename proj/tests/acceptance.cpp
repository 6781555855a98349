// Runs every acceptance criterion once at full size and prints one line per criterion.
#include <cstring>
#include <iostream>

#include "criteria.hpp"

int main(int argc, char** argv) {
  using namespace tropbn::checks;
  const char* only = argc > 1 ? argv[1] : nullptr;
  CriterionOptions options;
  bool all_passed = true;
  for (const auto& criterion : all_criteria()) {
    if (only && std::strcmp(only, criterion.key) != 0) continue;
    CriterionResult result = criterion.run(options);
    std::cout << summary_line(result) << "\n";
    for (const auto& note : result.notes) std::cout << "    " << note << "\n";
    std::cout.flush();
    all_passed = all_passed && result.passed();
  }
  return all_passed ? 0 : 1;
}
