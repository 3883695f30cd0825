#pragma once

#include <string>
#include <vector>

#include "lamina/parallel.hpp"

namespace lamina {

// The acceptance suite: each criterion is an exact property checked at a
// pinned desk-scale bound. Names and bounds are fixed here, in code.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(const Parallelism* par = nullptr,
                                            long long overflow_limit = 1000000);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace lamina
