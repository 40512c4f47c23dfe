#pragma once

// The sweeps behind `fracchern verify`: each criterion cross-checks two
// independent computations inside the library.

#include <string>
#include <vector>

#include "fracchern/qtheta.hpp"

namespace fracchern {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;  // first failure, or a count of checks
};

struct VerifyOptions {
  int max_n = 8;           // closed form vs brute force
  int tower_max_n = 6;     // splitting, towers, transgression
  int gch_max_n = 3;
  QExponent q_order{8};    // q^4
  int gch_degree_cap = 8;
};

std::vector<CriterionResult> run_verification(const VerifyOptions& options);
CriterionResult verify_criterion(int id, const VerifyOptions& options);

}  // namespace fracchern
