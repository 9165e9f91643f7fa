#ifndef HYPERTUTTE_SELFTEST_HPP
#define HYPERTUTTE_SELFTEST_HPP

#include <string>
#include <vector>

namespace hypertutte {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // failure explanation or short success note
};

/// Runs the ten acceptance criteria in order. Never throws: any exception
/// becomes a failed criterion with the message in `detail`.
std::vector<CriterionResult> run_acceptance();

}  // namespace hypertutte

#endif
