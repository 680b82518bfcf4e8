#ifndef CONFALG_SUITE_HPP
#define CONFALG_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace confalg {

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  int derivation_window = 2;
  unsigned derivation_degree = 4;
  int module_window = 3;
  int gen_bound = 2;
  unsigned classify_degree = 6;
  unsigned witness_degree = 3;
  int lie_window = 5;
  std::size_t property_cases = 1000;
  std::size_t lca_cases = 100;
  /// Count a run that exceeds its time budget as a failure.
  bool enforce_budget = true;
};

struct CriterionCheck {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string scope;
  double budget_seconds = 0;
  double seconds = 0;
  bool exact = false;  // every check passed
  bool within_budget = false;
  bool enforce_budget = true;
  std::string error;  // exception text, if the run aborted
  std::vector<CriterionCheck> checks;

  bool pass() const { return exact && error.empty() && (within_budget || !enforce_budget); }
  std::size_t failed_checks() const;
  /// "PASS criterion 4 derivation dichotomy: 90/90 checks (31.2 s, budget 60 s)"
  std::string line() const;
};

struct CriterionInfo {
  int id;
  std::string name;
  double budget_seconds;
};

const std::vector<CriterionInfo>& criteria();

/// Runs one criterion.  Each criterion draws from its own generator seeded
/// by (seed, id), so results do not depend on which others run.
CriterionResult run_criterion(int id, const SuiteOptions& options = {});

/// All criteria in order, or just `ids`.
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {}, const std::vector<int>& ids = {});

/// Statement of what a passing run certifies.
std::string suite_scope(const SuiteOptions& options);

}  // namespace confalg

#endif  // CONFALG_SUITE_HPP
