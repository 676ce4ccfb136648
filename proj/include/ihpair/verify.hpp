#ifndef IHPAIR_VERIFY_HPP
#define IHPAIR_VERIFY_HPP

#include <string>
#include <vector>

#include "ihpair/pairings.hpp"

namespace ihpair {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Individual verification suites.  Scale parameters default to the values
// the acceptance gate runs at.
SuiteReport verify_rank2_oracle(int gmax = 4);
SuiteReport verify_kiem(int gmax = 4);
SuiteReport verify_fundamental_class(int gmax = 3);
SuiteReport verify_smooth_case();
SuiteReport verify_berezin(int rmax = 4, int gmax = 3);
SuiteReport verify_family_independence(int rmax = 3, int g = 2);
SuiteReport verify_residue_identities(int instances = 20);
SuiteReport verify_homogeneous_identity(int rmax = 4);
SuiteReport verify_degree_vanishing(int instances = 20);
SuiteReport verify_rank3_stability();

// All ten acceptance criteria in order.
std::vector<SuiteReport> acceptance_criteria();

// Named suite lookup for the CLI ("rank2", "kiem", "fclass", "smooth",
// "berezin", "basis-independence", "residue-identities", "homogeneous",
// "degree", "rank3", "all").  Scale overrides <= 0 mean default.
std::vector<SuiteReport> run_suite(const std::string& name, int r = 0, int g = 0);

}  // namespace ihpair

#endif
