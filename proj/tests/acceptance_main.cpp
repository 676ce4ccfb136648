// Acceptance gate: runs all ten criteria and prints one pass/fail line each.

#include <cstdio>

#include "ihpair/verify.hpp"

int main() {
  const char* names[] = {
      "1 rank-2 closed-form equivalence",
      "2 kappa-form consistency",
      "3 fundamental-class normalization",
      "4 smooth-case sanity",
      "5 Berezin normalization",
      "6 Hamiltonian-family independence",
      "7 shift and permutation identities",
      "8 complete-homogeneous identity",
      "9 degree vanishing",
      "10 rank-3 stability",
  };
  auto reports = ihpair::acceptance_criteria();
  int failed = 0;
  for (size_t i = 0; i < reports.size(); ++i) {
    size_t pass = 0;
    for (const auto& c : reports[i].checks) pass += c.pass;
    bool ok = pass == reports[i].checks.size();
    std::printf("criterion %-36s %s (%zu/%zu)\n", names[i], ok ? "PASS" : "FAIL", pass,
                reports[i].checks.size());
    if (!ok) {
      ++failed;
      for (const auto& c : reports[i].checks)
        if (!c.pass) std::printf("    FAIL %s: %s\n", c.name.c_str(), c.detail.c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}
