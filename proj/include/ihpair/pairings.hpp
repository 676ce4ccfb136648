#ifndef IHPAIR_PAIRINGS_HPP
#define IHPAIR_PAIRINGS_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ihpair/iber.hpp"

namespace ihpair {

inline constexpr const char* kEngineVersion = "ihpair-0.1.0";

enum class Target { M1, P0, IH };

std::string target_name(Target t);
std::optional<Target> target_from_name(const std::string& s);

// A pairing request: exponents of the generator classes.
//   a[k] = exponent of a_k, f[k] = exponent of f_k (2 <= k <= r),
//   b = set of (k,j) with l_{k,j} = 1 (1 <= j <= 2g), m = power of z (P0).
struct PairingSpec {
  int r = 2, g = 2;
  int m = 0;
  std::map<int, int> a;
  std::map<int, int> f;
  std::set<std::pair<int, int>> b;

  bool operator==(const PairingSpec& o) const = default;
  int fexp(int k) const {
    auto it = f.find(k);
    return it == f.end() ? 0 : it->second;
  }
  int aexp(int k) const {
    auto it = a.find(k);
    return it == a.end() ? 0 : it->second;
  }
};

struct EngineOptions {
  int family_index = 0;   // 0 = default (n = r)
  int window_bump = 0;    // widen the heuristic windows
  bool debug_no_cancel = false;
  bool parallel = true;   // OpenMP over the family sum
  bool cross_check = true;  // stability(+2) and second-family re-check
};

struct PairingResult {
  Rat value;
  PairingSpec spec;
  Target target;
  bool degree_ok = true;
  EngineWindow windows;
  int family_index = 0;
  double ms = 0.0;
  std::string engine = kEngineVersion;
};

// Dimension of the target space and the cohomological degree test.
long target_dimension(Target t, int r, int g);
bool degree_check(Target t, const PairingSpec& s);

// Heuristic truncation budget for a spec (pole budget + requested
// delta orders); widened by `bump`.
EngineWindow default_window(Target t, const PairingSpec& s, int bump = 0);

// Sum of iber over the Hamiltonian family H_n; per-basis evaluations are
// independent and run under OpenMP when `parallel`; the fold is performed
// in enumeration order either way.
MPoly family_sum(const QSpec& Q, const std::vector<RootBasis>& family,
                 const std::function<IberInput(const RootBasis&)>& input_for,
                 const EngineWindow& W, bool parallel, bool debug_no_cancel = false);

// The three evaluators.  Each computes the exact rational pairing; with
// cross_check the value is recomputed with windows widened by 2 and at a
// second family index, and the budget is doubled and retried on mismatch.
PairingResult integrate_m1(const PairingSpec& s, const EngineOptions& opt = {});
PairingResult integrate_p0(const PairingSpec& s, const EngineOptions& opt = {});
PairingResult ih_pairing(const PairingSpec& s, const EngineOptions& opt = {});
PairingResult evaluate_pairing(Target t, const PairingSpec& s, const EngineOptions& opt = {});

// gamma^p = p! * sum over p-subsets S of {1..g} of prod_{j in S} b_2^j b_2^{j+g}
// as (coefficient, l-table) summands.
std::vector<std::pair<Rat, std::set<std::pair<int, int>>>> gamma_expand(int p, int g);

// Pairing of a_2^m f_2^n gamma^p on the rank-2 target via gamma expansion.
Rat ih_rank2_with_gamma(int g, int m, int n, int p, const EngineOptions& opt = {});

// Independent one-variable reference evaluation for r = 2 (no nested series);
// gamma handled by expansion.  Covers all three targets.
Rat rank2_reference(Target t, const PairingSpec& s, int family_index = 0);

// Rank-2 closed forms.
Rat rank2_residue_form(int g, int m, int n, int p);  // requires 2m+n+3p = 3g-3
Rat kappa(int j);                                    // t/tanh t = sum kappa_j t^{2j}
Rat kiem_pairing(int g, int m, int n);               // requires 2m+n = 3g-3, m < g-1

// Pairing of the normalized fundamental-class representative against 1.
Rat fundamental_class_check(int g, const EngineOptions& opt = {});

}  // namespace ihpair

#endif
