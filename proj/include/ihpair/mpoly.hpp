#ifndef IHPAIR_MPOLY_HPP
#define IHPAIR_MPOLY_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ihpair/rat.hpp"

namespace ihpair {

// Exponent vector over a fixed slot layout: nm "main" variables first
// (x_1..x_r in x-space, y_1..y_{r-1} in y-space), then nd delta parameters
// d_2..d_{nd+1}.  Main exponents and the d_2 exponent may go negative in
// series use; d_k for k >= 3 never does.
inline constexpr int kMaxSlots = 12;

struct Mono {
  std::array<int16_t, kMaxSlots> e{};

  bool operator==(const Mono& o) const { return e == o.e; }

  Mono mul(const Mono& o) const {
    Mono m;
    for (int i = 0; i < kMaxSlots; ++i) m.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return m;
  }
  bool is_one() const {
    for (auto v : e)
      if (v != 0) return false;
    return true;
  }
};

struct MonoHash {
  size_t operator()(const Mono& m) const {
    uint64_t h = 1469598103934665603ull;
    for (auto v : m.e) {
      h ^= static_cast<uint16_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Canonical storage order: plain slotwise lex.  The series code uses its own
// innermost-first comparison where expansion order matters.
inline bool mono_less(const Mono& a, const Mono& b) { return a.e < b.e; }

// Per-slot exponent box.  Bounds default to "unbounded" sentinels; a box is
// attached to series values and intersected through arithmetic.
inline constexpr int16_t kNoBound = 32000;

struct SlotBox {
  std::array<int16_t, kMaxSlots> lo;
  std::array<int16_t, kMaxSlots> hi;

  SlotBox() {
    lo.fill(static_cast<int16_t>(-kNoBound));
    hi.fill(kNoBound);
  }
  bool contains(const Mono& m) const {
    for (int i = 0; i < kMaxSlots; ++i)
      if (m.e[i] < lo[i] || m.e[i] > hi[i]) return false;
    return true;
  }
  SlotBox intersect(const SlotBox& o) const {
    SlotBox b;
    for (int i = 0; i < kMaxSlots; ++i) {
      b.lo[i] = std::max(lo[i], o.lo[i]);
      b.hi[i] = std::min(hi[i], o.hi[i]);
    }
    return b;
  }
  SlotBox widened(int by) const {
    SlotBox b;
    for (int i = 0; i < kMaxSlots; ++i) {
      b.lo[i] = static_cast<int16_t>(lo[i] <= -kNoBound ? lo[i] : lo[i] - by);
      b.hi[i] = static_cast<int16_t>(hi[i] >= kNoBound ? hi[i] : hi[i] + by);
    }
    return b;
  }
  bool operator==(const SlotBox& o) const { return lo == o.lo && hi == o.hi; }
};

// Sparse multivariate polynomial (Laurent exponents allowed) with exact
// rational coefficients.  Terms are kept sorted in canonical order with no
// zero coefficients, so equality is representation equality.
struct MPoly {
  int nm = 0;
  int nd = 0;
  std::vector<std::pair<Mono, Rat>> t;

  static MPoly zero(int nm, int nd) { return MPoly{nm, nd, {}}; }
  static MPoly constant(int nm, int nd, const Rat& c) {
    MPoly p{nm, nd, {}};
    if (c != 0) p.t.emplace_back(Mono{}, c);
    return p;
  }
  // Single variable power c * slot^exp.
  static MPoly var(int nm, int nd, int slot, int exp = 1, const Rat& c = Rat(1));

  bool is_zero() const { return t.empty(); }
  bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].first.is_one()); }
  Rat constant_term() const;

  int delta_slot(int k) const {  // slot of d_k, k >= 2
    if (k < 2 || k - 2 >= nd) throw std::out_of_range("delta_slot");
    return nm + (k - 2);
  }

  void normalize();  // sort + combine + drop zeros
  MPoly filtered(const SlotBox& box) const;

  std::string str(bool yspace = false) const;

  bool operator==(const MPoly& o) const { return nm == o.nm && nd == o.nd && t == o.t; }
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a);
MPoly operator*(const MPoly& a, const Rat& c);
MPoly operator*(const Rat& c, const MPoly& a);

// Product, optionally discarding result terms outside `box`.
MPoly mul(const MPoly& a, const MPoly& b, const SlotBox* box = nullptr);
inline MPoly operator*(const MPoly& a, const MPoly& b) { return mul(a, b); }

MPoly mono_times(const MPoly& a, const Mono& m, const Rat& c);
MPoly pow(const MPoly& a, int e, const SlotBox* box = nullptr);

// Partial derivative with respect to one slot.
MPoly derivative(const MPoly& a, int slot);

// Substitute each main variable by a linear form (given per slot) into a
// target context; delta exponents are carried over unchanged.
MPoly substitute_main(const MPoly& a, const std::vector<MPoly>& forms, int out_nm, int out_nd);

// Coefficient of a given delta exponent pattern (delta slots only); the
// result keeps the main variables and has all delta exponents zero.
MPoly delta_coefficient(const MPoly& a, const std::vector<int>& dexp);

// True iff the polynomial is invariant under translation along (1,..,1) in
// the main variables, i.e. sum of main partials vanishes.
bool translation_invariant(const MPoly& a);

}  // namespace ihpair

#endif
