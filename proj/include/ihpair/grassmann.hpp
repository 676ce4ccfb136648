#ifndef IHPAIR_GRASSMANN_HPP
#define IHPAIR_GRASSMANN_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "ihpair/mpoly.hpp"
#include "ihpair/symfun.hpp"
#include "ihpair/weights.hpp"

namespace ihpair {

// Sparse exterior-algebra element on generators zeta_a^j (a = 1..r-1,
// j = 1..2g) with polynomial coefficients.  Bit idx(a,j) = (j-1)(r-1)+(a-1),
// so ascending bit order is the canonical (j,a) generator order.
struct GrassElem {
  int r = 0, g = 0;
  std::map<uint32_t, MPoly> c;

  static int idx(int a, int j, int r) { return (j - 1) * (r - 1) + (a - 1); }
  int ngen() const { return 2 * g * (r - 1); }

  static GrassElem zero(int r, int g) { return GrassElem{r, g, {}}; }
  static GrassElem scalar(int r, int g, MPoly coeff);
  // coeff * zeta_{a1}^{j1} (single generator)
  static GrassElem generator(int r, int g, int a, int j, MPoly coeff);

  void normalize();  // drop zero coefficients
  bool operator==(const GrassElem& o) const { return r == o.r && g == o.g && c == o.c; }
};

GrassElem wedge_add(const GrassElem& u, const GrassElem& v);
GrassElem wedge_mul(const GrassElem& u, const GrassElem& v);
GrassElem wedge_scale(const GrassElem& u, const MPoly& p);

// exp of an even element with no degree-0 part; finite by nilpotency.
// `bound` caps the number of powers.
GrassElem gr_exp_even(const GrassElem& u, int bound = 64);

// r^g times the signed coefficient of the reference top monomial
// prod_{j=1..g} prod_{a=1..r-1} (zeta_a^j zeta_a^{g+j}).
MPoly berezin_integral(const GrassElem& u, int r, int g);

// The torus piece of the residue integrands:
//   int_{T^2g} exp(-sum_{a,b,j<=g} zeta_a^j zeta_b^{j+g} Q_{u_a u_b})
//              prod_{(k,j) in l} (sum_a zeta_a^j tau_{k,u_a})
// over an orthonormal basis held in scaled form; exact MPoly in x and delta.
// Odd factors are multiplied in increasing (k,j) order.  When `factorized`
// the integral is evaluated blockwise over j = 1..g, otherwise on the full
// 2g(r-1)-generator algebra (reference path).
MPoly torus_factor(const QSpec& Q, const ScaledOrthoBasis& ortho,
                   const std::set<std::pair<int, int>>& l_table, int g,
                   bool factorized = true);

}  // namespace ihpair

#endif
