#ifndef IHPAIR_SERIES_HPP
#define IHPAIR_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "ihpair/mpoly.hpp"

namespace ihpair {

struct SeriesError : std::runtime_error {
  explicit SeriesError(const std::string& what) : std::runtime_error(what) {}
};
struct NonUnitLeading : SeriesError {
  NonUnitLeading() : SeriesError("non-unit leading term") {}
};
struct TruncationTooSmall : SeriesError {
  TruncationTooSmall() : SeriesError("truncation too small") {}
};

// Truncated iterated Laurent series in y_1 >> y_2 >> ... >> y_{nm} with
// coefficients rational in the delta parameters (d_2 Laurent, d_k>=3
// truncated at their box caps).  The window box is the validity region:
// arithmetic intersects windows and discards terms outside.
struct ILSeries {
  MPoly p;      // y-space poly, nm = number of y variables
  SlotBox box;  // validity window

  ILSeries() = default;
  ILSeries(MPoly poly, SlotBox b) : p(std::move(poly)), box(b) { p = p.filtered(box); }

  int ny() const { return p.nm; }
  bool is_zero() const { return p.is_zero(); }
};

ILSeries series_add(const ILSeries& a, const ILSeries& b);
ILSeries series_mul(const ILSeries& a, const ILSeries& b);
ILSeries series_scale(const ILSeries& a, const Rat& c);

// Multiplicative inverse.  Requires the leading coefficient (coefficient of
// the dominant y-monomial, delta part reduced) to be a nonzero rational times
// a power of d_2; throws NonUnitLeading otherwise.
ILSeries series_invert(const ILSeries& s);

// exp of a series with zero constant term (throws otherwise).
ILSeries series_exp(const ILSeries& s);

// n-th Bernoulli number, convention u/(e^u - 1) = sum B_n u^n / n!.
Rat bernoulli(int n);

// 1/(1 - e^u) = -1/u + 1/2 - u/12 + u^3/720 - ... composed with the series u.
// `order` caps the number of Bernoulli-tail terms; pass <= 0 to let the
// window decide (iterate until powers of u die inside the window).
ILSeries one_minus_exp_inv(const ILSeries& u, int order = 0);

// Residue in the innermost variable: coefficient of y_inner^{-1}, with that
// slot dropped from the exponent pattern.  `inner` is the 0-based y slot.
ILSeries residue_innermost(const ILSeries& s, int inner);

// Full iterated residue, innermost variable first; returns a delta-only
// polynomial (Laurent in d_2).
MPoly iterated_residue(const ILSeries& s);

// Coefficient of the delta monomial d_2^{dexp[0]} d_3^{dexp[1]} ... in a
// delta-only polynomial.
Rat delta_coeff_value(const MPoly& deltas, const std::vector<int>& dexp);

}  // namespace ihpair

#endif
