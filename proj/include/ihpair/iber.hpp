#ifndef IHPAIR_IBER_HPP
#define IHPAIR_IBER_HPP

#include <map>
#include <utility>

#include "ihpair/series.hpp"
#include "ihpair/symfun.hpp"
#include "ihpair/weights.hpp"

namespace ihpair {

// Per-run truncation budget.  y variables get the window [-yneg, ypos];
// d_2 gets [d2lo, d2hi]; d_k (k >= 3) is capped at dcap[k-3].
struct EngineWindow {
  int yneg = 0, ypos = 0;
  int d2lo = 0, d2hi = 0;
  std::vector<int> dcap;

  SlotBox to_box(int ny, int nd) const;
  EngineWindow widened(int by) const;
  bool operator==(const EngineWindow& o) const = default;
};

// One residue evaluation request: numerator and pole exponents are given in
// the x variables; the engine rewrites them in the y coordinates of B.
struct IberInput {
  MPoly numerator;                           // x-space, translation invariant
  std::map<std::pair<int, int>, int> poles;  // (i,j), i != j -> exponent of (x_i - x_j)
  WeightVector weight;                       // evaluation argument a; exp(Q_a) applied verbatim
  MPoly exp_extra;                           // extra exponent argument (x-space), may be zero
};

// Exact rewrite of a translation-invariant x polynomial in the y coordinates
// of B; throws if the polynomial is not a function of the root differences.
MPoly to_y_coordinates(const MPoly& p, const RootBasis& B);

// The iterated-residue functional: assembles
//   numerator * exp(Q_a + extra) / (poles * prod_i (1 - exp(Q_{beta^[i]})))
// in y coordinates (the wedge measure cancels the Hessian determinant of the
// formulas analytically), expands within the window, and extracts the nested
// residue, innermost variable first.  Returns a delta-only polynomial,
// Laurent in d_2.  With debug_no_cancel the Hessian determinant is expanded
// and inverted as a series instead of being cancelled.
MPoly iber(const QSpec& Q, const RootBasis& B, const IberInput& in, const EngineWindow& W,
           bool debug_no_cancel = false);

}  // namespace ihpair

#endif
