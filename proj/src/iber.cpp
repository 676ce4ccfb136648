#include "ihpair/iber.hpp"

#include <algorithm>

namespace ihpair {

SlotBox EngineWindow::to_box(int ny, int nd) const {
  SlotBox b;
  for (int i = 0; i < ny; ++i) {
    b.lo[i] = static_cast<int16_t>(-yneg);
    b.hi[i] = static_cast<int16_t>(ypos);
  }
  if (nd > 0) {
    b.lo[ny] = static_cast<int16_t>(d2lo);
    b.hi[ny] = static_cast<int16_t>(d2hi);
    for (int k = 1; k < nd; ++k) {
      b.lo[ny + k] = 0;
      b.hi[ny + k] = static_cast<int16_t>(k - 1 < static_cast<int>(dcap.size()) ? dcap[k - 1] : 0);
    }
  }
  // unused slots stay pinned at zero
  for (int s = ny + nd; s < kMaxSlots; ++s) {
    b.lo[s] = 0;
    b.hi[s] = 0;
  }
  return b;
}

EngineWindow EngineWindow::widened(int by) const {
  EngineWindow w = *this;
  w.yneg += by;
  w.ypos += by;
  w.d2lo -= by;
  w.d2hi += by;
  for (auto& c : w.dcap) c += by;
  return w;
}

MPoly to_y_coordinates(const MPoly& p, const RootBasis& B) {
  if (!translation_invariant(p))
    throw std::invalid_argument("to_y_coordinates: not a function of root differences");
  return substitute_main(p, xbar_y_forms(B, p.nd), B.r - 1, p.nd);
}

namespace {

// per-slot minimum exponent over the terms of a polynomial
std::vector<int> min_exponents(const MPoly& p, int nslots) {
  std::vector<int> mins(nslots, 0);
  for (const auto& [m, c] : p.t)
    for (int s = 0; s < nslots; ++s) mins[s] = std::min(mins[s], static_cast<int>(m.e[s]));
  return mins;
}

}  // namespace

MPoly iber(const QSpec& Q, const RootBasis& B, const IberInput& in, const EngineWindow& W,
           bool debug_no_cancel) {
  const int r = Q.r;
  const int ny = r - 1;
  const int nd = Q.q.nd;
  const SlotBox box = W.to_box(ny, nd);

  // assemble the factors
  if (!translation_invariant(in.numerator))
    throw std::invalid_argument("iber: numerator not a function of root differences");
  std::vector<MPoly> yforms = xbar_y_forms(B, nd);
  MPoly num_y = substitute_main(in.numerator, yforms, ny, nd);

  MPoly exp_arg_x = directional(Q.q, in.weight);
  if (!in.exp_extra.is_zero()) exp_arg_x = exp_arg_x + in.exp_extra;
  ILSeries expf = series_exp(ILSeries(substitute_main(exp_arg_x, yforms, ny, nd), box));

  std::vector<ILSeries> denom_factors;
  for (int i = 0; i < ny; ++i) {
    MPoly u = q_directional(Q, B, B.root_vector(i));
    denom_factors.push_back(one_minus_exp_inv(ILSeries(u, box)));
  }
  for (const auto& [ij, e] : in.poles) {
    if (e == 0) continue;
    if (e < 0) throw std::invalid_argument("iber: negative pole exponent");
    MPoly root = MPoly::var(r, nd, ij.first - 1) - MPoly::var(r, nd, ij.second - 1);
    ILSeries inv = series_invert(ILSeries(substitute_main(root, yforms, ny, nd), box));
    ILSeries power = inv;
    for (int t = 1; t < e; ++t) power = series_mul(power, inv);
    denom_factors.push_back(std::move(power));
  }

  if (debug_no_cancel) {
    // expand the measure determinant and divide by the Hessian determinant
    // as a series instead of cancelling them
    MPoly det = hessian_det(Q, B);
    denom_factors.push_back(ILSeries(det, box));
    denom_factors.push_back(series_invert(ILSeries(det, box)));
  }

  // multiply positive factors first, then the pole-led ones; intermediate
  // products keep extra headroom above the window to feed later negative
  // exponents
  std::vector<std::vector<int>> remaining_mins;
  for (const auto& f : denom_factors) remaining_mins.push_back(min_exponents(f.p, ny + nd));
  auto work_box = [&](size_t from) {
    SlotBox work = box;
    for (int s = 0; s < ny + nd; ++s) {
      long headroom = 0;
      for (size_t j = from; j < denom_factors.size(); ++j) headroom -= remaining_mins[j][s];
      work.hi[s] = static_cast<int16_t>(std::min<long>(box.hi[s] + headroom, kNoBound));
    }
    return work;
  };
  SlotBox first = work_box(0);
  ILSeries S = series_mul(ILSeries(num_y, first), ILSeries(expf.p, first));
  for (size_t i = 0; i < denom_factors.size(); ++i) {
    SlotBox work = work_box(i);
    S = series_mul(ILSeries(S.p, work), ILSeries(denom_factors[i].p, work));
  }
  S = ILSeries(S.p, box);

  return iterated_residue(S);
}

}  // namespace ihpair
