#include "ihpair/series.hpp"

#include <mutex>

namespace ihpair {

namespace {

// Magnitude key under the expansion regime: terms with higher total degree in
// the nilpotent parameters d_3.. are smaller; among equal nilpotent degree the
// innermost-first lex order on y exponents decides (y_{inner} << y_{outer},
// all small against constants); d_2 breaks remaining ties as a small
// parameter.  Returns <0 if a is larger in magnitude than b.
int cmp_key(const Mono& a, const Mono& b, int nm, int nd) {
  int da = 0, db = 0;
  for (int k = 1; k < nd; ++k) {  // d_3 and up
    da += a.e[nm + k];
    db += b.e[nm + k];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = nm - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  if (nd > 0 && a.e[nm] != b.e[nm]) return a.e[nm] < b.e[nm] ? -1 : 1;
  return 0;
}

bool key_positive(const Mono& m, int nm, int nd) {
  Mono one{};
  return cmp_key(one, m, nm, nd) < 0;
}

Mono inverse_mono(const Mono& m) {
  Mono r;
  for (int i = 0; i < kMaxSlots; ++i) r.e[i] = static_cast<int16_t>(-m.e[i]);
  return r;
}

constexpr int kMaxGeomIter = 20000;

}  // namespace

ILSeries series_add(const ILSeries& a, const ILSeries& b) {
  SlotBox box = a.box.intersect(b.box);
  return ILSeries(a.p + b.p, box);
}

ILSeries series_mul(const ILSeries& a, const ILSeries& b) {
  SlotBox box = a.box.intersect(b.box);
  return ILSeries(mul(a.p, b.p, &box), box);
}

ILSeries series_scale(const ILSeries& a, const Rat& c) { return ILSeries(a.p * c, a.box); }

ILSeries series_invert(const ILSeries& s) {
  if (s.is_zero()) throw NonUnitLeading();
  const int nm = s.p.nm, nd = s.p.nd;
  // locate the unique maximal-magnitude term
  size_t lead = 0;
  bool tie = false;
  for (size_t i = 1; i < s.p.t.size(); ++i) {
    int c = cmp_key(s.p.t[i].first, s.p.t[lead].first, nm, nd);
    if (c < 0) {
      lead = i;
      tie = false;
    } else if (c == 0) {
      tie = true;
    }
  }
  const Mono m0 = s.p.t[lead].first;
  const Rat c0 = s.p.t[lead].second;
  // the unit must be free of the nilpotent parameters
  for (int k = 1; k < nd; ++k)
    if (m0.e[nm + k] != 0) throw NonUnitLeading();
  if (tie) throw NonUnitLeading();

  // s = c0*m0*(1 + R), R strictly smaller than 1; invert by geometric series
  MPoly rest = s.p;
  for (auto& [m, c] : rest.t)
    if (m == m0) c -= c0;
  rest.normalize();
  MPoly r = mono_times(rest, inverse_mono(m0), Rat(1) / c0).filtered(s.box);
  for (const auto& [m, c] : r.t)
    if (!key_positive(m, nm, nd)) throw NonUnitLeading();

  MPoly acc = MPoly::constant(nm, nd, Rat(1));
  MPoly power = acc;
  int iter = 0;
  while (true) {
    power = mul(power, r, &s.box);
    if (power.is_zero()) break;
    if (++iter > kMaxGeomIter) throw TruncationTooSmall();
    acc = (iter % 2) ? acc - power : acc + power;
  }
  return ILSeries(mono_times(acc, inverse_mono(m0), Rat(1) / c0), s.box);
}

ILSeries series_exp(const ILSeries& s) {
  const int nm = s.p.nm, nd = s.p.nd;
  for (const auto& [m, c] : s.p.t)
    if (!key_positive(m, nm, nd))
      throw SeriesError("series_exp: argument has a non-small term");
  MPoly acc = MPoly::constant(nm, nd, Rat(1));
  MPoly power = acc;
  Rat fact(1);
  int n = 0;
  while (true) {
    power = mul(power, s.p, &s.box);
    if (power.is_zero()) break;
    if (++n > kMaxGeomIter) throw TruncationTooSmall();
    fact *= n;
    acc = acc + power * (Rat(1) / fact);
  }
  return ILSeries(acc, s.box);
}

Rat bernoulli(int n) {
  if (n < 0) throw std::domain_error("bernoulli: negative index");
  static std::vector<Rat> cache{Rat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Rat acc(0);
    for (int k = 0; k < m; ++k) acc += rat_binomial(m + 1, k) * cache[k];
    cache.push_back(-acc / rat_binomial(m + 1, m));
  }
  return cache[n];
}

ILSeries one_minus_exp_inv(const ILSeries& u, int order) {
  ILSeries invu = series_invert(u);
  // tail = sum B_n u^n / n!  (= u/(e^u-1))
  MPoly acc = MPoly::constant(u.p.nm, u.p.nd, Rat(1));
  MPoly power = acc;
  Rat fact(1);
  int n = 0;
  while (true) {
    power = mul(power, u.p, &u.box);
    if (power.is_zero()) break;
    ++n;
    if (order > 0 && n > order) break;
    if (n > kMaxGeomIter) throw TruncationTooSmall();
    fact *= n;
    Rat b = bernoulli(n);
    if (b != 0) acc = acc + power * (b / fact);
  }
  ILSeries tail(acc, u.box);
  return series_scale(series_mul(invu, tail), Rat(-1));
}

ILSeries residue_innermost(const ILSeries& s, int inner) {
  if (inner < 0 || inner >= s.p.nm) throw std::out_of_range("residue_innermost");
  if (s.box.lo[inner] > -1 || s.box.hi[inner] < -1) throw TruncationTooSmall();
  MPoly r{s.p.nm, s.p.nd, {}};
  for (const auto& [m, c] : s.p.t) {
    if (m.e[inner] != -1) continue;
    Mono mm = m;
    mm.e[inner] = 0;
    r.t.emplace_back(mm, c);
  }
  r.normalize();
  SlotBox box = s.box;
  box.lo[inner] = 0;
  box.hi[inner] = 0;
  return ILSeries(r, box);
}

MPoly iterated_residue(const ILSeries& s) {
  ILSeries cur = s;
  for (int i = s.p.nm - 1; i >= 0; --i) cur = residue_innermost(cur, i);
  for (const auto& [m, c] : cur.p.t)
    for (int i = 0; i < cur.p.nm; ++i)
      if (m.e[i] != 0) throw SeriesError("iterated_residue: leftover y exponent");
  return cur.p;
}

Rat delta_coeff_value(const MPoly& deltas, const std::vector<int>& dexp) {
  if (static_cast<int>(dexp.size()) != deltas.nd)
    throw std::invalid_argument("delta_coeff_value: pattern size");
  for (const auto& [m, c] : deltas.t) {
    bool match = true;
    for (int i = 0; i < deltas.nm && match; ++i) match = m.e[i] == 0;
    for (int k = 0; k < deltas.nd && match; ++k) match = m.e[deltas.nm + k] == dexp[k];
    if (match) return c;
  }
  return Rat(0);
}

}  // namespace ihpair
