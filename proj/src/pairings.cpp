#include "ihpair/pairings.hpp"

#include <chrono>
#include <exception>
#include <functional>

#include "ihpair/grassmann.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ihpair {

std::string target_name(Target t) {
  switch (t) {
    case Target::M1: return "m1";
    case Target::P0: return "p0";
    case Target::IH: return "ih";
  }
  return "?";
}

std::optional<Target> target_from_name(const std::string& s) {
  if (s == "m1") return Target::M1;
  if (s == "p0") return Target::P0;
  if (s == "ih") return Target::IH;
  return std::nullopt;
}

long target_dimension(Target t, int r, int g) {
  long dim = static_cast<long>(r) * r - 1;
  dim *= (g - 1);
  if (t == Target::P0) dim += r - 1;
  return dim;
}

bool degree_check(Target t, const PairingSpec& s) {
  if (t != Target::P0 && s.m != 0) return false;
  long deg = 2L * s.m;
  for (const auto& [k, mk] : s.a) deg += 2L * k * mk;
  for (const auto& [k, nk] : s.f) deg += (2L * k - 2) * nk;
  for (const auto& [k, j] : s.b) {
    (void)j;
    deg += 2L * k - 1;
  }
  return deg == 2 * target_dimension(t, s.r, s.g);
}

EngineWindow default_window(Target t, const PairingSpec& s, int bump) {
  const int r = s.r, g = s.g;
  int total_delta = 0, tail_delta = 0;
  for (const auto& [k, nk] : s.f) {
    total_delta += nk;
    if (k >= 3) tail_delta += nk;
  }
  // polynomial degree of the assembled numerator: tau powers, the z-power
  // factors, the odd torus entries (degree k-1 each) and the coupled
  // second-derivative entries (degree <= r-2 per remaining block pair)
  long numer_deg = 0;
  for (const auto& [k, mk] : s.a) numer_deg += static_cast<long>(k) * mk;
  if (t == Target::P0) numer_deg += s.m;
  if (t == Target::IH) numer_deg += r - 1;
  for (const auto& [k, j] : s.b) {
    (void)j;
    numer_deg += k - 1;
  }
  numer_deg += static_cast<long>(g * (r - 1) - s.b.size() / 2) * (r - 2);
  EngineWindow w;
  w.yneg = (2 * g - 2) * (r - 1) + r + 2 + bump;
  w.ypos = total_delta * r + 2 + bump + static_cast<int>(numer_deg);
  w.d2hi = s.fexp(2) + (r - 1) + tail_delta + 2 + bump;
  w.d2lo = -((r - 1) + tail_delta + 2 + bump);
  for (int k = 3; k <= r; ++k) w.dcap.push_back(s.fexp(k));
  return w;
}

MPoly family_sum(const QSpec& Q, const std::vector<RootBasis>& family,
                 const std::function<IberInput(const RootBasis&)>& input_for,
                 const EngineWindow& W, bool parallel, bool debug_no_cancel) {
  const int n = static_cast<int>(family.size());
  std::vector<MPoly> parts(n);
  std::exception_ptr err;
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        parts[i] = iber(Q, family[i], input_for(family[i]), W, debug_no_cancel);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      try {
        parts[i] = iber(Q, family[i], input_for(family[i]), W, debug_no_cancel);
      } catch (...) {
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
  // deterministic fold in enumeration order
  MPoly sum = MPoly::zero(Q.r - 1, Q.q.nd);
  for (const auto& p : parts) sum = sum + p;
  return sum;
}

namespace {

Rat core_value(Target t, const PairingSpec& s, int family_index, const EngineWindow& W,
               const EngineOptions& opt) {
  const int r = s.r, g = s.g;
  const int nd = r - 1;
  QSpec Q = make_qspec(r);
  ScaledOrthoBasis ortho = orthonormal_basis(r);
  MPoly torus = torus_factor(Q, ortho, s.b, g, true);
  if (torus.is_zero()) return Rat(0);

  MPoly num = torus;
  for (const auto& [k, mk] : s.a)
    if (mk > 0) num = num * pow(tau_poly(k, r, nd), mk);
  if (t == Target::P0 && s.m > 0) num = num * pow(xbar_poly(r, r, nd), s.m);
  if (t == Target::IH) num = num * pow(-xbar_poly(r, r, nd), r - 1);

  std::map<std::pair<int, int>, int> poles;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) poles[{i, j}] = 2 * g - 2;
  if (t != Target::M1)
    for (int i = 1; i < r; ++i) poles[{r, i}] += 1;

  WeightVector c = c_vector(r);
  MPoly exp_extra = (t == Target::M1) ? directional(Q.q, c) : MPoly::zero(r, nd);

  auto input_for = [&](const RootBasis& B) {
    auto [intpart, frac] = lattice_reduce(c, B);
    (void)frac;
    return IberInput{num, poles, weight_scale(intpart, Rat(-1)), exp_extra};
  };

  MPoly sum = family_sum(Q, hamiltonian_family(r, family_index), input_for, W, opt.parallel,
                         opt.debug_no_cancel);

  // prefactor and generating-function conversion
  Rat pref = (((static_cast<long>(r) * (r - 1) / 2) * (g - 1)) % 2) ? Rat(-1) : Rat(1);
  pref /= rat_factorial(t == Target::M1 ? r : r - 1);
  Rat nfact(1);
  for (const auto& [k, nk] : s.f) {
    (void)k;
    nfact *= rat_factorial(nk);
  }
  std::vector<int> pattern(nd, 0);
  for (const auto& [k, nk] : s.f) pattern[k - 2] = nk;
  return pref * nfact * delta_coeff_value(sum, pattern);
}

PairingResult run_pairing(Target t, const PairingSpec& s, const EngineOptions& opt) {
  PairingResult res;
  res.spec = s;
  res.target = t;
  res.family_index = opt.family_index > 0 ? opt.family_index : s.r;
  if (res.family_index < 1 || res.family_index > s.r)
    throw std::invalid_argument("family index out of range");
  res.degree_ok = degree_check(t, s);

  auto t0 = std::chrono::steady_clock::now();
  if (!res.degree_ok && !opt.debug_no_cancel) {
    res.value = 0;
    res.windows = default_window(t, s, opt.window_bump);
    return res;
  }
  for (int attempt = 0;; ++attempt) {
    EngineWindow W = default_window(t, s, opt.window_bump);
    for (int d = 0; d < attempt; ++d) {
      W.yneg *= 2;
      W.ypos *= 2;
      W.d2lo *= 2;
      W.d2hi *= 2;
    }
    try {
      Rat v1 = core_value(t, s, res.family_index, W, opt);
      if (opt.cross_check) {
        Rat v2 = core_value(t, s, res.family_index, W.widened(2), opt);
        int alt = res.family_index % s.r + 1;
        Rat v3 = core_value(t, s, alt, W, opt);
        if (v1 != v2 || v1 != v3) {
          if (attempt >= 2) throw TruncationTooSmall();
          continue;
        }
        if (s.r == 2 && res.degree_ok && v1 != rank2_reference(t, s, res.family_index))
          throw std::logic_error("rank-2 one-variable cross-check mismatch");
      }
      res.value = v1;
      res.windows = W;
      break;
    } catch (const TruncationTooSmall&) {
      if (attempt >= 2) throw;
    }
  }
  res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

PairingResult integrate_m1(const PairingSpec& s, const EngineOptions& opt) {
  return run_pairing(Target::M1, s, opt);
}
PairingResult integrate_p0(const PairingSpec& s, const EngineOptions& opt) {
  return run_pairing(Target::P0, s, opt);
}
PairingResult ih_pairing(const PairingSpec& s, const EngineOptions& opt) {
  return run_pairing(Target::IH, s, opt);
}
PairingResult evaluate_pairing(Target t, const PairingSpec& s, const EngineOptions& opt) {
  return run_pairing(t, s, opt);
}

std::vector<std::pair<Rat, std::set<std::pair<int, int>>>> gamma_expand(int p, int g) {
  std::vector<std::pair<Rat, std::set<std::pair<int, int>>>> out;
  if (p < 0) throw std::invalid_argument("gamma_expand: negative power");
  if (p > g) return out;  // gamma^p = 0 past the pigeonhole bound
  // p! per squarefree subset, times the parity of regrouping the
  // (j, j+g)-paired product into the canonical (k, j)-sorted order
  Rat coef = rat_factorial(p);
  if ((p * (p - 1) / 2) % 2) coef = -coef;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i + 1;
  while (true) {
    std::set<std::pair<int, int>> table;
    for (int j : idx) {
      table.emplace(2, j);
      table.emplace(2, j + g);
    }
    out.emplace_back(coef, std::move(table));
    // next p-subset of {1..g}
    int i = p - 1;
    while (i >= 0 && idx[i] == g - (p - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Rat ih_rank2_with_gamma(int g, int m, int n, int p, const EngineOptions& opt) {
  Rat total(0);
  for (const auto& [coef, table] : gamma_expand(p, g)) {
    PairingSpec s;
    s.r = 2;
    s.g = g;
    if (m) s.a[2] = m;
    if (n) s.f[2] = n;
    s.b = table;
    total += coef * ih_pairing(s, opt).value;
  }
  return total;
}

// ---------------------------------------------------------------------------
// independent rank-2 reference path: plain Laurent arithmetic in one y
// variable with d_2 coefficients, no nested series machinery

namespace {

using LMap = std::map<std::pair<int, int>, Rat>;  // (y exp, d2 exp) -> coeff

LMap lmul(const LMap& a, const LMap& b, int ymax, int dmax) {
  LMap r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      int y = ka.first + kb.first, d = ka.second + kb.second;
      if (y > ymax || d > dmax) continue;
      r[{y, d}] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

Rat rank2_reference(Target t, const PairingSpec& s, int family_index) {
  if (s.r != 2) throw std::invalid_argument("rank2_reference: r must be 2");
  const int g = s.g;
  if (family_index == 0) family_index = 2;
  if (!degree_check(t, s)) return Rat(0);
  const int m_a = s.aexp(2);
  const int n_f = s.fexp(2);

  // the torus part needs the l-table to pair off as (j, j+g)
  int p = 0;
  {
    auto rest = s.b;
    while (!rest.empty()) {
      auto [k, j] = *rest.begin();
      if (k != 2) return Rat(0);
      rest.erase(rest.begin());
      if (j > g) return Rat(0);
      if (!rest.erase({2, j + g})) return Rat(0);
      ++p;
    }
  }

  // everything in the y coordinate of the chosen basis; H_1 uses y = x1-x2,
  // H_2 uses y = x2-x1
  const bool h1 = family_index == 1;
  const int dpole = (t == Target::M1) ? 2 * g - 2 : 2 * g - 1;
  const Rat pole_sign = (t == Target::M1) ? Rat(1) : (h1 ? Rat(-1) : Rat(1));
  const int ymax = dpole + 1;
  const int dmax = n_f + 2;

  LMap prod{{{0, 0}, Rat(1)}};
  // tau_2^m = (-1/4)^m y^{2m}
  if (m_a) prod = lmul(prod, LMap{{{2 * m_a, 0}, rat_pow(rat(-1, 4), m_a)}}, ymax, dmax);
  // torus factor of a canonical p-pair table: (2 d)^{g-p} y^{2p} times the
  // parity of sorting the paired product into canonical order
  {
    Rat tc = rat_pow(Rat(2), g - p);
    if ((p * (p - 1) / 2) % 2) tc = -tc;
    prod = lmul(prod, LMap{{{2 * p, g - p}, tc}}, ymax, dmax);
  }
  // z-power numerators
  if (t == Target::P0 && s.m) {
    Rat c = rat_pow(h1 ? rat(-1, 2) : rat(1, 2), s.m);
    prod = lmul(prod, LMap{{{s.m, 0}, c}}, ymax, dmax);
  }
  if (t == Target::IH) {
    Rat c = h1 ? rat(1, 2) : rat(-1, 2);
    prod = lmul(prod, LMap{{{1, 0}, c}}, ymax, dmax);
  }
  // exponential factor: M1 carries exp(Q_c + Q_a), the others exp(Q_a);
  // in both coordinates Q_a = -d y [a = -[c]_B] vanishes for H_1 and equals
  // -d y for H_2; Q_c = -d y / 2 for H_1 and +d y / 2 for H_2.
  {
    Rat rate(0);
    if (t == Target::M1) rate += h1 ? rat(-1, 2) : rat(1, 2);
    if (!h1) rate += Rat(-1);
    LMap expf;
    Rat term(1);
    for (int k = 0;; ++k) {
      if (k > ymax + dpole || k > dmax) break;
      expf[{k, k}] = term;
      term = term * rate / (k + 1);
    }
    if (rate == 0) expf = LMap{{{0, 0}, Rat(1)}};
    prod = lmul(prod, expf, ymax, dmax);
  }
  // 1/(1 - e^{-d y}) = sum_n B_n (-1)^n d^{n-1} y^{n-1} / n!
  {
    LMap bern;
    for (int n = 0; n <= ymax + dpole + 2; ++n) {
      Rat c = bernoulli(n) / rat_factorial(n);
      if (n % 2) c = -c;
      if (c != 0) bern[{n - 1, n - 1}] = c;
    }
    prod = lmul(prod, bern, ymax, dmax);
  }

  // residue: coefficient of y^{dpole - 1}, then the d^{n_f} coefficient
  Rat resid(0);
  for (const auto& [k, c] : prod)
    if (k.first == dpole - 1 && k.second == n_f) resid += c;
  Rat pref = (g % 2) ? Rat(1) : Rat(-1);  // (-1)^{g-1}
  pref /= rat_factorial(t == Target::M1 ? 2 : 1);
  return pref * rat_factorial(n_f) * resid / pole_sign;
}

// ---------------------------------------------------------------------------
// rank-2 closed forms

Rat rank2_residue_form(int g, int m, int n, int p) {
  if (g < 2 || m < 0 || n < 0 || p < 0 || 2 * m + n + 3 * p != 3 * g - 3)
    throw std::invalid_argument("rank2_residue_form: constraint violated");
  int q = 2 * g - 2 - 2 * m - 2 * p;
  Rat resid = (q >= 0) ? bernoulli(q) / rat_factorial(q) : Rat(0);
  Rat value = rat_pow(Rat(2), g - 1 - 2 * m - p) * rat_factorial(n) * rat_factorial(g) /
              rat_factorial(g - p) * resid;
  if ((g + m) % 2) value = -value;
  return value;
}

Rat kappa(int j) {
  if (j < 0) throw std::domain_error("kappa: negative index");
  // t/tanh t = t + sum_n B_n (2t)^n / n!, an even series
  return bernoulli(2 * j) * rat_pow(Rat(4), j) / rat_factorial(2 * j);
}

Rat kiem_pairing(int g, int m, int n) {
  if (2 * m + n != 3 * g - 3 || m >= g - 1)
    throw std::invalid_argument("kiem_pairing: constraint violated");
  Rat v = rat_factorial(n) * rat_pow(Rat(2), 2 * g - 2) * kappa(g - 1 - m);
  if (g % 2) v = -v;
  return v;
}

Rat fundamental_class_check(int g, const EngineOptions& opt) {
  if (g < 2) throw std::invalid_argument("fundamental_class_check: g < 2");
  // pairing of alpha^{g-1} beta^{g-1} with alpha = 2 f_2, beta = -4 a_2
  PairingSpec s1;
  s1.r = 2;
  s1.g = g;
  if (g - 1) {
    s1.a[2] = g - 1;
    s1.f[2] = g - 1;
  }
  Rat p1 = ih_pairing(s1, opt).value;
  Rat p2 = ih_rank2_with_gamma(g, g - 2, g - 2, 1, opt);
  Rat term1 = rat_pow(Rat(2), g - 1) * rat_pow(Rat(-4), g - 1) * p1;
  Rat term2 = Rat(4) * rat_pow(Rat(2), g - 2) * rat_pow(Rat(-4), g - 2) * p2;
  return (term1 - term2) / (rat_factorial(g - 2) * rat_pow(Rat(-4), g - 1));
}

}  // namespace ihpair
