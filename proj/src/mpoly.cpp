#include "ihpair/mpoly.hpp"

#include <algorithm>
#include <unordered_map>

namespace ihpair {

MPoly MPoly::var(int nm, int nd, int slot, int exp, const Rat& c) {
  if (slot < 0 || slot >= nm + nd) throw std::out_of_range("MPoly::var slot");
  MPoly p{nm, nd, {}};
  if (c == 0) return p;
  Mono m;
  m.e[slot] = static_cast<int16_t>(exp);
  p.t.emplace_back(m, c);
  return p;
}

Rat MPoly::constant_term() const {
  for (const auto& [m, c] : t)
    if (m.is_one()) return c;
  return Rat(0);
}

void MPoly::normalize() {
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return mono_less(a.first, b.first); });
  size_t w = 0;
  for (size_t i = 0; i < t.size();) {
    Mono m = t[i].first;
    Rat c = t[i].second;
    size_t j = i + 1;
    while (j < t.size() && t[j].first == m) {
      c += t[j].second;
      ++j;
    }
    if (c != 0) t[w++] = {m, c};
    i = j;
  }
  t.resize(w);
}

MPoly MPoly::filtered(const SlotBox& box) const {
  MPoly r{nm, nd, {}};
  r.t.reserve(t.size());
  for (const auto& term : t)
    if (box.contains(term.first)) r.t.push_back(term);
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.nm != b.nm || a.nd != b.nd) throw std::invalid_argument("MPoly+: context mismatch");
  MPoly r{a.nm, a.nd, {}};
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    if (a.t[i].first == b.t[j].first) {
      Rat c = a.t[i].second + b.t[j].second;
      if (c != 0) r.t.emplace_back(a.t[i].first, c);
      ++i, ++j;
    } else if (mono_less(a.t[i].first, b.t[j].first)) {
      r.t.push_back(a.t[i++]);
    } else {
      r.t.push_back(b.t[j++]);
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
  return r;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& [m, c] : r.t) c = -c;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const Rat& c) {
  if (c == 0) return MPoly::zero(a.nm, a.nd);
  MPoly r = a;
  for (auto& [m, co] : r.t) co *= c;
  return r;
}

MPoly operator*(const Rat& c, const MPoly& a) { return a * c; }

MPoly mul(const MPoly& a, const MPoly& b, const SlotBox* box) {
  if (a.nm != b.nm || a.nd != b.nd) throw std::invalid_argument("MPoly*: context mismatch");
  MPoly r{a.nm, a.nd, {}};
  if (a.t.empty() || b.t.empty()) return r;
  std::unordered_map<Mono, Rat, MonoHash> acc;
  acc.reserve(a.t.size() + b.t.size());
  const MPoly& small = a.t.size() <= b.t.size() ? a : b;
  const MPoly& big = a.t.size() <= b.t.size() ? b : a;
  for (const auto& [ms, cs] : small.t) {
    for (const auto& [mb, cb] : big.t) {
      Mono m = ms.mul(mb);
      if (box && !box->contains(m)) continue;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, cs * cb);
      else
        it->second += cs * cb;
    }
  }
  r.t.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.t.emplace_back(m, std::move(c));
  std::sort(r.t.begin(), r.t.end(),
            [](const auto& x, const auto& y) { return mono_less(x.first, y.first); });
  return r;
}

MPoly mono_times(const MPoly& a, const Mono& m, const Rat& c) {
  MPoly r{a.nm, a.nd, {}};
  if (c == 0) return r;
  r.t.reserve(a.t.size());
  for (const auto& [ma, ca] : a.t) r.t.emplace_back(ma.mul(m), ca * c);
  r.normalize();
  return r;
}

MPoly pow(const MPoly& a, int e, const SlotBox* box) {
  if (e < 0) throw std::invalid_argument("MPoly pow: negative exponent");
  MPoly r = MPoly::constant(a.nm, a.nd, Rat(1));
  for (int i = 0; i < e; ++i) r = mul(r, a, box);
  return r;
}

MPoly derivative(const MPoly& a, int slot) {
  MPoly r{a.nm, a.nd, {}};
  for (const auto& [m, c] : a.t) {
    if (m.e[slot] == 0) continue;
    Mono d = m;
    d.e[slot] = static_cast<int16_t>(d.e[slot] - 1);
    r.t.emplace_back(d, c * Rat(m.e[slot]));
  }
  r.normalize();
  return r;
}

MPoly substitute_main(const MPoly& a, const std::vector<MPoly>& forms, int out_nm, int out_nd) {
  if (static_cast<int>(forms.size()) != a.nm)
    throw std::invalid_argument("substitute_main: wrong form count");
  MPoly r = MPoly::zero(out_nm, out_nd);
  // cache powers of each substituted form
  std::vector<std::vector<MPoly>> powers(a.nm);
  for (int i = 0; i < a.nm; ++i) powers[i].push_back(MPoly::constant(out_nm, out_nd, Rat(1)));
  for (const auto& [m, c] : a.t) {
    MPoly term = MPoly::constant(out_nm, out_nd, c);
    for (int i = 0; i < a.nm; ++i) {
      int e = m.e[i];
      if (e < 0) throw std::invalid_argument("substitute_main: negative main exponent");
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(powers[i].back() * forms[i]);
      if (e > 0) term = term * powers[i][e];
    }
    // carry the delta part over
    Mono dm;
    for (int k = 0; k < a.nd; ++k) dm.e[out_nm + k] = m.e[a.nm + k];
    r = r + mono_times(term, dm, Rat(1));
  }
  return r;
}

MPoly delta_coefficient(const MPoly& a, const std::vector<int>& dexp) {
  if (static_cast<int>(dexp.size()) != a.nd)
    throw std::invalid_argument("delta_coefficient: wrong pattern size");
  MPoly r{a.nm, a.nd, {}};
  for (const auto& [m, c] : a.t) {
    bool match = true;
    for (int k = 0; k < a.nd && match; ++k) match = m.e[a.nm + k] == dexp[k];
    if (!match) continue;
    Mono mm = m;
    for (int k = 0; k < a.nd; ++k) mm.e[a.nm + k] = 0;
    r.t.emplace_back(mm, c);
  }
  r.normalize();
  return r;
}

bool translation_invariant(const MPoly& a) {
  MPoly s = MPoly::zero(a.nm, a.nd);
  for (int i = 0; i < a.nm; ++i) s = s + derivative(a, i);
  return s.is_zero();
}

std::string MPoly::str(bool yspace) const {
  if (t.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += " + ";
    out += rat_str(t[i].second);
    for (int s = 0; s < nm + nd; ++s) {
      int e = t[i].first.e[s];
      if (e == 0) continue;
      out += " ";
      if (s < nm)
        out += (yspace ? "y" : "x") + std::to_string(s + 1);
      else
        out += "d" + std::to_string(s - nm + 2);
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace ihpair
