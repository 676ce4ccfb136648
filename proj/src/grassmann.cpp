#include "ihpair/grassmann.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace ihpair {

namespace {

// sign of concatenating two disjoint ascending generator words
int merge_sign(uint32_t a, uint32_t b) {
  int swaps = 0;
  while (b) {
    uint32_t bit = b & (-b);
    int pos = std::countr_zero(bit);
    swaps += std::popcount(a >> (pos + 1));
    b ^= bit;
  }
  return (swaps % 2) ? -1 : 1;
}

// sign of the permutation sorting `seq` (distinct entries) ascending
int sort_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

}  // namespace

GrassElem GrassElem::scalar(int r, int g, MPoly coeff) {
  GrassElem e{r, g, {}};
  if (!coeff.is_zero()) e.c.emplace(0u, std::move(coeff));
  return e;
}

GrassElem GrassElem::generator(int r, int g, int a, int j, MPoly coeff) {
  GrassElem e{r, g, {}};
  if (!coeff.is_zero()) e.c.emplace(1u << idx(a, j, r), std::move(coeff));
  return e;
}

void GrassElem::normalize() {
  for (auto it = c.begin(); it != c.end();)
    it = it->second.is_zero() ? c.erase(it) : std::next(it);
}

GrassElem wedge_add(const GrassElem& u, const GrassElem& v) {
  GrassElem r = u;
  for (const auto& [m, p] : v.c) {
    auto it = r.c.find(m);
    if (it == r.c.end())
      r.c.emplace(m, p);
    else
      it->second = it->second + p;
  }
  r.normalize();
  return r;
}

GrassElem wedge_mul(const GrassElem& u, const GrassElem& v) {
  if (u.r != v.r || u.g != v.g) throw std::invalid_argument("wedge_mul: context mismatch");
  GrassElem r = GrassElem::zero(u.r, u.g);
  for (const auto& [mu, pu] : u.c) {
    for (const auto& [mv, pv] : v.c) {
      if (mu & mv) continue;
      MPoly prod = pu * pv;
      if (merge_sign(mu, mv) < 0) prod = -prod;
      uint32_t m = mu | mv;
      auto it = r.c.find(m);
      if (it == r.c.end())
        r.c.emplace(m, std::move(prod));
      else
        it->second = it->second + prod;
    }
  }
  r.normalize();
  return r;
}

GrassElem wedge_scale(const GrassElem& u, const MPoly& p) {
  GrassElem r = u;
  for (auto& [m, q] : r.c) q = q * p;
  r.normalize();
  return r;
}

GrassElem gr_exp_even(const GrassElem& u, int bound) {
  for (const auto& [m, p] : u.c) {
    if (std::popcount(m) % 2) throw std::invalid_argument("gr_exp_even: odd component");
    if (m == 0) throw std::invalid_argument("gr_exp_even: degree-0 component");
  }
  GrassElem acc = GrassElem::scalar(u.r, u.g, MPoly::constant(u.c.empty() ? 0 : u.c.begin()->second.nm,
                                                              u.c.empty() ? 0 : u.c.begin()->second.nd, Rat(1)));
  if (u.c.empty()) return acc;
  GrassElem power = acc;
  Rat fact(1);
  for (int n = 1; n <= bound; ++n) {
    power = wedge_mul(power, u);
    if (power.c.empty()) return acc;
    fact *= n;
    GrassElem scaled = power;
    for (auto& [m, p] : scaled.c) p = p * (Rat(1) / fact);
    acc = wedge_add(acc, scaled);
  }
  throw std::runtime_error("gr_exp_even: nilpotency bound exceeded");
}

MPoly berezin_integral(const GrassElem& u, int r, int g) {
  const int n = 2 * g * (r - 1);
  // sign relating the reference top order to ascending bit order
  std::vector<int> ref;
  for (int j = 1; j <= g; ++j)
    for (int a = 1; a <= r - 1; ++a) {
      ref.push_back(GrassElem::idx(a, j, r));
      ref.push_back(GrassElem::idx(a, j + g, r));
    }
  int sign = sort_sign(ref);
  uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
  int nm = 0, nd = 0;
  if (!u.c.empty()) {
    nm = u.c.begin()->second.nm;
    nd = u.c.begin()->second.nd;
  }
  auto it = u.c.find(full);
  if (it == u.c.end()) return MPoly::zero(nm, nd);
  Rat norm = rat_pow(Rat(r), g);
  return it->second * (sign < 0 ? -norm : norm);
}

namespace {

// Local exterior algebra of one block j: generators xi_a (bits 0..r-2) for
// zeta_a^j and eta_a (bits r-1..2r-3) for zeta_a^{j+g}.
struct BlockAlg {
  int r;
  std::map<uint32_t, MPoly> c;
};

BlockAlg block_mul(const BlockAlg& u, const BlockAlg& v) {
  BlockAlg r{u.r, {}};
  for (const auto& [mu, pu] : u.c)
    for (const auto& [mv, pv] : v.c) {
      if (mu & mv) continue;
      MPoly prod = pu * pv;
      if (merge_sign(mu, mv) < 0) prod = -prod;
      auto it = r.c.find(mu | mv);
      if (it == r.c.end())
        r.c.emplace(mu | mv, std::move(prod));
      else
        it->second = it->second + prod;
    }
  for (auto it = r.c.begin(); it != r.c.end();)
    it = it->second.is_zero() ? r.c.erase(it) : std::next(it);
  return r;
}

}  // namespace

MPoly torus_factor(const QSpec& Q, const ScaledOrthoBasis& ortho,
                   const std::set<std::pair<int, int>>& l_table, int g, bool factorized) {
  const int r = Q.r;
  const int nm = Q.q.nm, nd = Q.q.nd;
  if (static_cast<int>(ortho.v.size()) != r - 1)
    throw std::invalid_argument("torus_factor: basis rank mismatch");
  for (const auto& [k, j] : l_table)
    if (k < 2 || k > r || j < 1 || j > 2 * g) throw std::invalid_argument("torus_factor: bad l entry");

  // rational bilinear data over the scaled basis vectors
  std::vector<std::vector<MPoly>> G(r - 1, std::vector<MPoly>(r - 1));
  for (int a = 0; a < r - 1; ++a) {
    MPoly da = directional(Q.q, ortho.v[a]);
    for (int b = 0; b < r - 1; ++b) G[a][b] = directional(da, ortho.v[b]);
  }
  std::map<int, std::vector<MPoly>> T;  // k -> tau_k derivatives along v_a
  for (const auto& [k, j] : l_table) {
    (void)j;
    if (T.count(k)) continue;
    MPoly tk = tau_poly(k, r, nd);
    std::vector<MPoly> row;
    for (int a = 0; a < r - 1; ++a) row.push_back(directional(tk, ortho.v[a]));
    T.emplace(k, std::move(row));
  }

  // odd factors in canonical (k, j) order
  std::vector<std::pair<int, int>> odd(l_table.begin(), l_table.end());
  if (odd.size() % 2) return MPoly::zero(nm, nd);

  Rat norm_corr = rat_pow(Rat(r), g);
  {
    Rat prod(1);
    for (const auto& n : ortho.norms) prod *= n;
    norm_corr /= rat_pow(prod, g);
  }

  if (!factorized) {
    // reference path on the full algebra
    GrassElem expo = GrassElem::zero(r, g);
    for (int j = 1; j <= g; ++j)
      for (int a = 1; a <= r - 1; ++a)
        for (int b = 1; b <= r - 1; ++b) {
          uint32_t m = (1u << GrassElem::idx(a, j, r)) | (1u << GrassElem::idx(b, j + g, r));
          MPoly coeff = -G[a - 1][b - 1];
          if (merge_sign(1u << GrassElem::idx(a, j, r), 1u << GrassElem::idx(b, j + g, r)) < 0)
            coeff = -coeff;
          GrassElem term{r, g, {}};
          if (!coeff.is_zero()) term.c.emplace(m, std::move(coeff));
          expo = wedge_add(expo, term);
        }
    GrassElem total = gr_exp_even(expo);
    for (const auto& [k, j] : odd) {
      GrassElem fac = GrassElem::zero(r, g);
      for (int a = 1; a <= r - 1; ++a)
        fac = wedge_add(fac, GrassElem::generator(r, g, a, j, T.at(k)[a - 1]));
      total = wedge_mul(total, fac);
    }
    return berezin_integral(total, r, g) * (norm_corr / rat_pow(Rat(r), g));
  }

  // block factorization over j = 1..g
  // sign from regrouping the odd factors by block (stable bucketing)
  std::vector<int> blocks;
  for (const auto& [k, j] : odd) {
    (void)k;
    blocks.push_back((j - 1) % g);
  }
  int regroup_sign = 1;
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j2 = i + 1; j2 < blocks.size(); ++j2)
      if (blocks[i] > blocks[j2]) regroup_sign = -regroup_sign;

  // local reference order xi_1 eta_1 xi_2 eta_2 ...
  std::vector<int> local_ref;
  for (int a = 0; a < r - 1; ++a) {
    local_ref.push_back(a);
    local_ref.push_back(r - 1 + a);
  }
  const int local_sign = sort_sign(local_ref);
  const uint32_t local_full = (1u << (2 * (r - 1))) - 1u;

  MPoly result = MPoly::constant(nm, nd, Rat(1));
  for (int blk = 0; blk < g; ++blk) {
    BlockAlg expo{r, {}};
    for (int a = 0; a < r - 1; ++a)
      for (int b = 0; b < r - 1; ++b) {
        if (G[a][b].is_zero()) continue;
        uint32_t m = (1u << a) | (1u << (r - 1 + b));
        MPoly coeff = -G[a][b];  // xi_a before eta_b is ascending order
        auto it = expo.c.find(m);
        if (it == expo.c.end())
          expo.c.emplace(m, std::move(coeff));
        else
          it->second = it->second + coeff;
      }
    // exp on the block
    BlockAlg acc{r, {{0u, MPoly::constant(nm, nd, Rat(1))}}};
    BlockAlg power = acc;
    Rat fact(1);
    for (int n = 1; n <= r; ++n) {
      power = block_mul(power, expo);
      if (power.c.empty()) break;
      fact *= n;
      BlockAlg scaled = power;
      for (auto& [m, p] : scaled.c) p = p * (Rat(1) / fact);
      for (auto& [m, p] : scaled.c) {
        auto it = acc.c.find(m);
        if (it == acc.c.end())
          acc.c.emplace(m, p);
        else
          it->second = it->second + p;
      }
    }
    // odd factors living on this block, in their preserved relative order
    for (const auto& [k, j] : odd) {
      if ((j - 1) % g != blk) continue;
      bool is_eta = j > g;
      BlockAlg fac{r, {}};
      for (int a = 0; a < r - 1; ++a) {
        const MPoly& t = T.at(k)[a];
        if (t.is_zero()) continue;
        fac.c.emplace(1u << (is_eta ? r - 1 + a : a), t);
      }
      acc = block_mul(acc, fac);
    }
    auto it = acc.c.find(local_full);
    MPoly blockval = (it == acc.c.end()) ? MPoly::zero(nm, nd) : it->second;
    if (local_sign < 0) blockval = -blockval;
    result = result * blockval;
    if (result.is_zero()) break;
  }
  if (regroup_sign < 0) result = -result;
  return result * norm_corr;
}

}  // namespace ihpair
