#include "ihpair/symfun.hpp"

#include <stdexcept>

namespace ihpair {

MPoly xbar_poly(int i, int r, int nd) {
  MPoly p = MPoly::var(r, nd, i - 1);
  for (int j = 0; j < r; ++j) p = p + MPoly::var(r, nd, j, 1, rat(-1, r));
  return p;
}

MPoly tau_poly(int k, int r, int nd) {
  if (k < 2 || k > r) throw std::out_of_range("tau_poly: k out of range");
  std::vector<MPoly> xbar;
  for (int i = 1; i <= r; ++i) xbar.push_back(xbar_poly(i, r, nd));
  // elementary symmetric e_k of the centered forms, by the product recurrence
  std::vector<MPoly> e(k + 1, MPoly::zero(r, nd));
  e[0] = MPoly::constant(r, nd, Rat(1));
  for (int i = 0; i < r; ++i)
    for (int d = std::min(k, i + 1); d >= 1; --d) e[d] = e[d] + e[d - 1] * xbar[i];
  return e[k];
}

QSpec make_qspec(int r) {
  const int nd = r - 1;
  MPoly q = MPoly::zero(r, nd);
  for (int k = 2; k <= r; ++k) {
    MPoly dk = MPoly::var(r, nd, r + (k - 2));
    q = q + dk * tau_poly(k, r, nd);
  }
  return QSpec{r, std::move(q)};
}

MPoly directional(const MPoly& p, const std::vector<Rat>& w) {
  MPoly d = MPoly::zero(p.nm, p.nd);
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    d = d + derivative(p, static_cast<int>(i)) * w[i];
  }
  return d;
}

MPoly q_directional(const QSpec& Q, const RootBasis& B, const WeightVector& alpha) {
  MPoly dx = directional(Q.q, alpha);
  return substitute_main(dx, xbar_y_forms(B, Q.q.nd), B.r - 1, Q.q.nd);
}

std::vector<std::vector<MPoly>> hessian_matrix(const QSpec& Q, const RootBasis& B) {
  const int n = B.r - 1;
  std::vector<std::vector<MPoly>> h(n);
  for (int j = 0; j < n; ++j) {
    MPoly qj = q_directional(Q, B, B.root_vector(j));
    for (int i = 0; i < n; ++i) {
      if (j == 0) h[i].resize(n);
      h[i][j] = derivative(qj, i);
    }
  }
  return h;
}

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("mpoly_det: empty");
  // permutation expansion; n <= 5 here
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  MPoly det = MPoly::zero(m[0][0].nm, m[0][0].nd);
  std::vector<int> perm = idx;
  // iterate permutations with sign tracking via inversion count
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    MPoly term = MPoly::constant(m[0][0].nm, m[0][0].nd, (inv % 2) ? Rat(-1) : Rat(1));
    for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

MPoly hessian_det(const QSpec& Q, const RootBasis& B) { return mpoly_det(hessian_matrix(Q, B)); }

MPoly complete_homogeneous(int m, int r, int nd) {
  if (m < 0) return MPoly::zero(r, nd);
  // h_m via the recurrence over variables: h(m, first v vars)
  // h(m, v) = h(m, v-1) + x_v * h(m-1, v)
  std::vector<MPoly> h(m + 1, MPoly::zero(r, nd));
  h[0] = MPoly::constant(r, nd, Rat(1));
  for (int v = 0; v < r; ++v) {
    MPoly xv = MPoly::var(r, nd, v);
    for (int d = 1; d <= m; ++d) h[d] = h[d] + xv * h[d - 1];
  }
  return h[m];
}

bool complete_homogeneous_identity_holds(int r, int m) {
  const int nd = 0;
  // D_i = prod_{j != i} (x_i - x_j)
  std::vector<MPoly> D(r, MPoly::constant(r, nd, Rat(1)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (j == i) continue;
      D[i] = D[i] * (MPoly::var(r, nd, i) - MPoly::var(r, nd, j));
    }
  MPoly allD = MPoly::constant(r, nd, Rat(1));
  for (int i = 0; i < r; ++i) allD = allD * D[i];
  MPoly lhs = complete_homogeneous(m - r + 1, r, nd) * allD;
  MPoly rhs = MPoly::zero(r, nd);
  for (int i = 0; i < r; ++i) {
    MPoly term = MPoly::var(r, nd, i, m);
    for (int j = 0; j < r; ++j)
      if (j != i) term = term * D[j];
    rhs = rhs + term;
  }
  return lhs == rhs;
}

}  // namespace ihpair
