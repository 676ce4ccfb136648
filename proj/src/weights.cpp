#include "ihpair/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ihpair {

namespace {

// floor of an exact rational
mpz_class rat_floor(const Rat& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::invalid_argument("RootBasis: roots are linearly dependent");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (int j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

bool WeightVector::is_lattice() const {
  for (const auto& c : a)
    if (c.get_den() != 1) return false;
  return true;
}

WeightVector weight(std::vector<Rat> comps) {
  Rat s(0);
  for (const auto& c : comps) s += c;
  if (s != 0) throw std::invalid_argument("weight: components must sum to zero");
  return WeightVector{std::move(comps)};
}

WeightVector root_weight(int r, int i, int j) {
  if (i < 1 || j < 1 || i > r || j > r || i == j) throw std::invalid_argument("root_weight");
  std::vector<Rat> c(r, Rat(0));
  c[i - 1] = 1;
  c[j - 1] = -1;
  return WeightVector{std::move(c)};
}

WeightVector weight_add(const WeightVector& x, const WeightVector& y) {
  std::vector<Rat> c(x.a);
  for (size_t i = 0; i < c.size(); ++i) c[i] += y.a[i];
  return WeightVector{std::move(c)};
}

WeightVector weight_sub(const WeightVector& x, const WeightVector& y) {
  std::vector<Rat> c(x.a);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= y.a[i];
  return WeightVector{std::move(c)};
}

WeightVector weight_scale(const WeightVector& x, const Rat& c) {
  std::vector<Rat> v(x.a);
  for (auto& e : v) e *= c;
  return WeightVector{std::move(v)};
}

WeightVector c_vector(int r) {
  std::vector<Rat> c(r, rat(1, r));
  c[r - 1] = rat(1 - r, r);
  return WeightVector{std::move(c)};
}

WeightVector s_vector(int r) {
  std::vector<Rat> c(r, rat(1, r));
  c[0] = rat(1 - r, r);
  return WeightVector{std::move(c)};
}

WeightVector RootBasis::root_vector(int k) const {
  return root_weight(r, roots[k].first, roots[k].second);
}

RootBasis basis_from_roots(int r, std::vector<std::pair<int, int>> roots) {
  if (static_cast<int>(roots.size()) != r - 1)
    throw std::invalid_argument("basis_from_roots: need r-1 roots");
  RootBasis B;
  B.r = r;
  B.roots = std::move(roots);
  B.mat.assign(r - 1, std::vector<Rat>(r - 1, Rat(0)));
  for (int col = 0; col < r - 1; ++col) {
    auto [i, j] = B.roots[col];
    if (i - 1 < r - 1) B.mat[i - 1][col] = 1;
    if (j - 1 < r - 1) B.mat[j - 1][col] = -1;
  }
  B.inv = invert_matrix(B.mat);
  return B;
}

RootBasis basis_from_permutation(const std::vector<int>& sigma) {
  const int r = static_cast<int>(sigma.size());
  std::vector<bool> seen(r + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > r || seen[v]) throw std::invalid_argument("basis_from_permutation");
    seen[v] = true;
  }
  std::vector<std::pair<int, int>> roots;
  for (int k = 1; k <= r - 1; ++k) roots.emplace_back(sigma[r - k - 1], sigma[r - k]);
  return basis_from_roots(r, std::move(roots));
}

std::vector<RootBasis> hamiltonian_family(int r, int m) {
  if (m < 1 || m > r) throw std::invalid_argument("hamiltonian_family: m out of range");
  std::vector<int> rest;
  for (int v = 1; v <= r; ++v)
    if (v != m) rest.push_back(v);
  std::vector<RootBasis> fam;
  std::set<std::vector<std::pair<int, int>>> seen;
  do {
    std::vector<int> sigma{m};
    sigma.insert(sigma.end(), rest.begin(), rest.end());
    RootBasis B = basis_from_permutation(sigma);
    if (seen.insert(B.roots).second) fam.push_back(std::move(B));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return fam;
}

std::vector<Rat> coords_in_basis(const WeightVector& a, const RootBasis& B) {
  const int n = B.r - 1;
  std::vector<Rat> c(n, Rat(0));
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) c[row] += B.inv[row][col] * a.a[col];
  return c;
}

std::pair<WeightVector, WeightVector> lattice_reduce(const WeightVector& a, const RootBasis& B) {
  auto c = coords_in_basis(a, B);
  std::vector<Rat> intpart(B.r, Rat(0));
  for (int k = 0; k < B.r - 1; ++k) {
    Rat fl(rat_floor(c[k]));
    if (fl == 0) continue;
    auto [i, j] = B.roots[k];
    intpart[i - 1] += fl;
    intpart[j - 1] -= fl;
  }
  WeightVector ia{std::move(intpart)};
  return {ia, weight_sub(a, ia)};
}

namespace {
Rat dot(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  Rat s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}
}  // namespace

ScaledOrthoBasis orthonormal_basis_from(const std::vector<std::vector<Rat>>& seed) {
  ScaledOrthoBasis ob;
  for (const auto& s : seed) {
    std::vector<Rat> v = s;
    for (size_t j = 0; j < ob.v.size(); ++j) {
      Rat coef = dot(s, ob.v[j]) / ob.norms[j];
      for (size_t i = 0; i < v.size(); ++i) v[i] -= coef * ob.v[j][i];
    }
    Rat n = dot(v, v);
    if (n == 0) throw std::invalid_argument("orthonormal_basis_from: dependent seed");
    ob.v.push_back(std::move(v));
    ob.norms.push_back(std::move(n));
  }
  return ob;
}

ScaledOrthoBasis orthonormal_basis(int r) {
  if (r < 2) throw std::invalid_argument("orthonormal_basis: r < 2");
  std::vector<std::vector<Rat>> seed;
  for (int i = 0; i < r - 1; ++i) {
    std::vector<Rat> s(r, Rat(0));
    s[i] = 1;
    s[i + 1] = -1;
    seed.push_back(std::move(s));
  }
  return orthonormal_basis_from(seed);
}

std::vector<MPoly> xbar_y_forms(const RootBasis& B, int nd) {
  const int r = B.r;
  std::vector<MPoly> forms;
  for (int i = 1; i <= r; ++i) {
    std::vector<Rat> eps(r, rat(-1, r));
    eps[i - 1] += 1;
    auto coords = coords_in_basis(WeightVector{std::move(eps)}, B);
    MPoly f = MPoly::zero(r - 1, nd);
    for (int k = 0; k < r - 1; ++k)
      if (coords[k] != 0) f = f + MPoly::var(r - 1, nd, k, 1, coords[k]);
    forms.push_back(std::move(f));
  }
  return forms;
}

Rat root_gram_det(const RootBasis& B) {
  const int n = B.r - 1;
  std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram[i][j] = dot(B.root_vector(i).a, B.root_vector(j).a);
  // Gaussian elimination determinant
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (gram[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(gram[piv], gram[col]);
      det = -det;
    }
    det *= gram[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (gram[row][col] == 0) continue;
      Rat f = gram[row][col] / gram[col][col];
      for (int j = col; j < n; ++j) gram[row][j] -= f * gram[col][j];
    }
  }
  return det;
}

WeightVector perm_weight(const std::vector<int>& sigma, const WeightVector& a) {
  std::vector<Rat> c(a.a.size());
  for (size_t i = 0; i < a.a.size(); ++i) c[sigma[i] - 1] = a.a[i];
  return WeightVector{std::move(c)};
}

RootBasis perm_basis(const std::vector<int>& sigma, const RootBasis& B) {
  std::vector<std::pair<int, int>> roots;
  for (auto [i, j] : B.roots) roots.emplace_back(sigma[i - 1], sigma[j - 1]);
  return basis_from_roots(B.r, std::move(roots));
}

MPoly perm_poly(const std::vector<int>& sigma, const MPoly& p) {
  MPoly r{p.nm, p.nd, {}};
  for (const auto& [m, c] : p.t) {
    Mono mm;
    for (int i = 0; i < p.nm; ++i) mm.e[sigma[i] - 1] = m.e[i];
    for (int k = 0; k < p.nd; ++k) mm.e[p.nm + k] = m.e[p.nm + k];
    r.t.emplace_back(mm, c);
  }
  r.normalize();
  return r;
}

}  // namespace ihpair
