#ifndef IHPAIR_WEIGHTS_HPP
#define IHPAIR_WEIGHTS_HPP

#include <utility>
#include <vector>

#include "ihpair/mpoly.hpp"

namespace ihpair {

// Element of V* = { a in Q^r : sum a_i = 0 }.
struct WeightVector {
  std::vector<Rat> a;

  int rank() const { return static_cast<int>(a.size()); }
  bool is_lattice() const;
  bool operator==(const WeightVector& o) const { return a == o.a; }
};

WeightVector weight(std::vector<Rat> comps);           // checks the zero-sum invariant
WeightVector root_weight(int r, int i, int j);         // alpha^{ij} = e_i - e_j (1-based)
WeightVector weight_add(const WeightVector& x, const WeightVector& y);
WeightVector weight_sub(const WeightVector& x, const WeightVector& y);
WeightVector weight_scale(const WeightVector& x, const Rat& c);

// c = (1/r,...,1/r,(1-r)/r), the distinguished evaluation weight.
WeightVector c_vector(int r);
// s = ((1-r)/r, 1/r,...,1/r).
WeightVector s_vector(int r);

// Ordered root basis (beta^[1],...,beta^[r-1]) of V*, each beta a root
// alpha^{ij}, with cached exact change-of-coordinates matrices.
struct RootBasis {
  int r = 0;
  std::vector<std::pair<int, int>> roots;  // beta^[k] as (i,j), 1-based
  std::vector<std::vector<Rat>> mat;       // mat[row][col] = component row of beta^[col]
  std::vector<std::vector<Rat>> inv;       // exact inverse of mat

  bool operator==(const RootBasis& o) const { return r == o.r && roots == o.roots; }
  WeightVector root_vector(int k) const;  // beta^[k+1] as a WeightVector (0-based k)
};

RootBasis basis_from_roots(int r, std::vector<std::pair<int, int>> roots);

// B_sigma = (alpha^{s(r-1),s(r)}, ..., alpha^{s(1),s(2)}), sigma given as
// sigma[i-1] = s(i).
RootBasis basis_from_permutation(const std::vector<int>& sigma);

// H_m = { B_sigma : sigma(1) = m }, enumerated from lexicographic sigma and
// deduplicated structurally; exactly (r-1)! bases.
std::vector<RootBasis> hamiltonian_family(int r, int m);

// Coefficients c with a = sum c_k beta^[k].
std::vector<Rat> coords_in_basis(const WeightVector& a, const RootBasis& B);

// ([a]_B, {a}_B): integer and fractional part of a in the basis B.
std::pair<WeightVector, WeightVector> lattice_reduce(const WeightVector& a, const RootBasis& B);

// Orthonormal basis of V kept in exact form: u_a = v_a / sqrt(norms[a]) with
// rational vectors v_a (pairwise orthogonal, zero sum) and norms[a] = <v_a,v_a>.
// Downstream contractions only ever use the rational data (v_a, norms).
struct ScaledOrthoBasis {
  std::vector<std::vector<Rat>> v;
  std::vector<Rat> norms;
  int rank() const { return static_cast<int>(v.size()) + 1; }
};

ScaledOrthoBasis orthonormal_basis(int r);
// Gram-Schmidt seeded from the given independent zero-sum vectors.
ScaledOrthoBasis orthonormal_basis_from(const std::vector<std::vector<Rat>>& seed);

// Linear forms expressing the centered coordinates xbar_i in the y
// coordinates y_k = <beta^[k], x> of the basis B; y-space polys with nd
// delta slots.
std::vector<MPoly> xbar_y_forms(const RootBasis& B, int nd);

// determinant of the Gram matrix <beta^[i], beta^[j]> (standard inner product)
Rat root_gram_det(const RootBasis& B);

// Coordinate permutation action: (sigma.a) places component i of a at
// position sigma(i); sigma alpha^{ij} = alpha^{sigma(i) sigma(j)}.
WeightVector perm_weight(const std::vector<int>& sigma, const WeightVector& a);
RootBasis perm_basis(const std::vector<int>& sigma, const RootBasis& B);
// substitute x_i -> x_{sigma(i)} in an x-space polynomial
MPoly perm_poly(const std::vector<int>& sigma, const MPoly& p);

}  // namespace ihpair

#endif
