#ifndef IHPAIR_SYMFUN_HPP
#define IHPAIR_SYMFUN_HPP

#include "ihpair/mpoly.hpp"
#include "ihpair/weights.hpp"

namespace ihpair {

// k-th elementary symmetric polynomial in the centered variables
// xbar_i = x_i - (x_1+...+x_r)/r, expanded over x_1..x_r with nd delta slots.
MPoly tau_poly(int k, int r, int nd = 0);

// centered coordinate xbar_i (1-based i) as an x-space polynomial
MPoly xbar_poly(int i, int r, int nd = 0);

// Deformation polynomial Q = sum_{k=2}^r d_k tau_k over x_1..x_r and
// d_2..d_r (nd = r-1).
struct QSpec {
  int r = 0;
  MPoly q;  // nm = r, nd = r-1
};

QSpec make_qspec(int r);

// Directional derivative along the ambient representative of a zero-sum
// vector: sum_i w_i dp/dx_i.  This is the derivative convention every
// residue formula here uses (the basis pairs V* with V through the standard
// inner product of R^r).
MPoly directional(const MPoly& p, const std::vector<Rat>& w);
inline MPoly directional(const MPoly& p, const WeightVector& w) { return directional(p, w.a); }

// Q rewritten in the y coordinates of B and differentiated along alpha.
MPoly q_directional(const QSpec& Q, const RootBasis& B, const WeightVector& alpha);

// Hessian matrix in the y coordinates of B: H[i][j] = d/dy_i ( Q_{beta[j]} ),
// i.e. the Jacobian of y -> (Q_{beta^[1]},...,Q_{beta^[r-1]}); its determinant
// is the measure factor the residue formulas divide out.
std::vector<std::vector<MPoly>> hessian_matrix(const QSpec& Q, const RootBasis& B);
MPoly hessian_det(const QSpec& Q, const RootBasis& B);

// determinant of a square MPoly matrix by Laplace-free permutation expansion
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m);

// Complete homogeneous symmetric polynomial h_m(x_1..x_r); h_0 = 1 and
// h_m = 0 for m < 0.
MPoly complete_homogeneous(int m, int r, int nd = 0);

// Exact check of the partial-fraction identity
//   h_{m-r+1}(x) = sum_i x_i^m / prod_{j != i}(x_i - x_j)
// with denominators cleared.
bool complete_homogeneous_identity_holds(int r, int m);

}  // namespace ihpair

#endif
