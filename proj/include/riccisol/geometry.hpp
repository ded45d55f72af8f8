#ifndef RICCISOL_GEOMETRY_HPP
#define RICCISOL_GEOMETRY_HPP

#include "riccisol/algebra.hpp"

namespace riccisol {

/// The family of operators realizing the invariant Levi-Civita connection:
/// one n x n matrix per basis element of g (h part first, then m part).
/// On h the operator coincides with the isotropy action.
struct NomizuOperator {
  size_t r = 0, n = 0;
  std::vector<QMatrix> ops; // size r + n

  const QMatrix& of_basis(size_t i) const { return ops[i]; }
  const QMatrix& of_u(size_t i) const { return ops[r + i]; }
};

/// Levi-Civita connection operators from the bracket and the metric:
/// Lambda(x) y = [x,y]_m / 2 + v(x,y) with v determined by
/// 2 g(v(x,y), z) = g(x_m, [z,y]_m) + g(y_m, [z,x]_m).
/// Throws partial_pair_error when h-components are missing.
NomizuOperator nomizu(const HomogeneousPair& pair);

/// m-part of [u_i, u_j] recovered purely from the connection matrices
/// (column j of Lambda(u_i) minus column i of Lambda(u_j)). Works off a
/// plain list of u-operators so printed fixtures can be fed directly.
MVector bracket_from_nomizu(const std::vector<QMatrix>& lambda_u, size_t i, size_t j);

/// Curvature operators R(u_i, u_j) = [Lambda(u_i), Lambda(u_j)] -
/// Lambda([u_i, u_j]); the full antisymmetric table is stored.
using CurvatureTable = std::vector<std::vector<QMatrix>>;
CurvatureTable curvature(const HomogeneousPair& pair, const NomizuOperator& L);

/// Ricci tensor: the trace of z -> R(z, u_i) u_j on the u-frame, which is
/// what reproduces every printed matrix exactly.
QMatrix ricci(const HomogeneousPair& pair, const CurvatureTable& R);

/// Ricci operator g^{-1} rho and scalar curvature trace(g^{-1} rho).
QMatrix ricci_operator(const HomogeneousPair& pair, const QMatrix& rho);
Rational scalar_curvature(const HomogeneousPair& pair, const QMatrix& rho);

/// (0,4) Weyl tensor, dense n^4 component array.
struct WeylTensor {
  size_t n = 0;
  std::vector<Rational> w;
  const Rational& at(size_t i, size_t j, size_t k, size_t l) const { return w[((i * n + j) * n + k) * n + l]; }
  Rational& at(size_t i, size_t j, size_t k, size_t l) { return w[((i * n + j) * n + k) * n + l]; }
  bool is_zero() const;
};

/// Standard conformal decomposition: W = Riem - Schouten ^ g with
/// Schouten = (rho - tau/(2(n-1)) g) / (n-2), all indices lowered with g.
/// Requires n >= 4.
WeylTensor weyl(const HomogeneousPair& pair, const CurvatureTable& R, const QMatrix& rho, const Rational& tau);

/// Three-dimensional conformal-flatness condition: the algebraic Cotton
/// components nabla_i rho_jk - nabla_j rho_ik vanish (tau is constant on a
/// homogeneous space, so the right-hand side of the printed condition is
/// zero). Requires n = 3.
bool cotton_check(const HomogeneousPair& pair);

/// Dimension-dispatching conformal flatness decision: Weyl for n >= 4,
/// Cotton for n = 3, vacuous below.
bool is_conformally_flat(const HomogeneousPair& pair);

/// Everything the pipeline downstream needs, computed in one pass.
struct Geometry {
  NomizuOperator L;
  CurvatureTable R;
  QMatrix rho;  // Ricci tensor
  QMatrix Q;    // Ricci operator
  Rational tau; // scalar curvature
};
Geometry compute_geometry(const HomogeneousPair& pair);

} // namespace riccisol

#endif
