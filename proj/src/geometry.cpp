#include "riccisol/geometry.hpp"
#include "riccisol/linsolve.hpp"

namespace riccisol {

NomizuOperator nomizu(const HomogeneousPair& pair) {
  if (pair.is_partial()) throw partial_pair_error("nomizu");
  const size_t N = pair.dim_g(), n = pair.n, r = pair.r;
  const QMatrix ginv = pair.metric.inverse();

  NomizuOperator out;
  out.r = r;
  out.n = n;
  out.ops.reserve(N);
  for (size_t x = 0; x < N; ++x) {
    QMatrix Lx(n, n);
    for (size_t yu = 0; yu < n; ++yu) {
      const size_t y = r + yu;
      // column yu: Lambda(b_x) u_yu = [x,y]_m / 2 + v(x,y)
      MVector xm = qvec_zero(n);
      if (x >= r) xm[x - r] = 1;
      MVector col = qvec_scale(Rational(1, 2), pair.bracket_m(x, y));
      // 2 g(v, u_z) = g(x_m, [u_z, y]_m) + g(y_m, [u_z, x]_m)
      MVector w = qvec_zero(n);
      for (size_t zu = 0; zu < n; ++zu) {
        const size_t z = r + zu;
        MVector ym = qvec_zero(n);
        ym[yu] = 1;
        w[zu] = pair.inner(xm, pair.bracket_m(z, y)) + pair.inner(ym, pair.bracket_m(z, x));
      }
      col = qvec_add(col, qvec_scale(Rational(1, 2), ginv * w));
      Lx.set_col(yu, col);
    }
    out.ops.push_back(std::move(Lx));
  }
  return out;
}

MVector bracket_from_nomizu(const std::vector<QMatrix>& lambda_u, size_t i, size_t j) {
  return qvec_sub(lambda_u[i].col(j), lambda_u[j].col(i));
}

CurvatureTable curvature(const HomogeneousPair& pair, const NomizuOperator& L) {
  if (pair.is_partial()) throw partial_pair_error("curvature");
  const size_t n = pair.n, r = pair.r, N = pair.dim_g();
  CurvatureTable R(n, std::vector<QMatrix>(n, QMatrix(n, n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const QMatrix& Li = L.of_u(i);
      const QMatrix& Lj = L.of_u(j);
      QMatrix Rij = Li * Lj - Lj * Li;
      const QVector& br = pair.bracket[r + i][r + j];
      for (size_t k = 0; k < N; ++k)
        if (br[k] != 0) Rij = Rij - L.of_basis(k) * br[k];
      R[j][i] = -Rij;
      R[i][j] = std::move(Rij);
    }
  return R;
}

QMatrix ricci(const HomogeneousPair& pair, const CurvatureTable& R) {
  const size_t n = pair.n;
  QMatrix rho(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational s(0);
      for (size_t k = 0; k < n; ++k)
        if (k != i) s += R[k][i](k, j); // k-th frame component of R(u_k, u_i) u_j
      rho(i, j) = s;
    }
  return rho;
}

QMatrix ricci_operator(const HomogeneousPair& pair, const QMatrix& rho) {
  return pair.metric.inverse() * rho;
}

Rational scalar_curvature(const HomogeneousPair& pair, const QMatrix& rho) {
  return ricci_operator(pair, rho).trace();
}

bool WeylTensor::is_zero() const {
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

WeylTensor weyl(const HomogeneousPair& pair, const CurvatureTable& R, const QMatrix& rho, const Rational& tau) {
  const size_t n = pair.n;
  if (n < 4) throw dimension_error("weyl: needs dimension >= 4 (dimension 3 routes to cotton_check)");
  const QMatrix& g = pair.metric;
  const Rational nn2 = Rational(1, static_cast<long>(n) - 2);
  // Schouten tensor
  QMatrix S = (rho - g * (tau / Rational(2 * (static_cast<long>(n) - 1)))) * nn2;

  WeylTensor W;
  W.n = n;
  W.w.assign(n * n * n * n, Rational(0));
  // lowered curvature: R4(i,j,k,l) = g(R(u_i,u_j) u_k, u_l)
  std::vector<QMatrix> GR(n * n, QMatrix());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) GR[i * n + j] = g * R[i][j];
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
          const Rational r4 = GR[i * n + j](l, k);
          const Rational kn =
              S(i, k) * g(j, l) + S(j, l) * g(i, k) - S(i, l) * g(j, k) - S(j, k) * g(i, l);
          W.at(i, j, k, l) = r4 + kn;
        }
  return W;
}

bool cotton_check(const HomogeneousPair& pair) {
  if (pair.n != 3) throw dimension_error("cotton_check: only defined for dimension 3");
  if (pair.is_partial()) throw partial_pair_error("cotton_check");
  const Geometry geo = compute_geometry(pair);
  const size_t n = pair.n;
  // (nabla_i rho)(j,k) = -(Lambda_i^t rho + rho Lambda_i)(j,k); tau constant.
  std::vector<QMatrix> D(n, QMatrix());
  for (size_t i = 0; i < n; ++i) {
    const QMatrix& Li = geo.L.of_u(i);
    D[i] = -(Li.transpose() * geo.rho + geo.rho * Li);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (D[i](j, k) != D[j](i, k)) return false;
  return true;
}

bool is_conformally_flat(const HomogeneousPair& pair) {
  if (pair.n >= 4) {
    const Geometry geo = compute_geometry(pair);
    return weyl(pair, geo.R, geo.rho, geo.tau).is_zero();
  }
  if (pair.n == 3) return cotton_check(pair);
  return true;
}

Geometry compute_geometry(const HomogeneousPair& pair) {
  Geometry geo;
  geo.L = nomizu(pair);
  geo.R = curvature(pair, geo.L);
  geo.rho = ricci(pair, geo.R);
  geo.Q = ricci_operator(pair, geo.rho);
  geo.tau = geo.Q.trace();
  return geo;
}

} // namespace riccisol
