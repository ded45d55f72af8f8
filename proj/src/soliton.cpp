#include "riccisol/soliton.hpp"

namespace riccisol {

Rational SolitonSystem::residual(size_t row, const QVector& point) const {
  Rational s = constants[row];
  for (size_t k = 0; k <= n; ++k) s += coeffs(row, k) * point[k];
  return s;
}

bool SolitonSystem::satisfied_by(const QVector& point) const {
  for (size_t i = 0; i < rows(); ++i)
    if (residual(i, point) != 0) return false;
  for (const auto& q : quadratic_checks) {
    Rational s = q.constant + q.coeff * point[q.a] * point[q.b];
    for (size_t k = 0; k <= n; ++k) s += q.linear[k] * point[k];
    if (s != 0) return false;
  }
  return true;
}

SolitonSystem assemble_system(const HomogeneousPair& pair, const QMatrix& rho) {
  if (rho.rows() != pair.n || rho.cols() != pair.n)
    throw dimension_error("assemble_system: rho dimension does not match the pair");
  const size_t n = pair.n;
  SolitonSystem sys;
  sys.n = n;
  sys.provenance = Provenance::Assembled;
  sys.coeffs = QMatrix(n * (n + 1) / 2, n + 1);
  sys.constants = qvec_zero(n * (n + 1) / 2);
  size_t row = 0;
  for (size_t i = 0; i < n; ++i) {
    MVector ui = qvec_zero(n);
    ui[i] = 1;
    for (size_t j = i; j < n; ++j) {
      MVector uj = qvec_zero(n);
      uj[j] = 1;
      for (size_t k = 0; k < n; ++k) {
        const Rational c = pair.inner(pair.bracket_m_of_u(k, i), uj) + pair.inner(ui, pair.bracket_m_of_u(k, j));
        sys.coeffs(row, k) = c;
      }
      sys.coeffs(row, n) = -pair.metric(i, j);
      sys.constants[row] = rho(i, j);
      sys.row_pairs.emplace_back(i, j);
      ++row;
    }
  }
  return sys;
}

SolitonSolution solve(const SolitonSystem& system) {
  QVector b = system.constants;
  for (auto& x : b) x = -x;
  LinearSolution ls = rref_solve(system.coeffs, b);
  SolitonSolution sol;
  if (auto* cert = std::get_if<InconsistencyCertificate>(&ls)) {
    sol.consistent = false;
    sol.certificate = *cert;
    return sol;
  }
  auto& s = std::get<SolutionSet>(ls);
  sol.consistent = true;
  sol.particular = std::move(s.particular);
  sol.nullspace = std::move(s.nullspace);

  // Einstein iff x = 0 can be completed to a solution: substitute x = 0 and
  // solve the remaining system in sigma alone.
  const size_t n = system.n;
  QMatrix A(system.rows(), 1);
  QVector rhs = qvec_zero(system.rows());
  for (size_t r = 0; r < system.rows(); ++r) {
    A(r, 0) = system.coeffs(r, n);
    rhs[r] = -system.constants[r];
  }
  sol.einstein = std::holds_alternative<SolutionSet>(rref_solve(A, rhs));
  return sol;
}

bool solution_contains(const SolitonSolution& sol, const QVector& point) {
  if (!sol.consistent) return false;
  QVector d = qvec_sub(point, sol.particular);
  if (qvec_is_zero(d)) return true;
  if (sol.nullspace.empty()) return false;
  const size_t n = d.size();
  QMatrix B(n, sol.nullspace.size());
  QMatrix Bd(n, sol.nullspace.size() + 1);
  for (size_t j = 0; j < sol.nullspace.size(); ++j)
    for (size_t i = 0; i < n; ++i) {
      B(i, j) = sol.nullspace[j][i];
      Bd(i, j) = sol.nullspace[j][i];
    }
  for (size_t i = 0; i < n; ++i) Bd(i, sol.nullspace.size()) = d[i];
  return B.rank() == Bd.rank();
}

SolitonClass classify(const SolitonSolution& sol, const QVector& sample) {
  if (!solution_contains(sol, sample))
    throw std::invalid_argument("classify: sample is not in the solution set");
  const Rational sigma = sample.back();
  if (sigma > 0) return SolitonClass::Shrinking;
  if (sigma < 0) return SolitonClass::Expanding;
  return SolitonClass::Steady;
}

std::string to_string(SolitonClass c) {
  switch (c) {
    case SolitonClass::Shrinking: return "shrinking";
    case SolitonClass::Expanding: return "expanding";
    default: return "steady";
  }
}

SolitonSolution invariant_solutions(const HomogeneousPair& pair, const SolitonSystem& system,
                                    const SolitonSolution& sol,
                                    const std::vector<MVector>* fixture_subspace) {
  if (!sol.consistent) return sol;
  const size_t n = system.n;

  // Constraint rows C (x, sigma) = 0 expressing invariance of the x part.
  std::vector<QVector> constraint_rows;
  if (pair.r == 0 && !fixture_subspace) return sol;
  if (!fixture_subspace) {
    if (pair.is_partial()) throw partial_pair_error("invariant_solutions");
    for (size_t j = 0; j < pair.r; ++j) {
      const QMatrix H = isotropy_matrix(pair, j);
      for (size_t row = 0; row < n; ++row) {
        QVector c = qvec_zero(n + 1);
        for (size_t col = 0; col < n; ++col) c[col] = H(row, col);
        constraint_rows.push_back(std::move(c));
      }
    }
  } else {
    // annihilator of the documented subspace: functionals vanishing on it
    QMatrix B(n, fixture_subspace->size());
    for (size_t j = 0; j < fixture_subspace->size(); ++j) B.set_col(j, (*fixture_subspace)[j]);
    auto ann = rref_solve(B.transpose(), qvec_zero(fixture_subspace->size()));
    for (const auto& f : std::get<SolutionSet>(ann).nullspace) {
      QVector c = qvec_zero(n + 1);
      for (size_t col = 0; col < n; ++col) c[col] = f[col];
      constraint_rows.push_back(std::move(c));
    }
  }

  // Intersect: parametrize solutions as particular + N t and solve the
  // constraints for t.
  const size_t d = sol.nullspace.size();
  QMatrix A(constraint_rows.size(), d);
  QVector rhs = qvec_zero(constraint_rows.size());
  for (size_t rI = 0; rI < constraint_rows.size(); ++rI) {
    Rational base(0);
    for (size_t k = 0; k <= n; ++k) base += constraint_rows[rI][k] * sol.particular[k];
    rhs[rI] = -base;
    for (size_t jv = 0; jv < d; ++jv) {
      Rational c(0);
      for (size_t k = 0; k <= n; ++k) c += constraint_rows[rI][k] * sol.nullspace[jv][k];
      A(rI, jv) = c;
    }
  }
  LinearSolution ts = rref_solve(A, rhs);
  SolitonSolution out;
  if (auto* cert = std::get_if<InconsistencyCertificate>(&ts)) {
    out.consistent = false;
    out.certificate = *cert;
    return out;
  }
  const auto& t = std::get<SolutionSet>(ts);
  out.consistent = true;
  out.particular = sol.particular;
  for (size_t jv = 0; jv < d; ++jv)
    out.particular = qvec_add(out.particular, qvec_scale(t.particular[jv], sol.nullspace[jv]));
  for (const auto& tv : t.nullspace) {
    QVector v = qvec_zero(n + 1);
    for (size_t jv = 0; jv < d; ++jv) v = qvec_add(v, qvec_scale(tv[jv], sol.nullspace[jv]));
    if (!qvec_is_zero(v)) out.nullspace.push_back(std::move(v));
  }
  // x = 0 is invariant, so Einstein solutions survive the restriction
  out.einstein = sol.einstein;
  return out;
}

} // namespace riccisol
