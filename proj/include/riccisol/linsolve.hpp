#ifndef RICCISOL_LINSOLVE_HPP
#define RICCISOL_LINSOLVE_HPP

#include "riccisol/qmatrix.hpp"

#include <variant>
#include <vector>

namespace riccisol {

/// Affine solution set of A x = b: every solution is
/// particular + rational combinations of the nullspace basis.
struct SolutionSet {
  QVector particular;
  std::vector<QVector> nullspace;
};

/// Witness of inconsistency: row_coeffs combines the original rows of
/// [A | b] into 0 = constant with a nonzero constant.
struct InconsistencyCertificate {
  QVector row_coeffs;
  Rational combined_rhs; // the nonzero constant the combination produces
};

using LinearSolution = std::variant<SolutionSet, InconsistencyCertificate>;

/// Exact linear solve by fraction-free (Bareiss) elimination with row
/// bookkeeping, so inconsistencies come with an explicit certificate.
/// Throws dimension_error when A and b disagree on the row count.
LinearSolution rref_solve(const QMatrix& A, const QVector& b);

/// Substitution check: x solves A x = b exactly.
bool solves_exactly(const QMatrix& A, const QVector& b, const QVector& x);

/// Checks that the certificate really combines the rows of [A|b] into
/// 0 = combined_rhs with combined_rhs != 0.
bool certificate_valid(const QMatrix& A, const QVector& b, const InconsistencyCertificate& cert);

/// True when the two affine sets coincide (both inconsistent also counts).
bool same_solution_set(const LinearSolution& s1, const LinearSolution& s2);

namespace detail {
Rational bareiss_det(const QMatrix& A);
size_t rank_of(const QMatrix& A);
} // namespace detail

} // namespace riccisol

#endif
