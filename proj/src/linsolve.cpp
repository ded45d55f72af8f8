#include "riccisol/linsolve.hpp"

#include <algorithm>
#include <numeric>

namespace riccisol {

namespace {

// Scales every row of [A|b] to integers (bookkeeping goes into T so the
// current rows stay exact combinations of the original ones), then runs
// fraction-free Bareiss elimination. Entries remain integral throughout,
// which is what bounds intermediate growth on parameter sweeps.
struct Elimination {
  size_t m, n;                 // rows, coefficient columns
  std::vector<QVector> w;      // m rows of length n+1 (last = rhs)
  std::vector<QVector> t;      // m rows of length m, combination tracker
  std::vector<size_t> pivot_col_of_row;
  std::vector<long> pivot_row_of_col;
  size_t rank = 0;

  Elimination(const QMatrix& A, const QVector& b) : m(A.rows()), n(A.cols()) {
    w.assign(m, QVector(n + 1, Rational(0)));
    t.assign(m, QVector(m, Rational(0)));
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) w[i][j] = A(i, j);
      w[i][n] = b[i];
      t[i][i] = 1;
    }
    for (size_t i = 0; i < m; ++i) {
      Integer l(1);
      for (const auto& x : w[i]) l = boost::multiprecision::lcm(l, denominator(x));
      if (l != 1) {
        Rational s(l);
        for (auto& x : w[i]) x *= s;
        for (auto& x : t[i]) x *= s;
      }
    }
    pivot_row_of_col.assign(n, -1);
    run();
  }

  void run() {
    Rational prev(1);
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
      size_t p = r;
      while (p < m && w[p][c] == 0) ++p;
      if (p == m) continue;
      std::swap(w[p], w[r]);
      std::swap(t[p], t[r]);
      const Rational piv = w[r][c];
      for (size_t i = r + 1; i < m; ++i) {
        const Rational f = w[i][c];
        for (size_t j = 0; j <= n; ++j) w[i][j] = (piv * w[i][j] - f * w[r][j]) / prev;
        for (size_t j = 0; j < m; ++j) t[i][j] = (piv * t[i][j] - f * t[r][j]) / prev;
      }
      pivot_row_of_col[c] = static_cast<long>(r);
      pivot_col_of_row.push_back(c);
      prev = piv;
      ++r;
    }
    rank = r;
  }
};

bool in_span(const std::vector<QVector>& basis, const QVector& v) {
  if (qvec_is_zero(v)) return true;
  if (basis.empty()) return false;
  const size_t n = v.size();
  QMatrix B(n, basis.size());
  QMatrix Bv(n, basis.size() + 1);
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) {
      B(i, j) = basis[j][i];
      Bv(i, j) = basis[j][i];
    }
  for (size_t i = 0; i < n; ++i) Bv(i, basis.size()) = v[i];
  return B.rank() == Bv.rank();
}

} // namespace

LinearSolution rref_solve(const QMatrix& A, const QVector& b) {
  if (A.rows() != b.size())
    throw dimension_error("rref_solve: A has " + std::to_string(A.rows()) + " rows but b has " +
                          std::to_string(b.size()) + " entries");
  Elimination e(A, b);

  // A zero coefficient row with nonzero right-hand side certifies 0 = c.
  for (size_t i = e.rank; i < e.m; ++i) {
    if (e.w[i][e.n] != 0) {
      InconsistencyCertificate cert;
      cert.row_coeffs = e.t[i];
      cert.combined_rhs = e.w[i][e.n];
      return cert;
    }
  }

  // Back substitution on the pivot rows; free variables parametrize the
  // nullspace.
  const size_t n = e.n;
  for (size_t ri = e.rank; ri-- > 0;) {
    const size_t c = e.pivot_col_of_row[ri];
    const Rational piv = e.w[ri][c];
    for (auto& x : e.w[ri]) x /= piv;
    for (size_t i = 0; i < ri; ++i) {
      const Rational f = e.w[i][c];
      if (f == 0) continue;
      for (size_t j = 0; j <= n; ++j) e.w[i][j] -= f * e.w[ri][j];
    }
  }

  SolutionSet s;
  s.particular = qvec_zero(n);
  for (size_t ri = 0; ri < e.rank; ++ri) s.particular[e.pivot_col_of_row[ri]] = e.w[ri][n];
  for (size_t c = 0; c < n; ++c) {
    if (e.pivot_row_of_col[c] >= 0) continue;
    QVector v = qvec_zero(n);
    v[c] = 1;
    for (size_t ri = 0; ri < e.rank; ++ri) {
      // pivot entries were rebuilt above, so pivot rows are in reduced form
      v[e.pivot_col_of_row[ri]] = -e.w[ri][c];
    }
    s.nullspace.push_back(std::move(v));
  }
  return s;
}

bool solves_exactly(const QMatrix& A, const QVector& b, const QVector& x) {
  QVector r = A * x;
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] != b[i]) return false;
  return true;
}

bool certificate_valid(const QMatrix& A, const QVector& b, const InconsistencyCertificate& cert) {
  if (cert.row_coeffs.size() != A.rows() || cert.combined_rhs == 0) return false;
  QVector lhs = qvec_zero(A.cols());
  Rational rhs(0);
  for (size_t i = 0; i < A.rows(); ++i) {
    if (cert.row_coeffs[i] == 0) continue;
    for (size_t j = 0; j < A.cols(); ++j) lhs[j] += cert.row_coeffs[i] * A(i, j);
    rhs += cert.row_coeffs[i] * b[i];
  }
  return qvec_is_zero(lhs) && rhs == cert.combined_rhs;
}

bool same_solution_set(const LinearSolution& s1, const LinearSolution& s2) {
  const auto* a = std::get_if<SolutionSet>(&s1);
  const auto* b = std::get_if<SolutionSet>(&s2);
  if (!a && !b) return true;
  if (!a || !b) return false;
  if (a->nullspace.size() != b->nullspace.size()) return false;
  if (!in_span(a->nullspace, qvec_sub(b->particular, a->particular))) return false;
  for (const auto& v : b->nullspace)
    if (!in_span(a->nullspace, v)) return false;
  return true;
}

namespace detail {

Rational bareiss_det(const QMatrix& A) {
  const size_t n = A.rows();
  if (n == 0) return Rational(1);
  std::vector<QVector> w(n, QVector(n));
  Rational scale(1);
  int sign = 1;
  for (size_t i = 0; i < n; ++i) {
    Integer l(1);
    for (size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, denominator(A(i, j)));
    for (size_t j = 0; j < n; ++j) w[i][j] = A(i, j) * Rational(l);
    scale *= Rational(l);
  }
  Rational prev(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && w[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(w[p], w[c]);
      sign = -sign;
    }
    const Rational piv = w[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      const Rational f = w[i][c];
      for (size_t j = c; j < n; ++j) w[i][j] = (piv * w[i][j] - f * w[c][j]) / prev;
    }
    prev = piv;
  }
  return Rational(sign) * w[n - 1][n - 1] / scale;
}

size_t rank_of(const QMatrix& A) {
  Elimination e(A, qvec_zero(A.rows()));
  return e.rank;
}

} // namespace detail

} // namespace riccisol
