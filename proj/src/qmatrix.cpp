#include "riccisol/qmatrix.hpp"
#include "riccisol/linsolve.hpp"

#include <sstream>

namespace riccisol {

QVector qvec_zero(size_t n) { return QVector(n, Rational(0)); }

QVector qvec_add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw dimension_error("vector size mismatch");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector qvec_sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw dimension_error("vector size mismatch");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector qvec_scale(const Rational& c, const QVector& a) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool qvec_is_zero(const QVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::string to_string(const QVector& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += to_string(a[i]);
  }
  return s + ")";
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw dimension_error("ragged initializer for QMatrix");
    for (const auto& x : r) a_.push_back(x);
  }
}

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix size mismatch in +");
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix size mismatch in -");
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMatrix QMatrix::operator-() const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw dimension_error("matrix size mismatch in *");
  QMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) throw dimension_error("matrix/vector size mismatch");
  QVector r(rows_, Rational(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

QMatrix operator*(const Rational& c, const QMatrix& m) { return m * c; }

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

QMatrix QMatrix::pow(unsigned k) const {
  if (rows_ != cols_) throw dimension_error("pow of non-square matrix");
  QMatrix r = identity(rows_);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Rational QMatrix::trace() const {
  if (rows_ != cols_) throw dimension_error("trace of non-square matrix");
  Rational t(0);
  for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rational QMatrix::det() const {
  if (rows_ != cols_) throw dimension_error("det of non-square matrix");
  return detail::bareiss_det(*this);
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw dimension_error("inverse of non-square matrix");
  const size_t n = rows_;
  QMatrix inv(n, n);
  for (size_t j = 0; j < n; ++j) {
    QVector e = qvec_zero(n);
    e[j] = 1;
    auto sol = rref_solve(*this, e);
    auto* s = std::get_if<SolutionSet>(&sol);
    if (!s || !s->nullspace.empty()) throw dimension_error("matrix is singular");
    inv.set_col(j, s->particular);
  }
  return inv;
}

size_t QMatrix::rank() const { return detail::rank_of(*this); }

QVector QMatrix::row(size_t i) const {
  QVector r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

QVector QMatrix::col(size_t j) const {
  QVector r(rows_);
  for (size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
  return r;
}

void QMatrix::set_row(size_t i, const QVector& v) {
  if (v.size() != cols_) throw dimension_error("row size mismatch");
  for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void QMatrix::set_col(size_t j, const QVector& v) {
  if (v.size() != rows_) throw dimension_error("col size mismatch");
  for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << to_string(m(i, j));
    }
  }
  os << "]";
  return os.str();
}

} // namespace riccisol
