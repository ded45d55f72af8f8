#ifndef RICCISOL_QMATRIX_HPP
#define RICCISOL_QMATRIX_HPP

#include "riccisol/rational.hpp"

#include <initializer_list>
#include <vector>

namespace riccisol {

class dimension_error : public std::runtime_error {
public:
  explicit dimension_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Coordinate vector with exact rational entries.
using QVector = std::vector<Rational>;

QVector qvec_zero(size_t n);
QVector qvec_add(const QVector& a, const QVector& b);
QVector qvec_sub(const QVector& a, const QVector& b);
QVector qvec_scale(const Rational& c, const QVector& a);
bool qvec_is_zero(const QVector& a);
std::string to_string(const QVector& a);

/// Dense matrix over the rationals. Dimensions are fixed at construction,
/// equality is exact entrywise equality.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
  /// Row-major nested-list constructor, mostly for tests and fixtures.
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator-() const;
  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator*(const Rational& c) const;

  QMatrix transpose() const;
  QMatrix pow(unsigned k) const;

  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  /// Exact determinant (fraction-free elimination on a scaled integer copy).
  Rational det() const;
  /// Exact inverse; throws dimension_error if singular or non-square.
  QMatrix inverse() const;

  size_t rank() const;

  QVector row(size_t i) const;
  QVector col(size_t j) const;
  void set_row(size_t i, const QVector& v);
  void set_col(size_t j, const QVector& v);

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

QMatrix operator*(const Rational& c, const QMatrix& m);
std::string to_string(const QMatrix& m);

} // namespace riccisol

#endif
