#ifndef RICCISOL_POLY_HPP
#define RICCISOL_POLY_HPP

#include "riccisol/qmatrix.hpp"

#include <optional>

namespace riccisol {

/// Univariate polynomial over the rationals, coefficients in ascending
/// degree. The zero polynomial is the empty coefficient list; otherwise
/// the leading coefficient is nonzero.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& a);
  static Poly x(); // the monomial t

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  Poly operator-() const;

  Rational eval(const Rational& x) const;
  /// Exact matrix polynomial evaluation (Horner).
  QMatrix eval(const QMatrix& A) const;

  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned k) const;

  /// Euclidean division; returns {quotient, remainder}.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  bool divides(const Poly& p) const;

  std::string str(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rational> c_;
};

Poly poly_gcd(Poly a, Poly b); // monic gcd

/// Characteristic polynomial det(tI - A), exact, by Faddeev-LeVerrier.
/// Throws dimension_error for non-square input.
Poly char_poly(const QMatrix& A);

/// Least-degree monic annihilator of A; divides char_poly(A).
Poly minimal_poly(const QMatrix& A);

} // namespace riccisol

#endif
