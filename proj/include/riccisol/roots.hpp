#ifndef RICCISOL_ROOTS_HPP
#define RICCISOL_ROOTS_HPP

#include "riccisol/poly.hpp"

#include <optional>

namespace riccisol {

/// Open-ended rational bracket (lo, hi] that contains exactly one real root.
struct IsolatingInterval {
  Rational lo, hi;
};

enum class FactorKind {
  Linear,              // t - r, rational root r
  QuadraticRealPair,   // irreducible over Q, two conjugate real roots
  QuadraticComplexPair,// irreducible over Q, complex-conjugate pair
  HigherIrreducible,   // degree > 2 and no rational factorization found;
                       // callers fall back to 64-bit numerics for the roots
};

struct IrreducibleFactor {
  Poly factor;       // monic
  int multiplicity = 1;
  FactorKind kind = FactorKind::Linear;
  std::optional<Rational> root;             // Linear only
  std::vector<IsolatingInterval> real_roots;// QuadraticRealPair only, sorted
  Rational discriminant;                    // quadratics only
};

/// Factorization into monic factors irreducible over the rationals.
/// The product of factor^multiplicity times the leading coefficient of p
/// reproduces p exactly. Throws std::domain_error on the zero polynomial.
std::vector<IrreducibleFactor> factor_poly(const Poly& p);

/// Sturm machinery (exact): chain, sign variation counts and isolation.
std::vector<Poly> sturm_chain(const Poly& p);
int sign_variations_at(const std::vector<Poly>& chain, const Rational& x);
int sign_variations_at_minus_inf(const std::vector<Poly>& chain);
int sign_variations_at_plus_inf(const std::vector<Poly>& chain);
/// Number of distinct real roots of p in (lo, hi].
int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi);
int count_real_roots(const Poly& p);
/// Disjoint intervals (lo, hi], one per distinct real root, sorted.
std::vector<IsolatingInterval> isolate_real_roots(const Poly& p);

/// The rational with the smallest denominator (then smallest numerator)
/// inside the closed interval [lo, hi], via Stern-Brocot descent.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

/// Approximate real roots of p (64-bit floats, Durand-Kerner). Only used
/// by the documented Segre numeric fallback for irreducible factors of
/// degree > 2; everything on the exact path ignores this.
std::vector<std::pair<double, double>> numeric_roots(const Poly& p);

} // namespace riccisol

#endif
