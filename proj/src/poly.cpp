#include "riccisol/poly.hpp"
#include "riccisol/roots.hpp"

#include <sstream>

namespace riccisol {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& a) { return Poly({a}); }

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
  Rational v(0);
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

QMatrix Poly::eval(const QMatrix& A) const {
  if (A.rows() != A.cols()) throw dimension_error("polynomial of a non-square matrix");
  QMatrix v(A.rows(), A.cols());
  for (size_t i = c_.size(); i-- > 0;) {
    v = v * A;
    for (size_t d = 0; d < A.rows(); ++d) v(d, d) += c_[i];
  }
  return v;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<int>(i));
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly q, r = *this;
  std::vector<Rational> qc(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const size_t k = static_cast<size_t>(r.degree() - d.degree());
    const Rational f = r.leading() / d.leading();
    qc[k] = f;
    std::vector<Rational> sub(k + d.c_.size(), Rational(0));
    for (size_t i = 0; i < d.c_.size(); ++i) sub[k + i] = f * d.c_[i];
    r = r - Poly(std::move(sub));
  }
  return {Poly(std::move(qc)), r};
}

bool Poly::divides(const Poly& p) const { return p.divmod(*this).second.is_zero(); }

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    Rational a = abs(c_[i]);
    const bool unit = (a == 1 && i > 0);
    if (!unit) os << to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly char_poly(const QMatrix& A) {
  if (A.rows() != A.cols()) throw dimension_error("char_poly of non-square matrix");
  const size_t n = A.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k)/k,
  // det(tI - A) = t^n + c_1 t^{n-1} + ... + c_n.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1; // coefficient of t^n
  QMatrix M(n, n);
  Rational ck(1);
  for (size_t k = 1; k <= n; ++k) {
    M = A * M;
    for (size_t d = 0; d < n; ++d) M(d, d) += ck;
    ck = -(A * M).trace() / Rational(static_cast<int>(k));
    c[n - k] = ck;
  }
  return Poly(std::move(c));
}

Poly minimal_poly(const QMatrix& A) {
  // Product over the irreducible factors of the characteristic polynomial,
  // each raised to the largest block size it supports.
  const Poly cp = char_poly(A);
  Poly m = Poly::constant(1);
  for (const auto& f : factor_poly(cp)) {
    // largest block size for this factor = where the rank of f(A)^e stops falling
    const QMatrix F = f.factor.eval(A);
    unsigned e = 1;
    QMatrix cur = F;
    size_t prev_rank = cur.rank();
    while (e < static_cast<unsigned>(f.multiplicity)) {
      QMatrix nxt = cur * F;
      const size_t r = nxt.rank();
      if (r == prev_rank) break;
      cur = std::move(nxt);
      prev_rank = r;
      ++e;
    }
    m = m * f.factor.pow(e);
  }
  // the construction above guarantees annihilation; keep the guard cheap
  if (!m.eval(A).is_zero()) throw std::logic_error("minimal_poly: annihilation failed");
  return m.monic();
}

} // namespace riccisol
