#include "riccisol/roots.hpp"

#include <algorithm>
#include <complex>

namespace riccisol {

namespace {

int sign_of(const Rational& x) { return x.sign(); }

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Poly square_free_part(const Poly& p) {
  const Poly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p.monic();
  return p.divmod(g).first.monic();
}

// Cauchy bound: every real root lies strictly inside (-B, B).
Rational root_bound(const Poly& p) {
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i)) / lead);
  return m + 1;
}

bool rational_is_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const Integer n = numerator(q), d = denominator(q);
  const Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  root = Rational(sn, sd);
  return true;
}

// Largest possible denominator of a rational root, from the rational root
// theorem applied to the primitive integer form of p.
Integer rational_root_denominator_bound(const Poly& p) {
  Integer l(1);
  for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, denominator(c));
  Integer g(0);
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, Integer(numerator(c) * (l / denominator(c))));
  if (g == 0) g = 1;
  Integer lead = numerator(p.leading()) * (l / denominator(p.leading()));
  lead /= g;
  return boost::multiprecision::abs(lead);
}

// Exact rational root inside an isolating interval, if the isolated root is
// rational. Bisects until at most one rational of bounded denominator fits,
// then tests the Stern-Brocot candidate.
std::optional<Rational> rational_root_in(const Poly& p, IsolatingInterval iv) {
  const Integer D = rational_root_denominator_bound(p);
  const Rational gap = Rational(1, D * D + 1);
  while (iv.hi - iv.lo >= gap) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (p.eval(mid) == 0) return mid;
    if (count_real_roots(p, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  const Rational cand = simplest_rational_in(iv.lo, iv.hi);
  if (p.eval(cand) == 0) return cand;
  return std::nullopt;
}

std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  for (const auto& iv : isolate_real_roots(p)) {
    if (auto r = rational_root_in(p, iv)) out.push_back(*r);
  }
  return out;
}

IrreducibleFactor classify_quadratic(const Poly& q) {
  IrreducibleFactor f;
  f.factor = q.monic();
  const Rational b = f.factor.coeff(1), c = f.factor.coeff(0);
  f.discriminant = b * b - 4 * c;
  if (f.discriminant < 0) {
    f.kind = FactorKind::QuadraticComplexPair;
  } else {
    f.kind = FactorKind::QuadraticRealPair;
    f.real_roots = isolate_real_roots(f.factor);
  }
  return f;
}

// Splits a monic square-free quartic with no rational roots into two monic
// rational quadratics when possible.
std::optional<std::pair<Poly, Poly>> quartic_split(const Poly& q) {
  const Rational b = q.coeff(3), c = q.coeff(2), d = q.coeff(1), e = q.coeff(0);
  const Poly t = Poly::x();
  const Poly S = Poly::constant(c) - t * b + t * t;        // u + s as a function of p
  const Poly A = Poly::constant(d) - t * S;                 // u*(b-2p)
  const Poly B = (Poly::constant(b) - t * 2) * S - A;       // s*(b-2p)
  const Poly F = A * B - (Poly::constant(b) - t * 2) * (Poly::constant(b) - t * 2) * e;
  for (const auto& pv : rational_roots(F)) {
    if (b - 2 * pv == 0) continue;
    const Rational Sp = S.eval(pv);
    const Rational u = (d - pv * Sp) / (b - 2 * pv);
    const Rational s = Sp - u;
    const Poly q1({u, pv, Rational(1)});
    const Poly q2({s, b - pv, Rational(1)});
    if (q1 * q2 == q) return std::make_pair(q1, q2);
  }
  // symmetric case p = r = b/2: the quadratic constant terms solve
  // z^2 - S z + e with S evaluated at b/2
  const Rational pv = b / 2;
  const Rational Sp = S.eval(pv);
  if (pv * Sp == d) {
    Rational sq;
    if (rational_is_square(Sp * Sp - 4 * e, sq)) {
      const Rational u = (Sp + sq) / 2, s = (Sp - sq) / 2;
      const Poly q1({u, pv, Rational(1)});
      const Poly q2({s, pv, Rational(1)});
      if (q1 * q2 == q) return std::make_pair(q1, q2);
    }
  }
  return std::nullopt;
}

// Irreducible factorization of a monic square-free polynomial.
void factor_squarefree(const Poly& input, int multiplicity, std::vector<IrreducibleFactor>& out) {
  Poly q = input.monic();
  for (const auto& r : rational_roots(q)) {
    IrreducibleFactor f;
    f.factor = Poly({-r, Rational(1)});
    f.multiplicity = multiplicity;
    f.kind = FactorKind::Linear;
    f.root = r;
    out.push_back(std::move(f));
    q = q.divmod(Poly({-r, Rational(1)})).first;
  }
  if (q.degree() <= 0) return;
  if (q.degree() == 2) {
    auto f = classify_quadratic(q);
    f.multiplicity = multiplicity;
    out.push_back(std::move(f));
    return;
  }
  if (q.degree() == 4) {
    if (auto split = quartic_split(q)) {
      for (const Poly& part : {split->first, split->second}) {
        auto f = classify_quadratic(part);
        f.multiplicity = multiplicity;
        out.push_back(std::move(f));
      }
      return;
    }
  }
  // degree 3 with no rational root is irreducible over Q; likewise any
  // remaining quartic. Higher degrees than the tool needs land here too.
  IrreducibleFactor f;
  f.factor = q;
  f.multiplicity = multiplicity;
  f.kind = FactorKind::HigherIrreducible;
  out.push_back(std::move(f));
}

} // namespace

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_variations_at(const std::vector<Poly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_of(q.eval(x)));
  return count_variations(signs);
}

int sign_variations_at_minus_inf(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    int s = sign_of(q.leading());
    if (q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int sign_variations_at_plus_inf(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(sign_of(q.leading()));
  return count_variations(signs);
}

int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  const Poly sf = square_free_part(p);
  if (sf.degree() < 1) return 0;
  const auto chain = sturm_chain(sf);
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

int count_real_roots(const Poly& p) {
  const Poly sf = square_free_part(p);
  if (sf.degree() < 1) return 0;
  const auto chain = sturm_chain(sf);
  return sign_variations_at_minus_inf(chain) - sign_variations_at_plus_inf(chain);
}

std::vector<IsolatingInterval> isolate_real_roots(const Poly& p) {
  std::vector<IsolatingInterval> out;
  const Poly sf = square_free_part(p);
  if (sf.degree() < 1) return out;
  const Rational B = root_bound(sf);
  struct Seg {
    Rational lo, hi;
    int roots;
  };
  std::vector<Seg> work{{-B, B, count_real_roots(sf, -B, B)}};
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.roots == 0) continue;
    if (s.roots == 1) {
      out.push_back({s.lo, s.hi});
      continue;
    }
    const Rational mid = (s.lo + s.hi) / 2;
    const int left = count_real_roots(sf, s.lo, mid);
    work.push_back({s.lo, mid, left});
    work.push_back({mid, s.hi, s.roots - left});
  }
  std::sort(out.begin(), out.end(), [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational_in(hi, lo);
  if (lo <= 0 && 0 <= hi) return Rational(0);
  if (hi < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo <= hi
  Integer fl = numerator(lo) / denominator(lo); // floor for positive lo
  if (Rational(fl) == lo) return lo;
  if (hi >= Rational(fl + 1)) return Rational(fl + 1);
  const Rational fr = Rational(fl);
  return fr + 1 / simplest_rational_in(1 / (hi - fr), 1 / (lo - fr));
}

std::vector<IrreducibleFactor> factor_poly(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("factor_poly of the zero polynomial");
  std::vector<IrreducibleFactor> out;
  Poly work = p.monic();

  int tpow = 0;
  while (work.degree() >= 1 && work.coeff(0) == 0) {
    work = work.divmod(Poly::x()).first;
    ++tpow;
  }
  if (tpow > 0) {
    IrreducibleFactor f;
    f.factor = Poly::x();
    f.multiplicity = tpow;
    f.kind = FactorKind::Linear;
    f.root = Rational(0);
    out.push_back(std::move(f));
  }
  if (work.degree() < 1) return out;

  // Yun square-free decomposition: work = prod a_i^i
  const Poly g0 = poly_gcd(work, work.derivative());
  Poly b = work.divmod(g0).first;
  Poly c = work.derivative().divmod(g0).first;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    const Poly ai = poly_gcd(b, d);
    if (ai.degree() >= 1) factor_squarefree(ai, i, out);
    b = b.divmod(ai).first;
    c = d.divmod(ai).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<std::pair<double, double>> numeric_roots(const Poly& p) {
  using C = std::complex<double>;
  const int n = p.degree();
  std::vector<std::pair<double, double>> out;
  if (n < 1) return out;
  std::vector<C> a(n + 1);
  for (int k = 0; k <= n; ++k)
    a[k] = C(static_cast<double>(numerator(p.coeff(k))) / static_cast<double>(denominator(p.coeff(k))), 0.0);
  auto eval = [&](C z) {
    C v = 0;
    for (int k = n; k >= 0; --k) v = v * z + a[k];
    return v;
  };
  std::vector<C> z(n);
  const C seed(0.4, 0.9);
  C zk(1, 0);
  for (int k = 0; k < n; ++k) {
    zk *= seed;
    z[k] = zk;
  }
  for (int it = 0; it < 500; ++it) {
    double moved = 0;
    for (int k = 0; k < n; ++k) {
      C denom = a[n];
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= (z[k] - z[j]);
      if (std::abs(denom) == 0.0) continue;
      const C step = eval(z[k]) / denom;
      z[k] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  for (const auto& r : z) out.emplace_back(r.real(), r.imag());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace riccisol
