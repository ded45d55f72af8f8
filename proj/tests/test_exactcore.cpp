#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riccisol/linsolve.hpp"
#include "riccisol/poly.hpp"
#include "riccisol/roots.hpp"

using namespace riccisol;
using R = Rational;

TEST_CASE("rational literal grammar") {
  CHECK(parse_rational("3/4") == R(3, 4));
  CHECK(parse_rational("-3/4") == R(-3, 4));
  CHECK(parse_rational("5") == R(5));
  CHECK(parse_rational("-5") == R(-5));
  CHECK(parse_rational("0") == R(0));
  CHECK(parse_rational("6/4") == R(3, 2)); // canonicalized
  CHECK(to_string(R(3, 4)) == "3/4");
  CHECK(to_string(R(-3, 4)) == "-3/4");
  CHECK(to_string(R(7)) == "7");
  CHECK(to_string(R(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational(""), parse_error);
  CHECK_THROWS_AS(parse_rational("a"), parse_error);
  CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
  CHECK_THROWS_AS(parse_rational("+3"), parse_error);
  CHECK_THROWS_AS(parse_rational("3/-2"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/"), parse_error);
  // denominators always positive, lowest terms
  const R q = parse_rational("-10/4");
  CHECK(numerator(q) == Integer(-5));
  CHECK(denominator(q) == Integer(2));
}

TEST_CASE("matrix arithmetic and inverse") {
  QMatrix A{{R(1), R(2)}, {R(3), R(4)}};
  CHECK(A.det() == R(-2));
  CHECK(A.trace() == R(5));
  const QMatrix Ainv = A.inverse();
  CHECK(A * Ainv == QMatrix::identity(2));
  CHECK(Ainv * A == QMatrix::identity(2));
  CHECK((A - A).is_zero());
  CHECK(A.transpose()(0, 1) == R(3));
  CHECK(A.rank() == 2);
  QMatrix S{{R(1), R(2)}, {R(2), R(4)}};
  CHECK(S.rank() == 1);
  CHECK(S.det() == R(0));
  CHECK_THROWS_AS(S.inverse(), dimension_error);
  QMatrix NonSquare(2, 3);
  CHECK_THROWS_AS(NonSquare.det(), dimension_error);
}

TEST_CASE("rref_solve identity case") {
  const auto sol = rref_solve(QMatrix::identity(2), {R(3), R(5)});
  const auto& s = std::get<SolutionSet>(sol);
  CHECK(s.particular == QVector{R(3), R(5)});
  CHECK(s.nullspace.empty());
}

TEST_CASE("rref_solve rank-1 contradiction yields the (-2, 1) certificate") {
  QMatrix A{{R(1), R(1)}, {R(2), R(2)}};
  const QVector b{R(1), R(3)};
  const auto sol = rref_solve(A, b);
  const auto& cert = std::get<InconsistencyCertificate>(sol);
  CHECK(cert.row_coeffs == QVector{R(-2), R(1)});
  CHECK(cert.combined_rhs == R(1));
  CHECK(certificate_valid(A, b, cert));
}

TEST_CASE("rref_solve dimension mismatch") {
  CHECK_THROWS_AS(rref_solve(QMatrix::identity(2), {R(1)}), dimension_error);
}

TEST_CASE("rref_solve underdetermined system carries an exact nullspace") {
  // x + y + z = 6 with one pivot, two free columns
  QMatrix A(1, 3);
  A(0, 0) = 1;
  A(0, 1) = 1;
  A(0, 2) = 1;
  const auto sol = rref_solve(A, {R(6)});
  const auto& s = std::get<SolutionSet>(sol);
  CHECK(s.nullspace.size() == 2);
  CHECK(solves_exactly(A, {R(6)}, s.particular));
  for (const auto& v : s.nullspace) CHECK(qvec_is_zero(A * v));
}

TEST_CASE("rref_solve substitution property on pseudorandom systems") {
  unsigned long long state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<unsigned>(state >> 33);
  };
  int inconsistent_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const size_t m = 2 + next() % 4, n = 2 + next() % 4;
    QMatrix A(m, n);
    QVector b(m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) A(i, j) = R(static_cast<int>(next() % 7)) - 3;
      b[i] = R(static_cast<int>(next() % 7)) - 3;
    }
    const auto sol = rref_solve(A, b);
    if (const auto* s = std::get_if<SolutionSet>(&sol)) {
      CHECK(solves_exactly(A, b, s->particular));
      for (const auto& v : s->nullspace) CHECK(qvec_is_zero(A * v));
    } else {
      ++inconsistent_seen;
      CHECK(certificate_valid(A, b, std::get<InconsistencyCertificate>(sol)));
    }
  }
  CHECK(inconsistent_seen > 0);
}

TEST_CASE("char_poly examples") {
  QMatrix D(4, 4);
  D(0, 0) = 1;
  D(1, 1) = 2;
  D(2, 2) = 3;
  D(3, 3) = 4;
  // (t-1)(t-2)(t-3)(t-4) = t^4 - 10t^3 + 35t^2 - 50t + 24
  CHECK(char_poly(D) == Poly({R(24), R(-50), R(35), R(-10), R(1)}));
  CHECK(char_poly(QMatrix(4, 4)) == Poly({R(0), R(0), R(0), R(0), R(1)}));
  QMatrix J{{R(0), R(1)}, {R(-1), R(0)}};
  CHECK(char_poly(J) == Poly({R(1), R(0), R(1)})); // t^2 + 1
  CHECK_THROWS_AS(char_poly(QMatrix(2, 3)), dimension_error);
}

TEST_CASE("Cayley-Hamilton on pseudorandom matrices") {
  unsigned long long state = 777;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<unsigned>(state >> 33);
  };
  for (int trial = 0; trial < 20; ++trial) {
    const size_t n = 2 + next() % 3;
    QMatrix A(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) A(i, j) = R(static_cast<int>(next() % 9)) - 4;
    CHECK(char_poly(A).eval(A).is_zero());
  }
}

TEST_CASE("factor_poly pure power") {
  const auto fs = factor_poly(Poly({R(0), R(0), R(0), R(0), R(1)})); // t^4
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].factor == Poly({R(0), R(1)}));
  CHECK(fs[0].multiplicity == 4);
  CHECK(fs[0].kind == FactorKind::Linear);
}

TEST_CASE("factor_poly complex pair annotation") {
  const auto fs = factor_poly(Poly({R(1), R(0), R(1)})); // t^2 + 1
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].kind == FactorKind::QuadraticComplexPair);
  CHECK(fs[0].multiplicity == 1);
  CHECK(fs[0].discriminant == R(-4));
}

TEST_CASE("factor_poly real irrational pair bracketd by isolating intervals") {
  const Poly p({R(-2), R(0), R(1)}); // t^2 - 2
  const auto fs = factor_poly(p);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].kind == FactorKind::QuadraticRealPair);
  REQUIRE(fs[0].real_roots.size() == 2);
  // Sturm oracle: two real roots, one per interval, none rational
  CHECK(count_real_roots(p) == 2);
  for (const auto& iv : fs[0].real_roots) {
    CHECK(count_real_roots(p, iv.lo, iv.hi) == 1);
    CHECK(p.eval(iv.lo) != 0);
    CHECK(p.eval(iv.hi) != 0);
  }
  CHECK(fs[0].real_roots[0].hi <= fs[0].real_roots[1].lo);
}

TEST_CASE("factor_poly re-expansion is exact") {
  const std::vector<Poly> cases = {
      Poly({R(24), R(-50), R(35), R(-10), R(1)}),          // split linear
      Poly({R(-2), R(0), R(-1), R(0), R(1)}),              // (t^2-2)(t^2+1)
      Poly({R(3), R(3), R(4), R(1), R(1)}),                // (t^2+t+1)(t^2+3)
      Poly({R(4), R(0), R(4), R(0), R(1)}),                // (t^2+2)^2
      Poly({R(1), R(3), R(3), R(1)}),                      // (t+1)^3
      Poly({R(0), R(-4), R(0), R(1)}),                     // t(t-2)(t+2)
      Poly({R(1), R(-1), R(0), R(1)}) * Poly({R(5), R(1)}) // irreducible cubic * (t+5)
  };
  for (const auto& p : cases) {
    Poly prod = Poly::constant(p.leading());
    for (const auto& f : factor_poly(p)) prod = prod * f.factor.pow(static_cast<unsigned>(f.multiplicity));
    CHECK(prod == p);
  }
  CHECK_THROWS_AS(factor_poly(Poly()), std::domain_error);
}

TEST_CASE("irreducible cubic is reported for the numeric fallback path") {
  const Poly p({R(1), R(-2), R(-1), R(1)}); // t^3 - t^2 - 2t + 1, no rational roots
  const auto fs = factor_poly(p);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].kind == FactorKind::HigherIrreducible);
  const auto roots = numeric_roots(p);
  REQUIRE(roots.size() == 3);
  for (const auto& [re, im] : roots) {
    CHECK(std::abs(im) < 1e-12);
    CHECK(std::abs((re * re * re) - (re * re) - 2 * re + 1) < 1e-9);
  }
}

TEST_CASE("minimal_poly witnesses block sizes") {
  CHECK(minimal_poly(QMatrix(3, 3)) == Poly({R(0), R(1)})); // t
  QMatrix N(4, 4);
  N(0, 1) = 1; // one 2-block plus zeros
  CHECK(minimal_poly(N) == Poly({R(0), R(0), R(1)})); // t^2
  QMatrix D(3, 3);
  D(0, 0) = 2;
  D(1, 1) = 2;
  D(2, 2) = 5;
  CHECK(minimal_poly(D) == Poly({R(10), R(-7), R(1)})); // (t-2)(t-5)
  CHECK(minimal_poly(D).divides(char_poly(D)));
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_rational_in(R(1, 3), R(1, 2)) == R(1, 2));
  CHECK(simplest_rational_in(R(-1, 2), R(1, 3)) == R(0));
  CHECK(simplest_rational_in(R(7, 5), R(3, 2)) == R(3, 2));
  CHECK(simplest_rational_in(R(5), R(6)) == R(5));
  CHECK(simplest_rational_in(R(-8, 3), R(-5, 2)) == R(-5, 2));
}

TEST_CASE("sturm isolation separates clustered roots") {
  // roots 1/3 and 2/5 are close; intervals must separate them
  const Poly p = Poly({R(-1, 3), R(1)}) * Poly({R(-2, 5), R(1)}) * Poly({R(-7), R(1)});
  const auto ivs = isolate_real_roots(p);
  REQUIRE(ivs.size() == 3);
  for (const auto& iv : ivs) CHECK(count_real_roots(p, iv.lo, iv.hi) == 1);
}
