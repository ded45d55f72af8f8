#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riccisol/algebra.hpp"
#include "riccisol/catalog.hpp"

using namespace riccisol;
using R = Rational;

namespace {

PairSpec abelian_spec(const QMatrix& g) {
  PairSpec s;
  s.id = "abelian";
  s.r = 0;
  s.n = 4;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i; j < 4; ++j)
      if (g(i, j) != 0) s.metric_entries.emplace_back(i + 1, j + 1, g(i, j));
  return s;
}

// one-dimensional isotropy rotating the (u1, u2) plane
PairSpec so2_spec(const QMatrix& g) {
  PairSpec s;
  s.id = "so2";
  s.r = 1;
  s.n = 4;
  PairSpec::BracketEntry e1;
  e1.i = 1;
  e1.j = 2;
  e1.components = qvec_zero(5);
  e1.components[2] = R(1); // [e1, u1] = u2
  s.brackets.push_back(e1);
  PairSpec::BracketEntry e2;
  e2.i = 1;
  e2.j = 3;
  e2.components = qvec_zero(5);
  e2.components[1] = R(-1); // [e1, u2] = -u1
  s.brackets.push_back(e2);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i; j < 4; ++j)
      if (g(i, j) != 0) s.metric_entries.emplace_back(i + 1, j + 1, g(i, j));
  return s;
}

} // namespace

TEST_CASE("abelian pair with a diagonal metric validates") {
  QMatrix g = QMatrix::identity(4);
  g(3, 3) = R(-1);
  const HomogeneousPair p = build_pair(abelian_spec(g));
  CHECK(validate_pair(p).ok);
  CHECK(jacobi_check(p).empty());
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(qvec_is_zero(p.bracket_m_of_u(i, j)));
}

TEST_CASE("degenerate metric is rejected with a witness") {
  QMatrix g(4, 4);
  g(0, 0) = 1; // rank 1
  CHECK_THROWS_AS(build_pair(abelian_spec(g)), validation_error);
  try {
    build_pair(abelian_spec(g));
  } catch (const validation_error& e) {
    REQUIRE(!e.report.violations.empty());
    CHECK(e.report.violations[0].kind == "metric-degenerate");
  }
}

TEST_CASE("Jacobi violation is reported with the witnessing triple") {
  // [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = 0: the cyclic sum at (1,2,3) is e2
  PairSpec s;
  s.id = "broken";
  s.r = 0;
  s.n = 3;
  PairSpec::BracketEntry b1;
  b1.i = 1;
  b1.j = 2;
  b1.components = {R(1), R(0), R(0)};
  s.brackets.push_back(b1);
  PairSpec::BracketEntry b2;
  b2.i = 1;
  b2.j = 3;
  b2.components = {R(0), R(1), R(0)};
  s.brackets.push_back(b2);
  for (size_t i = 1; i <= 3; ++i) s.metric_entries.emplace_back(i, i, R(1));
  CHECK_THROWS_AS(build_pair(s), validation_error);

  HomogeneousPair p;
  p.r = 0;
  p.n = 3;
  p.metric = QMatrix::identity(3);
  p.bracket.assign(3, std::vector<QVector>(3, qvec_zero(3)));
  p.bracket[0][1] = {R(1), R(0), R(0)};
  p.bracket[1][0] = {R(-1), R(0), R(0)};
  p.bracket[0][2] = {R(0), R(1), R(0)};
  p.bracket[2][0] = {R(0), R(-1), R(0)};
  const auto violations = jacobi_check(p);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].triple == std::array<size_t, 3>{0, 1, 2});
  CHECK(violations[0].residual == QVector{R(0), R(1), R(0)});
}

TEST_CASE("catalog bracket tables satisfy Jacobi") {
  CHECK(jacobi_check(instantiate("thm4.2-[1,(12)]", {{"k1", R(1)}, {"k2", R(0)}, {"k3", R(0)}})).empty());
  CHECK(jacobi_check(instantiate("thm4.1-(22)", {{"k1", R(1)}})).empty());
  CHECK(jacobi_check(instantiate("thm3.1-i", {{"alpha", R(1)}, {"eps", R(1)}})).empty());
}

TEST_CASE("isotropy matrix of the so(2) example is the rotation generator") {
  QMatrix g = QMatrix::identity(4);
  const HomogeneousPair p = build_pair(so2_spec(g));
  const QMatrix H = isotropy_matrix(p, 0);
  QMatrix expect(4, 4);
  expect(1, 0) = R(1);  // [e1, u1] = u2
  expect(0, 1) = R(-1); // [e1, u2] = -u1
  CHECK(H == expect);
  CHECK_THROWS_AS(isotropy_matrix(p, 1), std::out_of_range);
  const HomogeneousPair lie = build_pair(abelian_spec(g));
  CHECK_THROWS_AS(isotropy_matrix(lie, 0), std::out_of_range);
}

TEST_CASE("abelian isotropy extension acts by zero") {
  PairSpec s;
  s.id = "central";
  s.r = 1;
  s.n = 3;
  for (size_t i = 1; i <= 3; ++i) s.metric_entries.emplace_back(i, i, R(1));
  const HomogeneousPair p = build_pair(s);
  CHECK(isotropy_matrix(p, 0).is_zero());
}

TEST_CASE("metric invariance check") {
  QMatrix g = QMatrix::identity(4);
  CHECK(metric_invariance_check(build_pair(so2_spec(g))).invariant);
  // breaking the rotational symmetry of the plane breaks invariance
  QMatrix bad = QMatrix::identity(4);
  bad(1, 1) = R(2);
  CHECK_THROWS_AS(build_pair(so2_spec(bad)), validation_error);
  HomogeneousPair p;
  {
    PairSpec s = so2_spec(bad);
    p.r = s.r;
    p.n = s.n;
    p.metric = bad;
    p.bracket.assign(5, std::vector<QVector>(5, qvec_zero(5)));
    for (const auto& e : s.brackets) {
      p.bracket[e.i - 1][e.j - 1] = e.components;
      p.bracket[e.j - 1][e.i - 1] = qvec_scale(R(-1), e.components);
    }
  }
  const auto inv = metric_invariance_check(p);
  CHECK(!inv.invariant);
  REQUIRE(inv.violating_j.size() == 1);
  CHECK(inv.violating_j[0] == 0);
  // Lie-group case is vacuously invariant
  CHECK(metric_invariance_check(build_pair(abelian_spec(QMatrix::identity(4)))).invariant);
}

TEST_CASE("invariant fields of the so(2) example") {
  const HomogeneousPair p = build_pair(so2_spec(QMatrix::identity(4)));
  CHECK(is_invariant_field(p, {R(0), R(0), R(1), R(0)}));  // u3
  CHECK(!is_invariant_field(p, {R(1), R(0), R(0), R(0)})); // u1
  CHECK(is_invariant_field(p, qvec_zero(4)));
  const HomogeneousPair lie = build_pair(abelian_spec(QMatrix::identity(4)));
  CHECK(is_invariant_field(lie, {R(1), R(2), R(3), R(4)}));
}

TEST_CASE("PARTIAL pairs refuse the operations that need h-components") {
  const HomogeneousPair p = instantiate("case-1.3.1:5", {{"a", R(1)}, {"lambda", R(2)}, {"b", R(1)}, {"c", R(1)}});
  CHECK(p.is_partial());
  CHECK_THROWS_AS(jacobi_check(p), partial_pair_error);
  CHECK_THROWS_AS(isotropy_matrix(p, 0), partial_pair_error);
  CHECK(validate_pair(p).ok); // metric axioms still checked
}

TEST_CASE("the documented invariance fixture of 1.3^1:5 contains u2") {
  const CatalogEntry& e = catalog_entry("case-1.3.1:5");
  REQUIRE(e.invariance_subspace.size() == 1);
  CHECK(e.invariance_subspace[0] == MVector{R(0), R(1), R(0), R(0)});
}

TEST_CASE("antisymmetry is enforced structurally") {
  const HomogeneousPair p = instantiate("thm3.1-ii", {{"alpha", R(2)}, {"eps", R(-1)}});
  for (size_t i = 0; i < p.dim_g(); ++i)
    for (size_t j = 0; j < p.dim_g(); ++j)
      CHECK(p.bracket[i][j] == qvec_scale(R(-1), p.bracket[j][i]));
}
