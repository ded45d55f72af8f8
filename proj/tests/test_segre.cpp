#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riccisol/acceptance.hpp"
#include "riccisol/catalog.hpp"
#include "riccisol/geometry.hpp"
#include "riccisol/segre.hpp"

using namespace riccisol;
using R = Rational;

namespace {

QMatrix diag(std::vector<R> d) {
  QMatrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

const std::string bar = kBarMark;

} // namespace

TEST_CASE("scalar operator is fully degenerate") {
  const QMatrix g = diag({R(1), R(1), R(-1), R(-1)});
  const QMatrix Q = QMatrix::identity(4) * R(7);
  const SegreSymbol sym = segre_type(Q, g);
  CHECK(sym.blocks.size() == 4);
  CHECK(is_degenerate(sym));
  CHECK(sym.rendering == "[(11,11)]");
  for (const auto& b : sym.blocks) CHECK(b.group == sym.blocks[0].group);
  // Riemannian version groups everything on the spacelike side
  CHECK(segre_type(QMatrix::identity(3) * R(2), QMatrix::identity(3)).rendering == "[(111)]");
}

TEST_CASE("distinct real eigenvalues with one timelike direction") {
  const QMatrix g = diag({R(1), R(1), R(1), R(-1)});
  const QMatrix Q = diag({R(1), R(2), R(3), R(4)});
  const SegreSymbol sym = segre_type(Q, g);
  CHECK(sym.rendering == "[111,1]");
  CHECK(!is_degenerate(sym));
  CHECK(sym.spacelike_count() == 3);
}

TEST_CASE("block sizes sum to the dimension and computed symbols re-parse") {
  for (const char* id : {"abelian-flat", "thm3.1-i", "thm3.1-ii", "thm3.2-i", "thm3.2-ii", "thm4.1-(22)",
                         "thm4.2-[1,(12)]"}) {
    const CatalogEntry& e = catalog_entry(id);
    const Params p = check_params(e, {});
    const HomogeneousPair pair = instantiate(id, p);
    const Geometry geo = compute_geometry(pair);
    const SegreSymbol sym = segre_type(geo.Q, pair.metric);
    int total = 0;
    for (const auto& b : sym.blocks) total += b.size * (b.causal == Causal::Pair ? 2 : 1);
    CHECK(total == 4);
    const ParsedSegre parsed = parse_segre(sym.rendering);
    CHECK(parsed.well_formed);
    CHECK(render_segre(parsed) == sym.rendering);
    CHECK(is_degenerate(parsed) == is_degenerate(sym));
  }
}

TEST_CASE("catalog Segre types") {
  {
    const HomogeneousPair p = instantiate("thm3.1-ii", {{"alpha", R(1)}, {"eps", R(1)}});
    const Geometry geo = compute_geometry(p);
    CHECK(segre_type(geo.Q, p.metric).rendering == "[1,11" + bar + "1]");
  }
  {
    const HomogeneousPair p = instantiate("thm3.2-i", {{"alpha", R(2)}, {"eps", R(-1)}});
    const Geometry geo = compute_geometry(p);
    CHECK(segre_type(geo.Q, p.metric).rendering == "[11,1" + bar + "1]");
  }
  {
    const HomogeneousPair p = instantiate("thm4.1-(22)", {{"k1", R(1)}});
    const Geometry geo = compute_geometry(p);
    const SegreSymbol sym = segre_type(geo.Q, p.metric);
    CHECK(sym.rendering == "[(22)]");
    CHECK(is_degenerate(sym));
  }
  {
    const HomogeneousPair p = instantiate("thm4.2-[1,(12)]", {{"k1", R(1, 2)}, {"k2", R(1)}, {"k3", R(0)}});
    const Geometry geo = compute_geometry(p);
    const SegreSymbol sym = segre_type(geo.Q, p.metric);
    CHECK(sym.rendering == "[(1,12)]");
    CHECK(is_degenerate(sym));
    CHECK(minimal_poly(geo.Q).str() == "t^2");
  }
}

TEST_CASE("degeneracy of printed strings") {
  CHECK(!is_degenerate(parse_segre("[111,1]")));
  CHECK(is_degenerate(parse_segre("[(11),(1,1)]")));
  CHECK(is_degenerate(parse_segre("[(1,12)]")));
  CHECK(is_degenerate(parse_segre("[1,(12)]")));
  CHECK(!is_degenerate(parse_segre("[1,11" + bar + "1]")));
  CHECK(!is_degenerate(parse_segre("[22]")));
  CHECK(is_degenerate(parse_segre("[(22)]")));
}

TEST_CASE("symbol strings of the printed tables round-trip byte-exactly") {
  for (const auto& s : segre_table_vocabulary()) {
    const ParsedSegre parsed = parse_segre(s);
    CHECK(render_segre(parsed) == s);
  }
  // the oddly bracketed ones parse losslessly but are flagged
  CHECK(!parse_segre("[(11,1)1)]").well_formed);
  CHECK(!parse_segre("[(1|1,1|1)]").well_formed);
  CHECK(parse_segre("[1,(12)]").well_formed);
  CHECK(parse_segre("[(1,1)2]").well_formed);
}

TEST_CASE("classification is invariant under simultaneous basis change") {
  unsigned long long state = 99;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<unsigned>(state >> 33);
  };
  std::vector<std::pair<QMatrix, QMatrix>> cases;
  for (const char* id : {"thm3.1-ii", "thm4.1-(22)", "thm4.2-[1,(12)]", "thm3.2-i"}) {
    const CatalogEntry& e = catalog_entry(id);
    const Params p = check_params(e, {});
    const HomogeneousPair pair = instantiate(id, p);
    const Geometry geo = compute_geometry(pair);
    cases.emplace_back(geo.Q, pair.metric);
  }
  for (const auto& [Q, g] : cases) {
    const std::string base = segre_type(Q, g).rendering;
    for (int trial = 0; trial < 4; ++trial) {
      QMatrix P = QMatrix::identity(4);
      for (int s = 0; s < 6; ++s) {
        const size_t i = next() % 4;
        const size_t j = next() % 4;
        if (i == j) continue;
        const R c = R(static_cast<int>(next() % 5)) - 2;
        for (size_t col = 0; col < 4; ++col) P(i, col) += c * P(j, col);
      }
      const QMatrix Pi = P.inverse();
      const QMatrix Q2 = Pi * Q * P;
      const QMatrix g2 = P.transpose() * g * P;
      CHECK(segre_type(Q2, g2).rendering == base);
    }
  }
}

TEST_CASE("real irrational pair is classified with exact isolating data") {
  // Q = diag-block: eigenvalues +-sqrt(2) on a neutral plane, 0 and 1 elsewhere
  QMatrix Q(4, 4);
  Q(0, 1) = R(2);
  Q(1, 0) = R(1); // char t^2 - 2 on the (1,2) block
  Q(2, 2) = R(0);
  Q(3, 3) = R(1);
  const QMatrix g = diag({R(1), R(2), R(1), R(-1)});
  // g-self-adjointness: gQ restricted to the plane is [[0,2],[2,0]], symmetric
  const SegreSymbol sym = segre_type(Q, g);
  CHECK(!sym.numeric_fallback);
  int irrational = 0, spacelike_irr = 0;
  for (const auto& b : sym.blocks)
    if (b.kind == SegreBlock::EigenKind::RealIrrational) {
      ++irrational;
      CHECK(b.size == 1);
      if (b.causal == Causal::Spacelike) ++spacelike_irr;
    }
  CHECK(irrational == 2);
  // the plane carries signature (2,0) in g restricted? g on span{e1,e2} is
  // diag(1,2): positive definite, so both irrational directions are spacelike
  CHECK(spacelike_irr == 2);
  CHECK(sym.rendering == "[111,1]");
}

TEST_CASE("numeric fallback for an irreducible cubic factor") {
  // symmetric integer matrix with irreducible cubic characteristic factor,
  // padded with a rational eigenvalue; g = identity keeps it self-adjoint
  QMatrix Q(4, 4);
  Q(0, 1) = Q(1, 0) = 1;
  Q(1, 2) = Q(2, 1) = 1;
  Q(2, 2) = 1;
  Q(3, 3) = 5;
  const SegreSymbol sym = segre_type(Q, QMatrix::identity(4));
  CHECK(sym.numeric_fallback);
  CHECK(sym.blocks.size() == 4);
  for (const auto& b : sym.blocks) CHECK(b.size == 1);
  // real symmetric operator with a definite metric: everything spacelike
  CHECK(sym.spacelike_count() == 4);
  CHECK(sym.rendering == "[1111]");
}

TEST_CASE("self-adjointness is a checked precondition") {
  const QMatrix g = diag({R(1), R(-1)});
  QMatrix Q(2, 2);
  Q(0, 1) = R(1); // gQ not symmetric
  CHECK_THROWS_AS(segre_type(Q, g), std::invalid_argument);
  CHECK_THROWS_AS(segre_type(QMatrix::identity(2), QMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("Einstein operators are fully grouped") {
  const QMatrix g = diag({R(1), R(1), R(1), R(-1)});
  const SegreSymbol sym = segre_type(QMatrix::identity(4) * R(-3), g);
  CHECK(is_degenerate(sym));
  int groups = 0;
  std::map<int, int> seen;
  for (const auto& b : sym.blocks) seen[b.group]++;
  groups = static_cast<int>(seen.size());
  CHECK(groups == 1);
  CHECK(sym.rendering == "[(111,1)]");
}
