#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riccisol/catalog.hpp"
#include "riccisol/report.hpp"
#include "riccisol/geometry.hpp"

using namespace riccisol;
using R = Rational;

TEST_CASE("catalog entries resolve by id") {
  CHECK(catalog_has("thm4.2-[1,(12)]"));
  CHECK(!catalog_has("thm9.9"));
  CHECK_THROWS_AS(catalog_entry("thm9.9"), unknown_id_error);
  CHECK(catalog().size() >= 8);
}

TEST_CASE("out-of-domain parameters are rejected with the constraint") {
  CHECK_THROWS_AS(instantiate("thm3.1-i", {{"alpha", R(0)}, {"eps", R(1)}}), param_domain_error);
  CHECK_THROWS_AS(instantiate("thm3.1-i", {{"alpha", R(1)}, {"eps", R(2)}}), param_domain_error);
  CHECK_THROWS_AS(instantiate("thm4.1-(22)", {{"k1", R(0)}}), param_domain_error);
  CHECK_THROWS_AS(instantiate("thm4.2-[1,(12)]", {{"zeta", R(1)}}), param_domain_error);
  try {
    instantiate("thm3.1-i", {{"alpha", R(0)}});
  } catch (const param_domain_error& e) {
    CHECK(std::string(e.what()).find("alpha != 0") != std::string::npos);
  }
}

TEST_CASE("instantiation produces validated pairs") {
  const HomogeneousPair p = instantiate("thm4.2-[1,(12)]", {{"k1", R(1)}, {"k2", R(0)}, {"k3", R(0)}});
  CHECK(p.r == 0);
  CHECK(p.n == 4);
  CHECK(validate_pair(p).ok);
  // the five printed bracket relations, nothing else
  size_t nonzero = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (!qvec_is_zero(p.bracket[i][j])) ++nonzero;
  CHECK(nonzero == 5);
  CHECK(p.bracket_m_of_u(1, 2) == MVector{R(0), R(3, 2), R(3, 2), R(0)});
  const HomogeneousPair flat = instantiate("abelian-flat", {});
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(qvec_is_zero(flat.bracket[i][j]));
}

TEST_CASE("metric resolution picks the printed-fixture-compatible assignment") {
  {
    const MetricResolution res = resolve_metric("thm3.1-ii");
    CHECK(res.searched);
    QMatrix expect(4, 4);
    expect(0, 0) = 1;
    expect(1, 1) = 1;
    expect(2, 2) = -1;
    expect(3, 3) = -1;
    CHECK(res.metric == expect);
    // the connection fixture disambiguates fully
    CHECK(res.survivors.size() == 1);
  }
  {
    const MetricResolution res = resolve_metric("thm4.1-(22)");
    QMatrix expect(4, 4);
    expect(0, 0) = 1;
    expect(1, 1) = 1;
    expect(2, 2) = -1;
    expect(3, 3) = -1;
    CHECK(res.metric == expect);
    CHECK(res.survivors.size() == 1);
  }
  {
    // no printed connection for these, and the bracket family has an
    // isometric presentation swapping two axes: two candidates survive and
    // the first canonical one is selected
    const MetricResolution res = resolve_metric("thm3.1-i");
    CHECK(res.ambiguous());
    QMatrix expect(4, 4);
    expect(0, 0) = 1;
    expect(1, 1) = 1;
    expect(2, 2) = -1;
    expect(3, 3) = -1;
    CHECK(res.metric == expect);
  }
  {
    const MetricResolution res = resolve_metric("thm3.2-i");
    QMatrix expect(4, 4);
    expect(0, 0) = 1;
    expect(1, 1) = 1;
    expect(2, 2) = 1;
    expect(3, 3) = -1;
    CHECK(res.metric == expect);
  }
  {
    // the table metric is explicit: no search
    const MetricResolution res = resolve_metric("case-1.3.1:5");
    CHECK(!res.searched);
    CHECK(res.metric(0, 3) == R(-1)); // -a at the defaults
  }
}

TEST_CASE("candidate metric enumeration is canonical and signature-correct") {
  for (const auto sig : {CatalogEntry::Signature::Neutral, CatalogEntry::Signature::Lorentzian}) {
    const auto cands = metric_candidates(sig);
    CHECK(!cands.empty());
    for (const auto& g : cands) {
      CHECK(g.is_symmetric());
      CHECK(g.det() != 0);
      // first nonzero entry is +1 (one representative per +-G class)
      bool found = false;
      for (size_t i = 0; i < 4 && !found; ++i)
        for (size_t j = 0; j < 4; ++j)
          if (g(i, j) != 0) {
            CHECK(g(i, j) == R(1));
            found = true;
            break;
          }
    }
    // no duplicates
    for (size_t a = 0; a < cands.size(); ++a)
      for (size_t b = a + 1; b < cands.size(); ++b) CHECK(!(cands[a] == cands[b]));
  }
}

TEST_CASE("default samples respect the domains") {
  const CatalogEntry& e = catalog_entry("thm3.1-i");
  for (const auto& p : default_samples(e, 16)) {
    CHECK(p.at("alpha") != 0);
    CHECK((p.at("eps") == 1 || p.at("eps") == -1));
  }
  const CatalogEntry& e42 = catalog_entry("thm4.2-[1,(12)]");
  CHECK(default_samples(e42, 16).size() == 16);
}

TEST_CASE("metadata rows are present and refuse instantiation") {
  size_t metadata_rows = 0;
  for (const auto& e : catalog())
    if (e.kind == CatalogEntry::Kind::MetadataOnly) {
      ++metadata_rows;
      REQUIRE(e.metadata.has_value());
      CHECK(!e.metadata->table.empty());
      CHECK(!e.metadata->metric_expr.empty());
      CHECK(!e.metadata->soliton_field.empty());
      CHECK(!e.metadata->sigma.empty());
      CHECK(!e.metadata->invariant.empty());
      CHECK_THROWS_AS(instantiate(e.id, {}), std::invalid_argument);
    }
  // tables 3, 4 and 5 contribute 4 + 12 + 6 rows; the mu = 0 row of the
  // verified case lives as the full entry instead
  CHECK(metadata_rows == 22);
  CHECK(catalog_has("table3:1.3^1:5"));
  CHECK(catalog_has("table5:3.3^2:1"));
}

TEST_CASE("every entry verifies cleanly across its default sample grid") {
  for (const auto& e : catalog()) {
    if (e.kind == CatalogEntry::Kind::MetadataOnly) continue;
    const auto samples = default_samples(e, 8);
    CHECK(samples.size() >= std::min<size_t>(e.params.empty() ? 1 : 3, 8));
    for (const auto& p : samples) {
      const Report rep = verify_entry(e.id, p);
      CHECK_MESSAGE(rep.passed(), e.id, " failed verification");
      if (e.printed_rho) CHECK(rep.stage("ricci")->status == Status::Pass);
    }
  }
}

TEST_CASE("fixture expectations are wired to the right entries") {
  CHECK(catalog_entry("thm3.1-ii").fixture_system_id == "thm3.3-(ii)");
  CHECK(catalog_entry("thm4.1-(22)").fixture_system_id == "thm4.1-(22)");
  CHECK(catalog_entry("thm4.2-[1,(12)]").fixture_system_id == "thm4.2-[1,(12)]");
  CHECK(catalog_entry("case-1.3.1:5").fixture_system_id == "case-1.3.1:5");
  CHECK(!catalog_entry("thm3.1-i").printed_lambda);
  CHECK(catalog_entry("thm3.1-ii").printed_lambda);
  CHECK(catalog_entry("thm4.2-[1,(12)]").soliton->warn_note.empty());
  CHECK(!catalog_entry("case-1.3.1:5").soliton->warn_note.empty());
}
