#include "riccisol/acceptance.hpp"
#include "riccisol/engine.hpp"
#include "riccisol/segre.hpp"

#include <sstream>

namespace riccisol {

namespace {

using R = Rational;

struct CriterionBuilder {
  CriterionResult res;
  explicit CriterionBuilder(int n, std::string title) {
    res.number = n;
    res.title = std::move(title);
    res.pass = true;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      res.pass = false;
      res.failures.push_back(what);
    }
  }
  void warn(const std::string& what) { res.warns.push_back(what); }
};

std::string pstr(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ",";
    out += k + "=" + to_string(v);
  }
  return out;
}

Geometry geometry_at(const std::string& id, const Params& p) {
  return compute_geometry(instantiate(id, p));
}

// ---- criteria 1-4: printed Ricci tensors --------------------------------

void ricci_reproduction(CriterionBuilder& c, const std::string& id, const std::vector<Params>& samples) {
  const CatalogEntry& e = catalog_entry(id);
  for (const auto& p : samples) {
    const Params full = check_params(e, p);
    const Geometry geo = geometry_at(id, full);
    c.require(geo.rho == e.printed_rho(full), id + " at " + pstr(full) + ": Ricci differs from the print");
  }
}

std::vector<Params> alpha_eps_samples() {
  return {{{"alpha", R(1)}, {"eps", R(1)}}, {{"alpha", R(1)}, {"eps", R(-1)}}, {{"alpha", R(2)}, {"eps", R(1)}}};
}

// ---- criterion 13 oracle --------------------------------------------------

std::vector<std::vector<MVector>> christoffel(const HomogeneousPair& pair) {
  const size_t n = pair.n;
  const QMatrix ginv = pair.metric.inverse();
  std::vector<std::vector<MVector>> gamma(n, std::vector<MVector>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      MVector ui = qvec_zero(n), uj = qvec_zero(n);
      ui[i] = 1;
      uj[j] = 1;
      MVector w = qvec_zero(n);
      for (size_t k = 0; k < n; ++k) {
        MVector uk = qvec_zero(n);
        uk[k] = 1;
        // Koszul with invariant fields: 2 g(D_i u_j, u_k)
        w[k] = pair.inner(pair.bracket_m_of_u(i, j), uk) - pair.inner(pair.bracket_m_of_u(j, k), ui) +
               pair.inner(pair.bracket_m_of_u(k, i), uj);
      }
      gamma[i][j] = qvec_scale(R(1, 2), ginv * w);
    }
  return gamma;
}

} // namespace

QMatrix ricci_via_christoffel(const HomogeneousPair& pair) {
  if (pair.r != 0) throw std::invalid_argument("ricci_via_christoffel: Lie-group (r = 0) pairs only");
  const size_t n = pair.n;
  const auto gamma = christoffel(pair);
  auto nabla = [&](size_t i, const MVector& v) {
    MVector out = qvec_zero(n);
    for (size_t m = 0; m < n; ++m)
      if (v[m] != 0) out = qvec_add(out, qvec_scale(v[m], gamma[i][m]));
    return out;
  };
  auto curv = [&](size_t i, size_t j, size_t k) {
    MVector uk = qvec_zero(n);
    uk[k] = 1;
    MVector term = qvec_sub(nabla(i, nabla(j, uk)), nabla(j, nabla(i, uk)));
    const MVector br = pair.bracket_m_of_u(i, j);
    for (size_t m = 0; m < n; ++m)
      if (br[m] != 0) term = qvec_sub(term, qvec_scale(br[m], gamma[m][k]));
    return term;
  };
  QMatrix rho(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      R s(0);
      for (size_t k = 0; k < n; ++k)
        if (k != i) s += curv(k, i, j)[k];
      rho(i, j) = s;
    }
  return rho;
}

std::vector<HomogeneousPair> random_algebras(size_t count, unsigned seed) {
  // deterministic 64-bit LCG
  unsigned long long state = seed * 6364136223846793005ull + 1442695040888963407ull;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<unsigned>(state >> 33);
  };
  auto small_rat = [&]() {
    static const R vals[] = {R(1), R(-1), R(2), R(-2), R(1, 2), R(3), R(-1, 2), R(0)};
    return vals[next() % 8];
  };

  struct Base {
    size_t n;
    std::vector<std::tuple<size_t, size_t, std::map<size_t, R>>> brackets; // 1-based
  };
  const std::vector<Base> bases = {
      {3, {}},                                                                // abelian
      {3, {{1, 2, {{3, R(1)}}}}},                                             // heis3
      {3, {{1, 2, {{3, R(1)}}}, {2, 3, {{1, R(1)}}}, {3, 1, {{2, R(1)}}}}},   // su2
      {3, {{1, 2, {{2, R(2)}}}, {1, 3, {{3, R(-2)}}}, {2, 3, {{1, R(1)}}}}},  // sl2
      {3, {{1, 2, {{2, R(1)}}}, {1, 3, {{3, R(-1)}}}}},                       // e(1,1)
      {3, {{3, 1, {{2, R(1)}}}, {3, 2, {{1, R(-1)}}}}},                       // e(2)
      {4, {{1, 2, {{3, R(1)}}}}},                                             // heis3 + R
      {4, {{1, 2, {{3, R(1)}}}, {2, 3, {{1, R(1)}}}, {3, 1, {{2, R(1)}}}}},   // su2 + R
      {4, {{4, 1, {{1, R(1)}}}, {4, 2, {{2, R(1)}}}, {4, 3, {{3, R(1)}}}}},   // R ltimes R^3 (scaling)
      {4, {{4, 1, {{2, R(1)}}}, {4, 2, {{1, R(1)}}}, {1, 2, {{3, R(1)}}}}},   // boost-heisenberg mix
  };

  std::vector<HomogeneousPair> out;
  size_t attempt = 0;
  while (out.size() < count && attempt < count * 20) {
    ++attempt;
    const Base& base = bases[next() % bases.size()];
    const size_t n = base.n;
    // unimodular change of basis as a product of integer shears
    QMatrix P = QMatrix::identity(n);
    for (int s = 0; s < 6; ++s) {
      const size_t i = next() % n;
      size_t j = next() % n;
      if (i == j) continue;
      const R c = R(static_cast<int>(next() % 5)) - 2;
      for (size_t col = 0; col < n; ++col) P(i, col) += c * P(j, col);
    }
    const QMatrix Pinv = P.inverse();
    // brackets in the new basis: [x,y]_new = P^{-1} [P x, P y]
    auto bracket_old = [&](const QVector& x, const QVector& y) {
      QVector res = qvec_zero(n);
      auto add = [&](size_t bi, size_t bj, const std::map<size_t, R>& comps, const R& coeff) {
        (void)bi;
        (void)bj;
        for (const auto& [k, v] : comps) res[k - 1] += coeff * v;
      };
      for (const auto& [bi, bj, comps] : base.brackets) {
        const R cij = x[bi - 1] * y[bj - 1] - x[bj - 1] * y[bi - 1];
        if (cij != 0) add(bi, bj, comps, cij);
      }
      return res;
    };
    PairSpec spec;
    spec.id = "random-" + std::to_string(out.size());
    spec.r = 0;
    spec.n = n;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        const QVector br = Pinv * bracket_old(P.col(i), P.col(j));
        if (qvec_is_zero(br)) continue;
        PairSpec::BracketEntry e;
        e.i = i + 1;
        e.j = j + 1;
        e.components = br;
        spec.brackets.push_back(std::move(e));
      }
    // random nondegenerate metric: Q^t D Q for a shear Q and diagonal D
    QMatrix Q = QMatrix::identity(n);
    for (int s = 0; s < 4; ++s) {
      const size_t i = next() % n;
      size_t j = next() % n;
      if (i == j) continue;
      const R c = small_rat();
      for (size_t col = 0; col < n; ++col) Q(i, col) += c * Q(j, col);
    }
    QMatrix D(n, n);
    for (size_t i = 0; i < n; ++i) {
      R d = small_rat();
      if (d == 0) d = R(1);
      D(i, i) = d;
    }
    const QMatrix g = Q.transpose() * D * Q;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j)
        if (g(i, j) != 0) spec.metric_entries.emplace_back(i + 1, j + 1, g(i, j));
    try {
      out.push_back(build_pair(spec));
    } catch (const validation_error&) {
      // a degenerate random metric; try again
    }
  }
  if (out.size() < count) throw std::logic_error("random_algebras: generation failed");
  return out;
}

const std::vector<std::string>& segre_table_vocabulary() {
  static const std::vector<std::string> v = {
      // signature (2,2) table
      "[1,111\xcc\x84]", "[1,1\xcc\x84" "11\xcc\x84]", "[22]",
      "[(11),(11)]", "[(1|1,1|1)]", "[(11,1)1)]", "[1(1,11))]", "[(11,11)]",
      "[(1,1)11\xcc\x84]", "[(1,1\xcc\x84" "11\xcc\x84)]",
      "[(1,1)2]", "[1,(12)]", "[(1,12)]", "[(22)]",
      "[211\xcc\x84]", "[22\xcc\x84]", "[13]", "[1,3]", "[4]", "[(13)]", "[(1,3)]",
      // Lorentzian table
      "[11,11\xcc\x84]",
      "[(11),(1,1)]", "[1(11,1)]", "[(111)1)]", "[(111,1)]",
      "[(11),11\xcc\x84]",
      "[(11),2]", "[1(1,2)]", "[(11,2)]",
  };
  return v;
}

namespace {

// ---- criterion 5 ----------------------------------------------------------

void lambda_reproduction(CriterionBuilder& c, const std::string& id, const std::vector<Params>& samples) {
  const CatalogEntry& e = catalog_entry(id);
  for (const auto& raw : samples) {
    const Params p = check_params(e, raw);
    const Geometry geo = geometry_at(id, p);
    const LambdaFixture fix = e.printed_lambda(p);
    for (size_t op = 0; op < fix.printed.size(); ++op) {
      const QMatrix& computed = geo.L.of_u(op);
      for (size_t r = 0; r < 4; ++r)
        for (size_t col = 0; col < 4; ++col) {
          if (fix.is_masked(op, r, col)) continue;
          c.require(computed(r, col) == fix.printed[op](r, col),
                    id + " at " + pstr(p) + ": operator " + std::to_string(op + 1) + " entry (" +
                        std::to_string(r + 1) + "," + std::to_string(col + 1) + ") differs from the print");
        }
    }
    bool deviation_live = false; // deviations may degenerate at special samples
    for (const auto& d : fix.deviations) {
      c.require(geo.L.of_u(d.op)(d.row, d.col) == d.computed_value,
                id + ": recorded deviation value mismatch in operator " + std::to_string(d.op + 1));
      if (fix.printed[d.op](d.row, d.col) != d.computed_value) deviation_live = true;
    }
    if (deviation_live) {
      // certify the print is wrong: the printed operators must violate the
      // torsion identity the true connection satisfies
      const HomogeneousPair pair = instantiate(id, p);
      bool printed_breaks_torsion = false;
      for (size_t i = 0; i < 4 && !printed_breaks_torsion; ++i)
        for (size_t j = 0; j < 4; ++j)
          if (bracket_from_nomizu(fix.printed, i, j) != pair.bracket_m_of_u(i, j)) {
            printed_breaks_torsion = true;
            break;
          }
      c.require(printed_breaks_torsion, id + ": recorded deviation is not certified by a broken identity");
      c.warn(id + ": " + fix.deviation_note);
    }
  }
}

// ---- criterion 12 property helpers ---------------------------------------

void structural_identities(CriterionBuilder& c, const HomogeneousPair& pair, const std::string& label) {
  const size_t n = pair.n;
  c.require(jacobi_check(pair).empty(), label + ": Jacobi identity fails");
  c.require(metric_invariance_check(pair).invariant, label + ": metric invariance fails");
  const Geometry geo = compute_geometry(pair);
  for (size_t i = 0; i < geo.L.ops.size(); ++i)
    c.require((geo.L.ops[i].transpose() * pair.metric + pair.metric * geo.L.ops[i]).is_zero(),
              label + ": connection operator not metric-skew");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      c.require(qvec_sub(geo.L.of_u(i).col(j), geo.L.of_u(j).col(i)) == pair.bracket_m_of_u(i, j),
                label + ": torsion recovery fails");
  // first Bianchi + pair symmetry
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        MVector ei = qvec_zero(n), ej = qvec_zero(n), ek = qvec_zero(n);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        MVector sum = geo.R[i][j] * ek;
        sum = qvec_add(sum, geo.R[j][k] * ei);
        sum = qvec_add(sum, geo.R[k][i] * ej);
        c.require(qvec_is_zero(sum), label + ": first Bianchi fails");
      }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
          MVector ei = qvec_zero(n), ej = qvec_zero(n), ek = qvec_zero(n), el = qvec_zero(n);
          ei[i] = 1;
          ej[j] = 1;
          ek[k] = 1;
          el[l] = 1;
          c.require(pair.inner(geo.R[i][j] * ek, el) == pair.inner(geo.R[k][l] * ei, ej),
                    label + ": curvature pair symmetry fails");
        }
  c.require(geo.rho.is_symmetric(), label + ": Ricci tensor not symmetric");
  c.require(geo.tau == (pair.metric.inverse() * geo.rho).trace(), label + ": scalar curvature mismatch");
  c.require(char_poly(geo.Q).eval(geo.Q).is_zero(), label + ": Cayley-Hamilton fails on the Ricci operator");
  if (n >= 4) {
    const WeylTensor W = weyl(pair, geo.R, geo.rho, geo.tau);
    const QMatrix ginv = pair.metric.inverse();
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < n; ++l) {
        R tr(0);
        for (size_t i = 0; i < n; ++i)
          for (size_t k = 0; k < n; ++k) tr += ginv(i, k) * W.at(i, j, k, l);
        c.require(tr == 0, label + ": Weyl trace does not vanish");
      }
  }
  // metric scaling invariance (c.g leaves Lambda, R, rho unchanged; W scales)
  {
    HomogeneousPair scaled = pair;
    const R cscale(3, 2);
    scaled.metric = pair.metric * cscale;
    const Geometry geo2 = compute_geometry(scaled);
    bool lam_same = true;
    for (size_t i = 0; i < geo.L.ops.size(); ++i)
      if (geo.L.ops[i] != geo2.L.ops[i]) lam_same = false;
    c.require(lam_same, label + ": connection changed under metric scaling");
    c.require(geo.rho == geo2.rho, label + ": Ricci tensor changed under metric scaling");
    if (n >= 4) {
      const WeylTensor W1 = weyl(pair, geo.R, geo.rho, geo.tau);
      const WeylTensor W2 = weyl(scaled, geo2.R, geo2.rho, geo2.tau);
      bool scaled_ok = true;
      for (size_t idx = 0; idx < W1.w.size(); ++idx)
        if (W2.w[idx] != cscale * W1.w[idx]) scaled_ok = false;
      c.require(scaled_ok, label + ": Weyl tensor does not scale linearly with the metric");
    }
  }
  // Einstein pairs admit the trivial (0, c) solution
  {
    bool einstein = true;
    R cval(0);
    bool cset = false;
    for (size_t i = 0; i < n && einstein; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (pair.metric(i, j) != 0) {
          const R ratio = geo.rho(i, j) / pair.metric(i, j);
          if (!cset) {
            cval = ratio;
            cset = true;
          } else if (ratio != cval)
            einstein = false;
        } else if (geo.rho(i, j) != 0)
          einstein = false;
      }
    if (einstein && cset) {
      const SolitonSystem sys = assemble_system(pair, geo.rho);
      QVector point = qvec_zero(n + 1);
      point[n] = cval;
      c.require(sys.satisfied_by(point), label + ": Einstein pair does not admit the (0, c) solution");
      const SolitonSolution sol = solve(sys);
      c.require(sol.consistent && sol.einstein, label + ": Einstein flag not set for an Einstein pair");
    }
  }
}

HomogeneousPair so2_rotation_pair() {
  // one-dimensional isotropy rotating the (u1, u2) plane
  PairSpec s;
  s.id = "so2-toy";
  s.r = 1;
  s.n = 4;
  PairSpec::BracketEntry e1;
  e1.i = 1;
  e1.j = 2; // [e1, u1] = u2
  e1.components = qvec_zero(5);
  e1.components[2] = R(1);
  s.brackets.push_back(e1);
  PairSpec::BracketEntry e2;
  e2.i = 1;
  e2.j = 3; // [e1, u2] = -u1
  e2.components = qvec_zero(5);
  e2.components[1] = R(-1);
  s.brackets.push_back(e2);
  for (size_t i = 1; i <= 4; ++i) s.metric_entries.emplace_back(i, i, i == 4 ? R(-1) : R(1));
  return build_pair(s);
}

} // namespace

std::vector<CriterionResult> run_acceptance(bool parallel) {
  (void)parallel;
  std::vector<CriterionResult> out;

  {
    CriterionBuilder c(1, "printed Ricci tensors of the neutral nondegenerate families");
    ricci_reproduction(c, "thm3.1-i", alpha_eps_samples());
    ricci_reproduction(c, "thm3.1-ii", alpha_eps_samples());
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(2, "printed Ricci tensors of the Lorentzian nondegenerate families");
    ricci_reproduction(c, "thm3.2-i", alpha_eps_samples());
    ricci_reproduction(c, "thm3.2-ii", alpha_eps_samples());
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(3, "parameter-free printed Ricci tensor of the steady-soliton family");
    std::vector<Params> samples;
    for (const R& k1 : {R(1), R(1, 2), R(-2)})
      for (const auto& [k2, k3] : std::vector<std::pair<R, R>>{{R(0), R(0)}, {R(1), R(1)}})
        samples.push_back({{"k1", k1}, {"k2", k2}, {"k3", k3}});
    ricci_reproduction(c, "thm4.2-[1,(12)]", samples);
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(4, "printed Ricci tensor of the [(22)] family");
    ricci_reproduction(c, "thm4.1-(22)", {{{"k1", R(1)}}, {{"k1", R(1, 2)}}});
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(5, "printed connection operators reproduced (deviations certified)");
    lambda_reproduction(c, "thm3.1-ii", alpha_eps_samples());
    lambda_reproduction(c, "thm4.1-(22)", {{{"k1", R(1)}}, {{"k1", R(1, 2)}}});
    lambda_reproduction(c, "thm4.2-[1,(12)]",
                        {{{"k1", R(1)}, {"k2", R(0)}, {"k3", R(0)}}, {{"k1", R(1, 2)}, {"k2", R(1)}, {"k3", R(1)}}});
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(6, "no soliton on the neutral nondegenerate family (certified inconsistency)");
    const CatalogEntry& e = catalog_entry("thm3.1-ii");
    for (const auto& raw : default_samples(e, 8)) {
      const Params p = check_params(e, raw);
      const HomogeneousPair pair = instantiate("thm3.1-ii", p);
      const Geometry geo = compute_geometry(pair);
      const SolitonSystem sys = assemble_system(pair, geo.rho);
      const SolitonSolution sol = solve(sys);
      c.require(!sol.consistent, "system unexpectedly consistent at " + pstr(p));
      if (!sol.consistent) {
        QVector b = sys.constants;
        for (auto& x : b) x = -x;
        c.require(certificate_valid(sys.coeffs, b, sol.certificate), "certificate invalid at " + pstr(p));
        c.require(sol.certificate.row_coeffs.size() > 3 && sol.certificate.row_coeffs[3] != 0,
                  "certificate does not involve the metric-pair (1,4) row at " + pstr(p));
      }
    }
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(7, "no soliton on the [(22)] family; fixture and assembled systems agree");
    for (const R& k1 : {R(1), R(1, 2)}) {
      const Params p{{"k1", k1}};
      const HomogeneousPair pair = instantiate("thm4.1-(22)", p);
      const Geometry geo = compute_geometry(pair);
      const SolitonSystem sys = assemble_system(pair, geo.rho);
      const SolitonSolution sol = solve(sys);
      const SolitonSystem fix = load_fixture_system("thm4.1-(22)", p);
      const SolitonSolution fsol = solve(fix);
      c.require(!sol.consistent, "assembled system consistent at k1=" + to_string(k1));
      c.require(!fsol.consistent, "fixture system consistent at k1=" + to_string(k1));
      if (!sol.consistent && !fsol.consistent) {
        QVector b = fix.constants;
        for (auto& x : b) x = -x;
        c.require(certificate_valid(fix.coeffs, b, fsol.certificate),
                  "fixture certificate invalid at k1=" + to_string(k1));
        c.require(fsol.certificate.combined_rhs != 0, "certificate does not scale to 1 = 0");
      }
    }
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(8, "unique steady soliton of the solvable family");
    for (const R& k1 : {R(1), R(1, 2), R(-2), R(3)})
      for (const auto& [k2, k3] : std::vector<std::pair<R, R>>{{R(0), R(0)}, {R(1), R(1)}}) {
        const Params p{{"k1", k1}, {"k2", k2}, {"k3", k3}};
        const HomogeneousPair pair = instantiate("thm4.2-[1,(12)]", p);
        const Geometry geo = compute_geometry(pair);
        const SolitonSystem sys = assemble_system(pair, geo.rho);
        const SolitonSolution sol = solve(sys);
        const R t = k1 / (1 + 2 * k1 * k1);
        const QVector expect{R(0), t, t, R(0), R(0)};
        c.require(sol.consistent && sol.nullspace.empty(), "solution not unique at " + pstr(p));
        if (sol.consistent && sol.nullspace.empty()) {
          c.require(sol.particular == expect, "solution mismatch at " + pstr(p));
          c.require(classify(sol, sol.particular) == SolitonClass::Steady, "not steady at " + pstr(p));
          c.require(!sol.einstein, "unexpected Einstein case at " + pstr(p));
        }
        const SolitonSolution fsol = solve(load_fixture_system("thm4.2-[1,(12)]", p));
        c.require(fsol.consistent && fsol.nullspace.empty() && fsol.particular == expect,
                  "fixture solution set differs at " + pstr(p));
      }
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(9, "printed system of the isotropy case solves into the documented subspace");
    for (const auto& [av, lv] : std::vector<std::pair<R, R>>{{R(1), R(2)}, {R(2), R(1)}}) {
      for (const auto& [bv, cv] : std::vector<std::pair<R, R>>{{R(1), R(1)}, {R(2), R(-1)}}) {
        const Params p{{"a", av}, {"lambda", lv}, {"b", bv}, {"c", cv}};
        const SolitonSystem sys = load_fixture_system("case-1.3.1:5", p);
        const SolitonSolution sol = solve(sys);
        const R x2 = -(lv * lv + 4) / (4 * av * lv);
        const QVector expect{R(0), x2, R(0), R(0), R(0)};
        c.require(sol.consistent && sol.nullspace.empty(), "no unique solution at " + pstr(p));
        if (sol.consistent && sol.nullspace.empty()) {
          c.require(sol.particular == expect, "solution mismatch at " + pstr(p));
          c.require(sys.satisfied_by(sol.particular), "printed quadratic row violated at " + pstr(p));
          // the x part lies in span{u2}
          c.require(sol.particular[0] == 0 && sol.particular[2] == 0 && sol.particular[3] == 0,
                    "solution leaves the documented invariance subspace at " + pstr(p));
        }
      }
    }
    c.warn("case-1.3.1:5: the paper prints x2 = +(lambda^2+4)/(4 a lambda); back-substitution of its own "
           "system forces the minus sign");
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(10, "Weyl tensor vanishes on every full catalog family at every sample");
    for (const auto& e : catalog()) {
      if (e.kind != CatalogEntry::Kind::Full) continue;
      for (const auto& raw : default_samples(e, 16)) {
        const Params p = check_params(e, raw);
        const HomogeneousPair pair = instantiate(e.id, p);
        const Geometry geo = compute_geometry(pair);
        c.require(weyl(pair, geo.R, geo.rho, geo.tau).is_zero(),
                  e.id + " at " + pstr(p) + ": Weyl tensor does not vanish");
      }
    }
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(11, "Segre classifications and symbol round-trips");
    for (const char* id : {"thm3.1-i", "thm3.1-ii"}) {
      const CatalogEntry& e = catalog_entry(id);
      for (const auto& raw : default_samples(e, 4)) {
        const Params p = check_params(e, raw);
        const Geometry geo = geometry_at(id, p);
        const HomogeneousPair pair = instantiate(id, p);
        c.require(segre_type(geo.Q, pair.metric).rendering == e.expected_segre,
                  std::string(id) + " at " + pstr(p) + ": Segre type mismatch");
      }
    }
    for (const char* id : {"thm3.2-i", "thm3.2-ii"}) {
      const CatalogEntry& e = catalog_entry(id);
      for (const auto& raw : default_samples(e, 4)) {
        const Params p = check_params(e, raw);
        const Geometry geo = geometry_at(id, p);
        const HomogeneousPair pair = instantiate(id, p);
        c.require(segre_type(geo.Q, pair.metric).rendering == e.expected_segre,
                  std::string(id) + " at " + pstr(p) + ": Segre type mismatch");
      }
    }
    for (const R& k1 : {R(1), R(1, 2)}) {
      const Params p{{"k1", k1}, {"k2", R(0)}, {"k3", R(0)}};
      const Geometry geo = geometry_at("thm4.2-[1,(12)]", p);
      c.require(minimal_poly(geo.Q).str() == "t^2",
                "steady-family Ricci operator is not two-step nilpotent at k1=" + to_string(k1));
    }
    for (const auto& s : segre_table_vocabulary())
      c.require(render_segre(parse_segre(s)) == s, "symbol does not round-trip: " + s);
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(12, "structural identity suite (catalog families and randomized algebras)");
    for (const auto& e : catalog()) {
      if (e.kind != CatalogEntry::Kind::Full) continue;
      for (const auto& raw : default_samples(e, 6)) {
        const Params p = check_params(e, raw);
        structural_identities(c, instantiate(e.id, p), e.id + " at " + pstr(p));
        if (!c.res.pass) break;
      }
      if (!c.res.pass) break;
    }
    if (c.res.pass) structural_identities(c, so2_rotation_pair(), "so2-toy");
    if (c.res.pass) {
      const auto algebras = random_algebras(50, 20240907u);
      for (size_t i = 0; i < algebras.size(); ++i) {
        structural_identities(c, algebras[i], "random algebra " + std::to_string(i));
        if (!c.res.pass) break;
      }
    }
    out.push_back(std::move(c.res));
  }
  {
    CriterionBuilder c(13, "Ricci tensor agrees with the independent Christoffel-symbol implementation");
    for (const auto& e : catalog()) {
      if (e.kind != CatalogEntry::Kind::Full) continue;
      for (const auto& raw : default_samples(e, 6)) {
        const Params p = check_params(e, raw);
        const HomogeneousPair pair = instantiate(e.id, p);
        if (pair.r != 0) continue;
        const Geometry geo = compute_geometry(pair);
        c.require(geo.rho == ricci_via_christoffel(pair), e.id + " at " + pstr(p) + ": the two Ricci routes differ");
      }
    }
    out.push_back(std::move(c.res));
  }

  return out;
}

} // namespace riccisol
