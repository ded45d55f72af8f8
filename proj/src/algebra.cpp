#include "riccisol/algebra.hpp"

#include <sstream>

namespace riccisol {

MVector HomogeneousPair::bracket_m(size_t i, size_t j) const {
  const QVector& full = bracket[i][j];
  return MVector(full.begin() + static_cast<long>(r), full.end());
}

MVector HomogeneousPair::bracket_m_of_u(size_t i, size_t j) const { return bracket_m(r + i, r + j); }

Rational HomogeneousPair::inner(const MVector& x, const MVector& y) const {
  if (x.size() != n || y.size() != n) throw dimension_error("inner: m-vector of wrong dimension");
  Rational s(0);
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) s += x[i] * metric(i, j) * y[j];
  }
  return s;
}

std::string ValidationReport::summary() const {
  if (ok) return "valid";
  std::ostringstream os;
  for (size_t k = 0; k < violations.size(); ++k) {
    if (k) os << "; ";
    const auto& v = violations[k];
    os << v.kind << " at (";
    bool first = true;
    for (long idx : v.indices) {
      if (idx < 0) continue;
      if (!first) os << ",";
      os << idx;
      first = false;
    }
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
  }
  return os.str();
}

HomogeneousPair build_pair(const PairSpec& spec) {
  HomogeneousPair p;
  p.id = spec.id;
  p.name = spec.name.empty() ? spec.id : spec.name;
  p.r = spec.r;
  p.n = spec.n;
  p.params = spec.params;
  const size_t N = p.dim_g();
  p.bracket.assign(N, std::vector<QVector>(N, qvec_zero(N)));
  for (const auto& e : spec.brackets) {
    if (e.i < 1 || e.i > N || e.j < 1 || e.j > N)
      throw dimension_error("bracket entry index out of range");
    if (e.components.size() != N) throw dimension_error("bracket entry has wrong component count");
    const size_t i = e.i - 1, j = e.j - 1;
    p.bracket[i][j] = e.components;
    QVector neg = e.components;
    for (auto& x : neg) x = -x;
    p.bracket[j][i] = neg;
  }
  p.metric = QMatrix(p.n, p.n);
  for (const auto& [iu, ju, v] : spec.metric_entries) {
    if (iu < 1 || iu > p.n || ju < 1 || ju > p.n) throw dimension_error("metric entry index out of range");
    p.metric(iu - 1, ju - 1) = v;
    p.metric(ju - 1, iu - 1) = v;
  }
  ValidationReport rep = validate_pair(p);
  if (!rep.ok) throw validation_error("invalid homogeneous pair '" + p.id + "': " + rep.summary(), rep);
  return p;
}

ValidationReport validate_pair(const HomogeneousPair& pair) {
  ValidationReport rep;
  auto add = [&](const std::string& kind, long i, long j, long k, const std::string& detail) {
    rep.ok = false;
    rep.violations.push_back({kind, {i, j, k}, detail});
  };

  if (!pair.metric.is_symmetric()) add("metric-symmetry", -1, -1, -1, "metric is not symmetric");
  else if (pair.metric.det() == 0)
    add("metric-degenerate", -1, -1, -1, "det(g) = 0");

  if (pair.is_partial()) return rep; // bracket axioms unverifiable without h-components

  const size_t N = pair.dim_g();
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      const QVector neg = qvec_scale(Rational(-1), pair.bracket[j][i]);
      if (pair.bracket[i][j] != neg) {
        add("antisymmetry", static_cast<long>(i + 1), static_cast<long>(j + 1), -1, "");
        break;
      }
    }

  for (const auto& v : jacobi_check(pair))
    add("jacobi", static_cast<long>(v.triple[0] + 1), static_cast<long>(v.triple[1] + 1),
        static_cast<long>(v.triple[2] + 1), "residual " + to_string(v.residual));

  // h must close under the bracket
  for (size_t i = 0; i < pair.r; ++i)
    for (size_t j = i + 1; j < pair.r; ++j)
      if (!qvec_is_zero(pair.bracket_m(i, j)))
        add("h-subalgebra", static_cast<long>(i + 1), static_cast<long>(j + 1), -1,
            "[e_i, e_j] has a nonzero m-part");

  const auto inv = metric_invariance_check(pair);
  for (size_t j : inv.violating_j)
    add("metric-invariance", static_cast<long>(j + 1), -1, -1, "psi(e_j)^t g + g psi(e_j) != 0");

  return rep;
}

std::vector<JacobiViolation> jacobi_check(const HomogeneousPair& pair) {
  std::vector<JacobiViolation> out;
  if (pair.is_partial()) throw partial_pair_error("jacobi_check");
  const size_t N = pair.dim_g();
  auto bracket_of_vec = [&](const QVector& x, size_t k) {
    // [x, b_k] for a g-vector x
    QVector res = qvec_zero(N);
    for (size_t i = 0; i < N; ++i) {
      if (x[i] == 0) continue;
      res = qvec_add(res, qvec_scale(x[i], pair.bracket[i][k]));
    }
    return res;
  };
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j)
      for (size_t k = j + 1; k < N; ++k) {
        QVector res = bracket_of_vec(pair.bracket[i][j], k);
        res = qvec_add(res, bracket_of_vec(pair.bracket[j][k], i));
        res = qvec_add(res, bracket_of_vec(pair.bracket[k][i], j));
        if (!qvec_is_zero(res)) out.push_back({{i, j, k}, res});
      }
  return out;
}

QMatrix isotropy_matrix(const HomogeneousPair& pair, size_t j) {
  if (j >= pair.r)
    throw std::out_of_range(pair.r == 0 ? "isotropy_matrix: pair has no isotropy (r = 0)"
                                        : "isotropy_matrix: index out of range");
  if (pair.is_partial()) throw partial_pair_error("isotropy_matrix");
  QMatrix H(pair.n, pair.n);
  for (size_t i = 0; i < pair.n; ++i) H.set_col(i, pair.bracket_m(j, pair.r + i));
  return H;
}

InvarianceCheck metric_invariance_check(const HomogeneousPair& pair) {
  InvarianceCheck out;
  for (size_t j = 0; j < pair.r; ++j) {
    const QMatrix H = isotropy_matrix(pair, j);
    if (!(H.transpose() * pair.metric + pair.metric * H).is_zero()) {
      out.invariant = false;
      out.violating_j.push_back(j);
    }
  }
  return out;
}

bool is_invariant_field(const HomogeneousPair& pair, const MVector& X) {
  for (size_t j = 0; j < pair.r; ++j)
    if (!qvec_is_zero(isotropy_matrix(pair, j) * X)) return false;
  return true;
}

} // namespace riccisol
