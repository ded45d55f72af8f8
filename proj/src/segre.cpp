#include "riccisol/segre.hpp"
#include "riccisol/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace riccisol {

const char* const kBarMark = "\xcc\x84"; // U+0304 combining macron

namespace {

std::vector<QVector> null_basis(const QMatrix& M) {
  auto s = rref_solve(M, qvec_zero(M.rows()));
  return std::get<SolutionSet>(s).nullspace;
}

Rational inner_g(const QMatrix& g, const QVector& x, const QVector& y) {
  Rational s(0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
  }
  return s;
}

// signature (positive count, negative count) of a symmetric matrix by
// exact congruence diagonalization
std::pair<int, int> signature_of(QMatrix S) {
  const size_t d = S.rows();
  std::vector<bool> done(d, false);
  int pos = 0, neg = 0;
  for (size_t step = 0; step < d; ++step) {
    long piv = -1;
    for (size_t i = 0; i < d; ++i)
      if (!done[i] && S(i, i) != 0) {
        piv = static_cast<long>(i);
        break;
      }
    if (piv < 0) {
      // all remaining diagonal entries vanish; pull a hyperbolic pair onto
      // the diagonal with a congruence row+col addition
      long a = -1, b = -1;
      for (size_t i = 0; i < d && a < 0; ++i)
        if (!done[i])
          for (size_t j = i + 1; j < d; ++j)
            if (!done[j] && S(i, j) != 0) {
              a = static_cast<long>(i);
              b = static_cast<long>(j);
              break;
            }
      if (a < 0) break; // remaining block is zero
      for (size_t k = 0; k < d; ++k) S(a, k) += S(b, k);
      for (size_t k = 0; k < d; ++k) S(k, a) += S(k, b);
      piv = a;
    }
    const size_t p = static_cast<size_t>(piv);
    if (S(p, p) > 0) ++pos;
    else ++neg;
    for (size_t i = 0; i < d; ++i) {
      if (done[i] || i == p || S(i, p) == 0) continue;
      const Rational f = S(i, p) / S(p, p);
      for (size_t k = 0; k < d; ++k) S(i, k) -= f * S(p, k);
      for (size_t k = 0; k < d; ++k) S(k, i) -= f * S(k, p);
    }
    done[p] = true;
  }
  return {pos, neg};
}

// ---- arithmetic in K = Q[t]/(t^2 + c1 t + c0) for irrational quadratics

struct QF {
  Rational a, b; // a + b t
};

struct QField {
  Rational c1, c0; // t^2 = -c1 t - c0
  QF add(const QF& x, const QF& y) const { return {x.a + y.a, x.b + y.b}; }
  QF sub(const QF& x, const QF& y) const { return {x.a - y.a, x.b - y.b}; }
  QF mul(const QF& x, const QF& y) const {
    // (a + bt)(c + dt) = ac + (ad+bc) t + bd t^2
    const Rational t2a = -c0, t2b = -c1;
    return {x.a * y.a + x.b * y.b * t2a, x.a * y.b + x.b * y.a + x.b * y.b * t2b};
  }
  bool is_zero(const QF& x) const { return x.a == 0 && x.b == 0; }
  QF inv(const QF& x) const {
    // solve (a + bt)(p + qt) = 1
    // a p + (-c0 b) q = 1 ; b p + (a - c1 b) q = 0
    const Rational det = x.a * (x.a - c1 * x.b) + c0 * x.b * x.b;
    return {(x.a - c1 * x.b) / det, -x.b / det};
  }
};

// sign of a + b*lambda where lambda is the root of f isolated by iv
int sign_at_root(const QField& K, const Poly& f, IsolatingInterval iv, const QF& v) {
  (void)K;
  if (v.b == 0) return v.a.sign();
  Poly lin({v.a, v.b});
  while (true) {
    const int slo = lin.eval(iv.lo).sign(), shi = lin.eval(iv.hi).sign();
    if (slo == shi && slo != 0) return slo;
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (count_real_roots(f, iv.lo, mid) == 1) iv.hi = mid;
    else iv.lo = mid;
  }
}

// kernel of (Q - t I) over K, returned as K-vectors
std::vector<std::vector<QF>> kernel_over_field(const QField& K, const QMatrix& Q) {
  const size_t n = Q.rows();
  std::vector<std::vector<QF>> M(n, std::vector<QF>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) M[i][j] = {Q(i, j), i == j ? Rational(-1) : Rational(0)};
  // Gaussian elimination over K
  std::vector<long> pivot_of_col(n, -1);
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < n; ++c) {
    size_t p = rank;
    while (p < n && K.is_zero(M[p][c])) ++p;
    if (p == n) continue;
    std::swap(M[p], M[rank]);
    const QF inv = K.inv(M[rank][c]);
    for (size_t j = 0; j < n; ++j) M[rank][j] = K.mul(M[rank][j], inv);
    for (size_t i = 0; i < n; ++i) {
      if (i == rank || K.is_zero(M[i][c])) continue;
      const QF f = M[i][c];
      for (size_t j = 0; j < n; ++j) M[i][j] = K.sub(M[i][j], K.mul(f, M[rank][j]));
    }
    pivot_of_col[c] = static_cast<long>(rank);
    ++rank;
  }
  std::vector<std::vector<QF>> basis;
  for (size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<QF> v(n, QF{Rational(0), Rational(0)});
    v[c] = {Rational(1), Rational(0)};
    for (size_t cc = 0; cc < n; ++cc)
      if (pivot_of_col[cc] >= 0) {
        const QF& entry = M[static_cast<size_t>(pivot_of_col[cc])][c];
        v[cc] = {-entry.a, -entry.b};
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

// exact signature of g restricted to the lambda-eigenspace, evaluated at
// the isolated root: congruence diagonalization over K, then root signs
std::pair<int, int> eigenspace_signature_at_root(const QMatrix& Q, const QMatrix& g, const Poly& f,
                                                 const IsolatingInterval& iv) {
  QField K{f.coeff(1), f.coeff(0)};
  auto basis = kernel_over_field(K, Q);
  const size_t d = basis.size();
  std::vector<std::vector<QF>> S(d, std::vector<QF>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      QF s{Rational(0), Rational(0)};
      for (size_t p = 0; p < Q.rows(); ++p)
        for (size_t q = 0; q < Q.rows(); ++q) {
          if (g(p, q) == 0) continue;
          s = K.add(s, K.mul(K.mul(basis[i][p], basis[j][q]), QF{g(p, q), Rational(0)}));
        }
      S[i][j] = s;
    }
  // diagonalize over K
  std::vector<bool> done(d, false);
  int pos = 0, neg = 0;
  for (size_t step = 0; step < d; ++step) {
    long piv = -1;
    for (size_t i = 0; i < d; ++i)
      if (!done[i] && !K.is_zero(S[i][i])) {
        piv = static_cast<long>(i);
        break;
      }
    if (piv < 0) {
      long a = -1, b = -1;
      for (size_t i = 0; i < d && a < 0; ++i)
        if (!done[i])
          for (size_t j = i + 1; j < d; ++j)
            if (!done[j] && !K.is_zero(S[i][j])) {
              a = static_cast<long>(i);
              b = static_cast<long>(j);
              break;
            }
      if (a < 0) break;
      for (size_t k = 0; k < d; ++k) S[a][k] = K.add(S[a][k], S[b][k]);
      for (size_t k = 0; k < d; ++k) S[k][a] = K.add(S[k][a], S[k][b]);
      piv = a;
    }
    const size_t p = static_cast<size_t>(piv);
    const int s = sign_at_root(K, f, iv, S[p][p]);
    if (s > 0) ++pos;
    else ++neg;
    const QF pivinv = K.inv(S[p][p]);
    for (size_t i = 0; i < d; ++i) {
      if (done[i] || i == p || K.is_zero(S[i][p])) continue;
      const QF fct = K.mul(S[i][p], pivinv);
      for (size_t k = 0; k < d; ++k) S[i][k] = K.sub(S[i][k], K.mul(fct, S[p][k]));
      for (size_t k = 0; k < d; ++k) S[k][i] = K.sub(S[k][i], K.mul(fct, S[k][p]));
    }
    done[p] = true;
  }
  return {pos, neg};
}

// block sizes (largest first) from the rank sequence of powers of N,
// counted in units of deg(f)
std::vector<int> block_sizes(const QMatrix& N, int multiplicity, int unit) {
  std::vector<size_t> ranks{N.cols()}; // rank of N^0
  QMatrix P = QMatrix::identity(N.rows());
  for (int k = 1; k <= multiplicity + 1; ++k) {
    P = P * N;
    ranks.push_back(P.rank());
    if (ranks[k] == ranks[k - 1]) break;
  }
  std::vector<int> sizes;
  for (size_t k = 1; k + 1 <= ranks.size(); ++k) {
    const long ge_k = static_cast<long>(ranks[k - 1]) - static_cast<long>(ranks[k]);
    const long ge_k1 = k + 1 < ranks.size() ? static_cast<long>(ranks[k]) - static_cast<long>(ranks[k + 1]) : 0;
    const long exactly_k = (ge_k - ge_k1) / unit;
    for (long c = 0; c < exactly_k; ++c) sizes.push_back(static_cast<int>(k));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::vector<QVector> orthocomplement_within(const QMatrix& g, const std::vector<QVector>& W,
                                            const std::vector<QVector>& against) {
  if (W.empty() || against.empty()) return W;
  QMatrix A(against.size(), W.size());
  for (size_t r = 0; r < against.size(); ++r)
    for (size_t c = 0; c < W.size(); ++c) A(r, c) = inner_g(g, against[r], W[c]);
  auto t = std::get<SolutionSet>(rref_solve(A, qvec_zero(against.size())));
  std::vector<QVector> out;
  for (const auto& tv : t.nullspace) {
    QVector v = qvec_zero(W[0].size());
    for (size_t c = 0; c < W.size(); ++c) v = qvec_add(v, qvec_scale(tv[c], W[c]));
    out.push_back(std::move(v));
  }
  return out;
}

// deterministic hunt for a chain generator whose chain span is
// g-nondegenerate: basis vectors first, then pairwise combinations
std::vector<QVector> find_chain(const QMatrix& g, const QMatrix& N, const std::vector<QVector>& W, int s) {
  auto chain_of = [&](const QVector& v) {
    std::vector<QVector> chain{v};
    for (int k = 1; k < s; ++k) chain.push_back(N * chain.back());
    return chain;
  };
  auto usable = [&](const QVector& v) -> bool {
    auto chain = chain_of(v);
    if (qvec_is_zero(chain.back())) return false;
    QMatrix gram(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) gram(static_cast<size_t>(i), static_cast<size_t>(j)) = inner_g(g, chain[i], chain[j]);
    return gram.det() != 0;
  };
  std::vector<QVector> candidates = W;
  for (size_t i = 0; i < W.size(); ++i)
    for (size_t j = 0; j < W.size(); ++j) {
      if (i == j) continue;
      candidates.push_back(qvec_add(W[i], W[j]));
      candidates.push_back(qvec_add(W[i], qvec_scale(Rational(2), W[j])));
      candidates.push_back(qvec_add(W[i], qvec_scale(Rational(-1), W[j])));
    }
  for (const auto& v : candidates)
    if (usable(v)) return chain_of(v);
  throw std::logic_error("segre_type: no nondegenerate chain representative found");
}

// 64-bit kernel direction of Q - lambda I, for the numeric fallback only
std::vector<double> numeric_kernel_vec(const QMatrix& Q, double lambda) {
  const size_t n = Q.rows();
  std::vector<std::vector<double>> M(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      M[i][j] = static_cast<double>(numerator(Q(i, j))) / static_cast<double>(denominator(Q(i, j)));
      if (i == j) M[i][j] -= lambda;
    }
  std::vector<long> pivot_of_col(n, -1);
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < n; ++c) {
    size_t best = rank;
    for (size_t i = rank; i < n; ++i)
      if (std::fabs(M[i][c]) > std::fabs(M[best][c])) best = i;
    if (std::fabs(M[best][c]) < 1e-7) continue;
    std::swap(M[best], M[rank]);
    const double piv = M[rank][c];
    for (size_t j = 0; j < n; ++j) M[rank][j] /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == rank) continue;
      const double f = M[i][c];
      for (size_t j = 0; j < n; ++j) M[i][j] -= f * M[rank][j];
    }
    pivot_of_col[c] = static_cast<long>(rank);
    ++rank;
  }
  std::vector<double> v(n, 0.0);
  for (size_t c = 0; c < n; ++c)
    if (pivot_of_col[c] < 0) {
      v[c] = 1.0;
      for (size_t cc = 0; cc < n; ++cc)
        if (pivot_of_col[cc] >= 0) v[cc] = -M[static_cast<size_t>(pivot_of_col[cc])][c];
      break;
    }
  return v;
}

} // namespace

int SegreSymbol::spacelike_count() const {
  int c = 0;
  for (const auto& b : blocks)
    if (b.causal == Causal::Spacelike) ++c;
  return c;
}

bool is_degenerate(const SegreSymbol& sym) {
  std::map<int, int> per_group;
  for (const auto& b : sym.blocks) ++per_group[b.group];
  for (const auto& [gq, c] : per_group)
    if (c > 1) return true;
  return false;
}

SegreSymbol segre_type(const QMatrix& Q, const QMatrix& g) {
  if (Q.rows() != Q.cols() || g.rows() != g.cols() || Q.rows() != g.rows())
    throw std::invalid_argument("segre_type: Q and g must be square of equal size");
  if (!g.is_symmetric() || g.det() == 0) throw std::invalid_argument("segre_type: g must be symmetric nondegenerate");
  if (!(g * Q).is_symmetric()) throw std::invalid_argument("segre_type: Q is not g-self-adjoint");

  const size_t n = Q.rows();
  SegreSymbol sym;
  int next_group = 0;

  auto add_block = [&](SegreBlock b) { sym.blocks.push_back(std::move(b)); };

  for (const auto& f : factor_poly(char_poly(Q))) {
    if (f.kind == FactorKind::Linear) {
      const Rational lambda = *f.root;
      QMatrix N = Q;
      for (size_t i = 0; i < n; ++i) N(i, i) -= lambda;
      const auto sizes = block_sizes(N, f.multiplicity, 1);
      const int group = next_group++;
      // generalized eigenspace, then strip the size >= 2 chains so the
      // leftover carries the size-1 signature
      std::vector<QVector> W = null_basis(N.pow(static_cast<unsigned>(f.multiplicity)));
      int singles = 0;
      for (int s : sizes) {
        if (s == 1) {
          ++singles;
          continue;
        }
        const auto chain = find_chain(g, N, W, s);
        SegreBlock b;
        b.size = s;
        b.kind = SegreBlock::EigenKind::Rational;
        b.eigen = lambda;
        b.min_factor = f.factor;
        b.group = group;
        b.causal = Causal::Null;
        add_block(std::move(b));
        W = orthocomplement_within(g, W, chain);
      }
      if (singles > 0) {
        if (static_cast<int>(W.size()) != singles)
          throw std::logic_error("segre_type: single-block space has unexpected dimension");
        QMatrix gram(W.size(), W.size());
        for (size_t i = 0; i < W.size(); ++i)
          for (size_t j = 0; j < W.size(); ++j) gram(i, j) = inner_g(g, W[i], W[j]);
        const auto [pos, neg] = signature_of(gram);
        if (pos + neg != singles) throw std::logic_error("segre_type: degenerate single-block restriction");
        for (int c = 0; c < pos; ++c) {
          SegreBlock b;
          b.size = 1;
          b.kind = SegreBlock::EigenKind::Rational;
          b.eigen = lambda;
          b.min_factor = f.factor;
          b.group = group;
          b.causal = Causal::Spacelike;
          add_block(std::move(b));
        }
        for (int c = 0; c < neg; ++c) {
          SegreBlock b;
          b.size = 1;
          b.kind = SegreBlock::EigenKind::Rational;
          b.eigen = lambda;
          b.min_factor = f.factor;
          b.group = group;
          b.causal = Causal::Timelike;
          add_block(std::move(b));
        }
      }
    } else if (f.kind == FactorKind::QuadraticComplexPair) {
      const QMatrix F = f.factor.eval(Q);
      const auto sizes = block_sizes(F, f.multiplicity, 2);
      const int group = next_group++;
      for (int s : sizes) {
        SegreBlock b;
        b.size = s;
        b.kind = SegreBlock::EigenKind::ComplexPair;
        b.min_factor = f.factor;
        b.group = group;
        b.causal = Causal::Pair;
        add_block(std::move(b));
      }
    } else if (f.kind == FactorKind::QuadraticRealPair) {
      const QMatrix F = f.factor.eval(Q);
      const auto sizes = block_sizes(F, f.multiplicity, 2);
      const bool only_singles = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 1; });
      for (const auto& iv : f.real_roots) {
        const int group = next_group++;
        if (only_singles) {
          const auto [pos, neg] = eigenspace_signature_at_root(Q, g, f.factor, iv);
          for (int c = 0; c < pos + neg; ++c) {
            SegreBlock b;
            b.size = 1;
            b.kind = SegreBlock::EigenKind::RealIrrational;
            b.interval = iv;
            b.min_factor = f.factor;
            b.group = group;
            b.causal = c < pos ? Causal::Spacelike : Causal::Timelike;
            add_block(std::move(b));
          }
        } else {
          for (int s : sizes) {
            SegreBlock b;
            b.size = s;
            b.kind = SegreBlock::EigenKind::RealIrrational;
            b.interval = iv;
            b.min_factor = f.factor;
            b.group = group;
            b.causal = Causal::Null;
            add_block(std::move(b));
          }
        }
      }
    } else {
      // documented numeric fallback: exact block sizes, 64-bit eigenvalues
      sym.numeric_fallback = true;
      const int d = f.factor.degree();
      const QMatrix F = f.factor.eval(Q);
      const auto sizes = block_sizes(F, f.multiplicity, d);
      auto roots = numeric_roots(f.factor);
      std::vector<bool> used(roots.size(), false);
      for (size_t ri = 0; ri < roots.size(); ++ri) {
        if (used[ri]) continue;
        const bool realroot = std::fabs(roots[ri].second) <= 1e-9 * (1 + std::fabs(roots[ri].first));
        if (!realroot) {
          // pair with the conjugate
          for (size_t rj = ri + 1; rj < roots.size(); ++rj)
            if (!used[rj] && std::fabs(roots[rj].first - roots[ri].first) <= 1e-9 * (1 + std::fabs(roots[ri].first)) &&
                std::fabs(roots[rj].second + roots[ri].second) <= 1e-9 * (1 + std::fabs(roots[ri].second))) {
              used[rj] = true;
              break;
            }
        }
        used[ri] = true;
        const int group = next_group++;
        for (int s : sizes) {
          SegreBlock b;
          b.size = s;
          b.kind = SegreBlock::EigenKind::Numeric;
          b.approx_re = roots[ri].first;
          b.approx_im = realroot ? 0.0 : std::fabs(roots[ri].second);
          b.min_factor = f.factor;
          b.group = group;
          if (!realroot) {
            b.causal = Causal::Pair;
          } else if (s > 1) {
            b.causal = Causal::Null;
          } else {
            const auto v = numeric_kernel_vec(Q, roots[ri].first);
            double q = 0;
            for (size_t p2 = 0; p2 < n; ++p2)
              for (size_t q2 = 0; q2 < n; ++q2)
                q += v[p2] * v[q2] * static_cast<double>(numerator(g(p2, q2))) /
                     static_cast<double>(denominator(g(p2, q2)));
            b.causal = q > 0 ? Causal::Spacelike : Causal::Timelike;
          }
          add_block(std::move(b));
        }
      }
    }
  }

  // rendering
  struct Unit {
    int group;
    bool parens;
    std::string before, after;
    int order_key;
  };
  std::map<int, std::vector<const SegreBlock*>> by_group;
  for (const auto& b : sym.blocks) by_group[b.group].push_back(&b);
  std::vector<Unit> units;
  for (auto& [gid, blocks] : by_group) {
    std::stable_sort(blocks.begin(), blocks.end(), [](const SegreBlock* a, const SegreBlock* b) {
      auto side = [](const SegreBlock* x) { return x->causal == Causal::Spacelike ? 0 : (x->causal == Causal::Pair ? 2 : 1); };
      if (side(a) != side(b)) return side(a) < side(b);
      return a->size < b->size;
    });
    Unit u;
    u.group = gid;
    u.parens = blocks.size() > 1;
    for (const auto* b : blocks) {
      std::string tok;
      if (b->causal == Causal::Pair)
        tok = std::to_string(b->size) + kBarMark + std::to_string(b->size);
      else
        tok = std::to_string(b->size);
      (b->causal == Causal::Spacelike ? u.before : u.after) += tok;
    }
    u.order_key = gid;
    units.push_back(std::move(u));
  }
  auto cls = [](const Unit& u) { return u.after.empty() ? 0 : (u.before.empty() ? 2 : 1); };
  std::stable_sort(units.begin(), units.end(), [&](const Unit& a, const Unit& b) {
    if (cls(a) != cls(b)) return cls(a) < cls(b);
    return a.order_key < b.order_key;
  });
  const bool any_straddle = std::any_of(units.begin(), units.end(), [&](const Unit& u) { return cls(u) == 1; });
  std::string out = "[";
  bool comma_done = any_straddle; // a straddling unit carries the split itself
  bool before_seen = false;
  for (const auto& u : units) {
    if (cls(u) == 0) before_seen = true;
    if (cls(u) == 2 && !comma_done && before_seen) {
      out += ",";
      comma_done = true;
    }
    if (u.parens) {
      out += "(" + u.before;
      if (!u.before.empty() && !u.after.empty()) out += ",";
      out += u.after + ")";
    } else {
      out += u.before + u.after;
    }
  }
  out += "]";
  sym.rendering = out;
  return sym;
}

ParsedSegre parse_segre(const std::string& text) {
  ParsedSegre p;
  p.text = text;
  // lossless tokenization: digits absorb a following combining mark
  size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isdigit(c)) {
      std::string lex(1, text[i]);
      ++i;
      if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xcc &&
          (static_cast<unsigned char>(text[i + 1]) == 0x84 || static_cast<unsigned char>(text[i + 1]) == 0x85)) {
        lex += text.substr(i, 2);
        i += 2;
      }
      p.lexemes.push_back(lex);
    } else {
      p.lexemes.push_back(std::string(1, text[i]));
      ++i;
    }
  }
  // best-effort structure
  p.well_formed = true;
  if (p.lexemes.empty() || p.lexemes.front() != "[" || p.lexemes.back() != "]") p.well_formed = false;
  int depth = 0;
  ParsedSegre::Group current;
  bool in_group = false;
  for (size_t k = 0; p.well_formed && k < p.lexemes.size(); ++k) {
    const std::string& lex = p.lexemes[k];
    if (lex == "[") {
      if (k != 0) p.well_formed = false;
    } else if (lex == "]") {
      if (k + 1 != p.lexemes.size() || depth != 0) p.well_formed = false;
    } else if (lex == "(") {
      if (++depth > 1) p.well_formed = false;
      in_group = true;
      current = {true, 0};
    } else if (lex == ")") {
      if (--depth < 0) p.well_formed = false;
      if (in_group) p.groups.push_back(current);
      in_group = false;
    } else if (lex == ",") {
      // allowed at top level and inside groups
    } else if (std::isdigit(static_cast<unsigned char>(lex[0]))) {
      if (in_group) ++current.digit_count;
      else p.groups.push_back({false, 1});
    } else {
      p.well_formed = false;
    }
  }
  if (depth != 0) p.well_formed = false;
  return p;
}

std::string render_segre(const ParsedSegre& parsed) {
  std::string out;
  for (const auto& lex : parsed.lexemes) out += lex;
  return out;
}

bool is_degenerate(const ParsedSegre& parsed) {
  for (const auto& g : parsed.groups)
    if (g.parenthesized && g.digit_count > 1) return true;
  return false;
}

} // namespace riccisol
