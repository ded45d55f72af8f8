#ifndef RICCISOL_ALGEBRA_HPP
#define RICCISOL_ALGEBRA_HPP

#include "riccisol/qmatrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace riccisol {

/// Vector in m, components on the u-basis.
using MVector = QVector;

/// Whether the bracket table of a pair is fully known. PARTIAL entries
/// carry only the m-parts of [u_i, u_j] (recovered from a connection
/// fixture); everything involving h is unknown, and operations that need
/// it refuse instead of guessing.
enum class PairData { Full, Partial };

/// Homogeneous pair (g, h) with a reductive decomposition g = h + m and an
/// invariant metric on m. The basis is ordered e_1..e_r (h) then u_1..u_n
/// (m); indices in this API are 0-based over that ordering.
struct HomogeneousPair {
  std::string id;
  std::string name;
  size_t r = 0; ///< dim h (0 for Lie groups)
  size_t n = 0; ///< dim m
  PairData data = PairData::Full;
  /// bracket[i][j] = components of [b_i, b_j] on the full basis of g.
  std::vector<std::vector<QVector>> bracket;
  /// metric on m, n x n, symmetric and nondegenerate.
  QMatrix metric;
  std::map<std::string, Rational> params;

  size_t dim_g() const { return r + n; }

  /// m-part (u-components) of [b_i, b_j], g-basis indices.
  MVector bracket_m(size_t i, size_t j) const;
  /// m-part of [u_i, u_j], m-basis indices.
  MVector bracket_m_of_u(size_t i, size_t j) const;
  /// g(x, y) for m-vectors.
  Rational inner(const MVector& x, const MVector& y) const;

  bool is_partial() const { return data == PairData::Partial; }
};

struct Violation {
  std::string kind;             // "antisymmetry", "jacobi", "h-subalgebra", ...
  std::array<long, 3> indices;  // witnessing basis indices (-1 when unused), 1-based for display
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::string summary() const;
};

class validation_error : public std::runtime_error {
public:
  validation_error(std::string msg, ValidationReport rep)
      : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
  ValidationReport report;
};

class partial_pair_error : public std::runtime_error {
public:
  explicit partial_pair_error(const std::string& op)
      : std::runtime_error(op + ": pair is PARTIAL (h-components of brackets are not known)") {}
};

/// Untagged builder input; mirrors the algebra spec file. Bracket entries
/// are sparse, indices 1-based over the (e's then u's) basis; omitted
/// entries are zero, (j,i) entries are filled by antisymmetry.
struct PairSpec {
  std::string id;
  std::string name;
  size_t r = 0, n = 0;
  struct BracketEntry {
    size_t i = 0, j = 0;         // 1-based
    QVector components;          // length r+n
  };
  std::vector<BracketEntry> brackets;
  std::vector<std::tuple<size_t, size_t, Rational>> metric_entries; // 1-based u-indices
  std::map<std::string, Rational> params;
};

/// Builds and eagerly validates a FULL pair; throws validation_error with
/// the witnessing indices on any axiom violation.
HomogeneousPair build_pair(const PairSpec& spec);

/// All axioms in one report: antisymmetry of the table, Jacobi, h closes
/// under bracket, metric symmetric and nondegenerate, isotropy invariance.
ValidationReport validate_pair(const HomogeneousPair& pair);

struct JacobiViolation {
  std::array<size_t, 3> triple; // 0-based basis indices
  QVector residual;             // components on the g basis
};

/// Exact residuals [[x,y],z] + [[y,z],x] + [[z,x],y] over all basis
/// triples; empty iff the Jacobi identity holds.
std::vector<JacobiViolation> jacobi_check(const HomogeneousPair& pair);

/// Matrix of the isotropy action psi(e_j) on the u-basis (columns are
/// [e_j, u_i]_m). j is 0-based; throws std::out_of_range when j >= r
/// (in particular always for Lie groups, which have r = 0).
QMatrix isotropy_matrix(const HomogeneousPair& pair, size_t j);

struct InvarianceCheck {
  bool invariant = true;
  std::vector<size_t> violating_j; // 0-based h indices
};

/// psi(e_j)^t g + g psi(e_j) = 0 for all j; vacuously true when r = 0.
InvarianceCheck metric_invariance_check(const HomogeneousPair& pair);

/// True iff psi(e_j) X = 0 for all j (always true when r = 0).
bool is_invariant_field(const HomogeneousPair& pair, const MVector& X);

} // namespace riccisol

#endif
