#ifndef RICCISOL_SOLITON_HPP
#define RICCISOL_SOLITON_HPP

#include "riccisol/algebra.hpp"
#include "riccisol/linsolve.hpp"

namespace riccisol {

enum class Provenance { Assembled, Fixture };

/// Exact linear system for the soliton equation in the unknowns
/// (x_1..x_n, sigma). Every row is stored in the normal form
///   sum_k coeffs[row][k] * unknown_k + constants[row] = 0,
/// matching the componentwise display: (Lie-derivative terms) + rho_ij
/// - sigma g_ij = 0.
struct SolitonSystem {
  size_t n = 0; ///< number of x unknowns; sigma is unknown n
  Provenance provenance = Provenance::Assembled;
  QMatrix coeffs;    // rows x (n+1)
  QVector constants; // one per row
  /// for assembled systems, the (i,j) metric pair of each row (0-based)
  std::vector<std::pair<size_t, size_t>> row_pairs;

  /// One printed fixture row is quadratic in the unknowns; it is kept
  /// verbatim and checked against solutions by substitution.
  struct QuadraticCheck {
    Rational coeff;
    size_t a = 0, b = 0; // coeff * unknown_a * unknown_b
    QVector linear;      // + linear part
    Rational constant;   // + constant = 0
  };
  std::vector<QuadraticCheck> quadratic_checks;

  size_t rows() const { return coeffs.rows(); }
  /// Left-hand side of a linear row at a point (x, sigma).
  Rational residual(size_t row, const QVector& point) const;
  bool satisfied_by(const QVector& point) const; // all rows, incl. quadratic checks
};

enum class SolitonClass { Shrinking, Steady, Expanding };

/// Exact affine solution set of a soliton system, or an inconsistency
/// certificate naming the row combination that yields 0 = nonzero.
struct SolitonSolution {
  bool consistent = false;
  // consistent case
  QVector particular;              // (x_1..x_n, sigma)
  std::vector<QVector> nullspace;  // basis of the homogeneous solutions
  bool einstein = false;           // some solution has x = 0
  bool unique() const { return consistent && nullspace.empty(); }
  // inconsistent case
  InconsistencyCertificate certificate;
};

/// One row of the displayed componentwise system per unordered pair
/// (i <= j), ordered lexicographically. Uses only the m-parts of brackets
/// and the metric, so PARTIAL pairs assemble fine once their m-brackets
/// are known; rho must be supplied (computed or fixture).
SolitonSystem assemble_system(const HomogeneousPair& pair, const QMatrix& rho);

SolitonSolution solve(const SolitonSystem& system);

/// True when the point lies in the affine solution set.
bool solution_contains(const SolitonSolution& sol, const QVector& point);

/// Sign of sigma at a sample point of the solution set; throws
/// std::invalid_argument when the sample is not a solution.
SolitonClass classify(const SolitonSolution& sol, const QVector& sample);
std::string to_string(SolitonClass c);

/// Intersection of the solution set with the invariant fields
/// {X : psi(e_j) X = 0 for all j}. For PARTIAL pairs a documented
/// invariance subspace (span of the given m-vectors) must be supplied.
SolitonSolution invariant_solutions(const HomogeneousPair& pair, const SolitonSystem& system,
                                    const SolitonSolution& sol,
                                    const std::vector<MVector>* fixture_subspace = nullptr);

class unknown_id_error : public std::runtime_error {
public:
  explicit unknown_id_error(const std::string& id) : std::runtime_error("unknown id: " + id) {}
};

/// Transcriptions of the printed soliton systems, instantiated at exact
/// parameter values. Known ids: "thm3.3-(ii)" (alpha, eps),
/// "thm4.1-(22)" (k1), "thm4.2-[1,(12)]" (k1, k2, k3),
/// "case-1.3.1:5" (a, lambda, b, c).
SolitonSystem load_fixture_system(const std::string& id, const std::map<std::string, Rational>& params);
std::vector<std::string> fixture_system_ids();

} // namespace riccisol

#endif
