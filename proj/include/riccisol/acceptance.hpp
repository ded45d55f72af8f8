#ifndef RICCISOL_ACCEPTANCE_HPP
#define RICCISOL_ACCEPTANCE_HPP

#include "riccisol/report.hpp"

namespace riccisol {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> warns;    // recorded printed-value discrepancies
  std::vector<std::string> failures; // empty iff pass
};

/// The full verification gate: every numbered check the tool promises,
/// each exact (no tolerances anywhere on the exact path). `verify all`
/// runs exactly this.
std::vector<CriterionResult> run_acceptance(bool parallel = false);

/// Independent Christoffel-symbol implementation of the Ricci tensor for
/// Lie groups (r = 0); deliberately a separate code path from the
/// connection-operator pipeline it cross-checks.
QMatrix ricci_via_christoffel(const HomogeneousPair& pair);

/// Deterministic stream of valid 3-/4-dimensional metric Lie algebras:
/// classical families under random unimodular basis changes with random
/// nondegenerate metrics.
std::vector<HomogeneousPair> random_algebras(size_t count, unsigned seed);

/// The bracketed Segre strings of the printed classification tables,
/// transcribed verbatim (some are not well formed; the parser must
/// round-trip them byte-exactly regardless).
const std::vector<std::string>& segre_table_vocabulary();

} // namespace riccisol

#endif
