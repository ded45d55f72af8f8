#ifndef RICCISOL_CATALOG_HPP
#define RICCISOL_CATALOG_HPP

#include "riccisol/geometry.hpp"
#include "riccisol/soliton.hpp"

#include <functional>
#include <optional>

namespace riccisol {

using Params = std::map<std::string, Rational>;

class param_domain_error : public std::runtime_error {
public:
  explicit param_domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParamSpec {
  std::string name;
  enum class Domain { NonZero, Any, PlusMinusOne } domain = Domain::Any;
  std::string constraint_note; // e.g. "alpha != 0"
};

/// Printed connection matrices for an entry, together with the entries
/// where the exact derivation provably deviates from the print (each such
/// deviation is certified by a broken structural identity in the printed
/// value: torsion recovery or metric skewness).
struct LambdaFixture {
  std::vector<QMatrix> printed; // operators of u_1..u_n as printed
  struct Deviation {
    size_t op;       // which operator
    size_t row, col; // which entry
    Rational computed_value;
  };
  std::vector<Deviation> deviations;
  std::string deviation_note;

  /// printed matrices with the certified corrections applied
  std::vector<QMatrix> corrected() const;
  bool is_masked(size_t op, size_t row, size_t col) const;
};

struct SolitonExpectation {
  enum class Kind { Inconsistent, Unique, Family } kind = Kind::Unique;
  std::function<QVector(const Params&)> solution; // Unique: expected (x, sigma)
  SolitonClass cls = SolitonClass::Steady;
  bool einstein = false;
  size_t family_dim = 0;   // Family: expected nullspace dimension
  long certificate_row = -1; // assembled row the certificate must touch
  std::string warn_note;   // recorded discrepancy against the printed value
};

struct TableRow {
  std::string table;       // which printed table the row comes from
  std::string metric_expr; // invariant metric as printed
  std::string soliton_field;
  std::string sigma;
  std::string invariant;
};

struct CatalogEntry {
  std::string id;
  std::string name;
  enum class Kind { Full, Partial, MetadataOnly } kind = Kind::Full;
  enum class MetricStatus { Resolved, Searched } metric_status = MetricStatus::Resolved;
  enum class Signature { Neutral, Lorentzian } signature = Signature::Neutral;
  std::vector<ParamSpec> params;

  std::function<HomogeneousPair(const Params&, const QMatrix&)> build_with_metric;
  std::function<QMatrix(const Params&)> resolved_metric; // Resolved entries only

  std::function<QMatrix(const Params&)> printed_rho;          // nullable
  std::function<LambdaFixture(const Params&)> printed_lambda; // nullable
  std::string fixture_system_id;                              // may be empty
  std::optional<SolitonExpectation> soliton;
  std::string expected_segre;   // may be empty
  std::string expected_minpoly; // may be empty
  std::vector<MVector> invariance_subspace; // documented fixture (PARTIAL entries)
  std::optional<TableRow> metadata;         // MetadataOnly entries
};

/// All catalog entries, verified families first, metadata-only rows after.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id); // throws unknown_id_error
bool catalog_has(const std::string& id);

/// Validates parameter bindings against the entry's domains; missing
/// parameters get defaults (1 for free parameters). Throws
/// param_domain_error with the violated constraint.
Params check_params(const CatalogEntry& entry, const Params& given);

/// Default certification samples per entry: {1, 1/2, -2, 3} filtered by
/// domain for free parameters, the full domain for sign parameters; the
/// cartesian product is capped at `cap` combinations.
std::vector<Params> default_samples(const CatalogEntry& entry, size_t cap = 16);

struct MetricResolution {
  QMatrix metric;
  bool searched = false;
  std::vector<QMatrix> survivors; // all candidates matching every fixture
  bool ambiguous() const { return survivors.size() > 1; }
};

/// For SEARCHED entries: tries every canonical candidate metric of the
/// entry's signature (diagonal +-1 assignments and null-pair forms,
/// normalized so the first nonzero entry is +1) and keeps those whose
/// computed connection and Ricci tensor reproduce the printed fixtures at
/// two parameter samples. The first survivor in enumeration order is the
/// resolution; ties are reported, not errors, since tied survivors are
/// indistinguishable by every printed fixture. Throws validation_error
/// when nothing survives. RESOLVED entries return the stored metric,
/// which may depend on the parameter bindings.
MetricResolution resolve_metric(const std::string& id, const Params& params = {});

/// Candidate metrics of the given signature (enumeration order is the
/// documented canonical order).
std::vector<QMatrix> metric_candidates(CatalogEntry::Signature sig);

/// Builds the validated pair at the given parameters, resolving the
/// metric if needed.
HomogeneousPair instantiate(const std::string& id, const Params& params);

} // namespace riccisol

#endif
