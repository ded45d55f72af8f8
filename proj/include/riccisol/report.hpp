#ifndef RICCISOL_REPORT_HPP
#define RICCISOL_REPORT_HPP

#include "riccisol/catalog.hpp"

namespace riccisol {

enum class Status { Pass, Warn, Fail, Skip };
std::string to_string(Status s);

struct StageResult {
  std::string stage;
  Status status = Status::Pass;
  std::vector<std::string> notes;
};

/// Per-run verification record. Exact rationals render as "p/q" strings;
/// output is byte-identical across runs (timing is kept out of the
/// serialized form unless explicitly requested).
struct Report {
  std::string entry_id;
  Params params;
  std::vector<StageResult> stages;
  double elapsed_ms = 0;

  Status overall() const;
  bool passed() const { return overall() != Status::Fail; }
  const StageResult* stage(const std::string& name) const;
};

/// Runs the full pipeline for a catalog entry at the given parameters and
/// diffs every computed object against every stored fixture.
Report verify_entry(const std::string& id, const Params& params);

/// Pipeline over a free-standing pair (spec file input): stage selection
/// by name ("validation", "connection", "curvature", "ricci", "weyl",
/// "segre", "soliton"); empty selection runs everything.
Report run_pipeline(const HomogeneousPair& pair, const std::vector<std::string>& stages);

std::string report_to_json(const Report& r, bool with_timing = false);
std::string report_to_table(const Report& r);

} // namespace riccisol

#endif
