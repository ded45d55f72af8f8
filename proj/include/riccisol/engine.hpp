#ifndef RICCISOL_ENGINE_HPP
#define RICCISOL_ENGINE_HPP

#include "riccisol/report.hpp"

namespace riccisol {

struct VerifyJob {
  std::string id;
  Params params;
};

/// Runs verification jobs and returns reports in submission order.
/// The parallel path fans the jobs out over OpenMP threads (every stage of
/// the pipeline is a pure function over immutable values); the serial path
/// is the reference implementation the parallel one is tested against.
std::vector<Report> run_verifications(const std::vector<VerifyJob>& jobs, bool parallel);

/// Jobs covering an entry at its default parameter samples, or every
/// entry when id == "all".
std::vector<VerifyJob> jobs_for(const std::string& id, size_t sample_cap = 16);

bool openmp_enabled();

} // namespace riccisol

#endif
