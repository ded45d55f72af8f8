#include "riccisol/engine.hpp"

#ifdef RICCISOL_HAVE_OPENMP
#include <omp.h>
#endif

namespace riccisol {

std::vector<Report> run_verifications(const std::vector<VerifyJob>& jobs, bool parallel) {
  std::vector<Report> out(jobs.size());
  if (parallel) {
#ifdef RICCISOL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i)
      out[static_cast<size_t>(i)] = verify_entry(jobs[static_cast<size_t>(i)].id, jobs[static_cast<size_t>(i)].params);
    return out;
#endif
  }
  for (size_t i = 0; i < jobs.size(); ++i) out[i] = verify_entry(jobs[i].id, jobs[i].params);
  return out;
}

std::vector<VerifyJob> jobs_for(const std::string& id, size_t sample_cap) {
  std::vector<VerifyJob> jobs;
  auto add_entry = [&](const CatalogEntry& e) {
    if (e.kind == CatalogEntry::Kind::MetadataOnly) {
      jobs.push_back({e.id, {}});
      return;
    }
    for (const auto& p : default_samples(e, sample_cap)) jobs.push_back({e.id, p});
  };
  if (id == "all") {
    for (const auto& e : catalog()) add_entry(e);
  } else {
    add_entry(catalog_entry(id));
  }
  return jobs;
}

bool openmp_enabled() {
#ifdef RICCISOL_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

} // namespace riccisol
