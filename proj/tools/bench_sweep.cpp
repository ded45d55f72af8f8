// Compares the serial reference sweep against the OpenMP one on the full
// catalog verification workload and checks they produce identical reports.
#include "riccisol/engine.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace riccisol;

namespace {

double run_once(const std::vector<VerifyJob>& jobs, bool parallel, std::string& digest) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = run_verifications(jobs, parallel);
  const auto t1 = std::chrono::steady_clock::now();
  digest.clear();
  for (const auto& r : reports) digest += report_to_json(r);
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
  int reps = 3;
  if (argc > 1) reps = std::max(1, std::atoi(argv[1]));
  const auto jobs = jobs_for("all");
  std::printf("sweep workload: %zu verification jobs, OpenMP %s\n", jobs.size(),
              openmp_enabled() ? "enabled" : "not available");

  std::string serial_digest, parallel_digest;
  double best_serial = 1e300, best_parallel = 1e300;
  for (int i = 0; i < reps; ++i) best_serial = std::min(best_serial, run_once(jobs, false, serial_digest));
  for (int i = 0; i < reps; ++i) best_parallel = std::min(best_parallel, run_once(jobs, true, parallel_digest));

  std::printf("serial reference: %8.1f ms\n", best_serial);
  std::printf("parallel sweep:   %8.1f ms  (speedup %.2fx)\n", best_parallel, best_serial / best_parallel);
  if (serial_digest != parallel_digest) {
    std::printf("FAIL: serial and parallel reports differ\n");
    return 1;
  }
  std::printf("serial and parallel reports are byte-identical\n");
  return 0;
}
