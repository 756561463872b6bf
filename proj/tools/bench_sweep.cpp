// Compares the serial reference sweep against the OpenMP path and confirms
// both produce identical reports.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cl3/sweep.hpp"

namespace {

double run_timed(const cl3::SweepConfig& cfg, cl3::SweepReport* out) {
  using clock = std::chrono::steady_clock;
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto t0 = clock::now();
    *out = cl3::run_sweep(cfg);
    const auto t1 = clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

std::string fingerprint(const cl3::SweepReport& rep) {
  std::string s;
  char buf[64];
  for (const auto& c : rep.checks) {
    std::snprintf(buf, sizeof buf, "|%d:%.17g", static_cast<int>(c.status),
                  c.max_residual);
    s += c.name;
    s += buf;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  cl3::SweepConfig cfg = cl3::SweepConfig::defaults();
  cfg.trials = argc > 1 ? std::atoi(argv[1]) : 4000;

  cfg.parallel = false;
  cl3::SweepReport serial_rep;
  const double t_serial = run_timed(cfg, &serial_rep);

  cfg.parallel = true;
  cl3::SweepReport parallel_rep;
  const double t_parallel = run_timed(cfg, &parallel_rep);

  int threads = 1;
#ifdef _OPENMP
#pragma omp parallel
  {
#pragma omp single
    threads = omp_get_num_threads();
  }
#endif

  const bool identical = fingerprint(serial_rep) == fingerprint(parallel_rep);
  std::printf("sweep benchmark (trials = %d)\n", cfg.trials);
  std::printf("  serial reference : %8.3f s\n", t_serial);
  std::printf("  openmp (%2d thr)  : %8.3f s\n", threads, t_parallel);
  std::printf("  speedup          : %8.2fx\n", t_serial / t_parallel);
  std::printf("  reports identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
