// Compares the serial and OpenMP table paths and checks they agree.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lenstc/bounds.hpp"

using Clock = std::chrono::steady_clock;

static double time_ms(std::vector<lenstc::TCBoundReport> (*fn)(lenstc::Range,
                                                               lenstc::Range),
                      lenstc::Range mr, lenstc::Range nr, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    auto reports = fn(mr, nr);
    auto t1 = Clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (reports.empty()) std::abort();
  }
  return best;
}

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  struct Case {
    lenstc::Range m, n;
  } cases[] = {
      {{2, 20}, {0, 12}},
      {{2, 40}, {0, 20}},
      {{2, 64}, {0, 32}},
  };
  std::printf("%-20s %12s %12s %8s\n", "grid", "serial (ms)", "openmp (ms)",
              "speedup");
  for (const auto& c : cases) {
    auto serial = lenstc::tc_table_serial(c.m, c.n);
    auto parallel = lenstc::tc_table(c.m, c.n);
    if (!(serial == parallel)) {
      std::fprintf(stderr, "serial and parallel tables disagree\n");
      return 1;
    }
    double ts = time_ms(&lenstc::tc_table_serial, c.m, c.n, 3);
    double tp = time_ms(&lenstc::tc_table, c.m, c.n, 3);
    char grid[64];
    std::snprintf(grid, sizeof grid, "m %u..%u, n %u..%u", c.m.lo, c.m.hi,
                  c.n.lo, c.n.hi);
    std::printf("%-20s %12.1f %12.1f %7.2fx\n", grid, ts, tp, ts / tp);
  }
  return 0;
}
