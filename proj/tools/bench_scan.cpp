// Times the serial reference subset scan against the OpenMP variant, and
// the engine's batch allowed-edge pass, on a 20-edge instance.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "graft/generators.hpp"
#include "graft/oracle.hpp"
#include "graft/tjoin.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

int main() {
  graft::Graft g = graft::gen::cycle_graft(20);
  graft::EngineOptions opt;

#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif
  std::printf("instance: cycle of %d vertices, %d edges, %zu terminals\n",
              g.graph.vertex_count(), g.graph.edge_count(),
              g.terminals.size());

  for (int round = 0; round < 3; ++round) {
    auto t0 = Clock::now();
    auto serial = graft::oracle::detail::scan_join_masks(
        g, graft::oracle::ScanMode::serial);
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    auto parallel = graft::oracle::detail::scan_join_masks(
        g, graft::oracle::ScanMode::parallel);
    double parallel_ms = ms_since(t0);

    if (serial != parallel) {
      std::printf("round %d: MISMATCH between serial and parallel scans\n",
                  round);
      return 1;
    }
    std::printf("round %d: scan 2^%d subsets -> %zu joins  serial %.1f ms  "
                "parallel %.1f ms  speedup %.2fx\n",
                round, g.graph.edge_count(), serial.size(), serial_ms,
                parallel_ms, serial_ms / parallel_ms);
  }

  auto t0 = Clock::now();
  auto allowed = graft::tjoin::allowed_edges(g, opt);
  std::printf("allowed-edge batch over %d edges: %.1f ms (%d allowed)\n",
              g.graph.edge_count(), ms_since(t0), allowed.count());
  return 0;
}
