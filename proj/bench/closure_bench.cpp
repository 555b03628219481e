// Benchmark comparing the incremental (OpenMP) closure engine against the
// serial full-rescan reference, plus the accelerated percolation test.
//
//   ./closure_bench [max_n]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "percolab/closure.hpp"
#include "percolab/patterns.hpp"
#include "percolab/random_graphs.hpp"

using namespace percolab;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void run_case(const std::string& name, const Graph& H, int n, double p, std::uint64_t seed,
              bool run_reference) {
  Graph g = sample_gnp(n, p, seed);
  auto t0 = std::chrono::steady_clock::now();
  ClosureTrace inc = closure(H, g);
  double t_inc = ms_since(t0);

  double t_ref = -1;
  bool match = true;
  if (run_reference) {
    t0 = std::chrono::steady_clock::now();
    ClosureTrace ref = closure_reference(H, g);
    t_ref = ms_since(t0);
    match = inc.final == ref.final && inc.rounds == ref.rounds;
  }

  t0 = std::chrono::steady_clock::now();
  bool perc = percolates(H, g);
  double t_perc = ms_since(t0);
  bool perc_match = perc == inc.complete;

  std::printf("%-22s n=%5d p=%.5f  incremental=%9.2fms  reference=%9.2fms  percolates=%8.2fms"
              "  agree=%s\n",
              name.c_str(), n, p, t_inc, t_ref, t_perc,
              (match && perc_match) ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 2000;
  std::printf("threads: %d\n", omp_get_max_threads());

  run_case("K3 near-critical", complete_graph(3), 256, 0.022, 7, true);
  run_case("K4 small", complete_graph(4), 128, 0.09, 7, true);
  run_case("C4 small", cycle_graph(4), 96, 0.08, 7, true);
  run_case("paw small", paw_graph(), 96, 0.05, 7, true);
  if (max_n >= 1024) run_case("K3 large", complete_graph(3), 1024, 0.0072, 11, false);
  if (max_n >= 2000) run_case("K4 large", complete_graph(4), 2000, 0.0050, 11, false);
  return 0;
}
