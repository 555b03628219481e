#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "percolab/graph.hpp"
#include "percolab/rational.hpp"

namespace percolab {

/// Splittable per-stream seeding: stream k of a master seed is
/// splitmix64(master + (k+1) * golden-gamma). Parallel and serial runs draw
/// identical per-trial randomness.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

/// Erdos-Renyi sample: each pair present independently with probability p,
/// reproducible from the seed. Pairs are scanned in fixed (u,v) order with
/// one uniform each, so for a fixed seed the graphs are nested as p grows.
Graph sample_gnp(int n, double p, std::uint64_t seed);

/// Uniformly random edge ordering of the complete graph; prefix(m) is the
/// graph of the first m edges.
struct ProcessTrace {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<Edge> order;
  Graph prefix(long long m) const;
};
ProcessTrace random_process(int n, std::uint64_t seed);

struct MonotoneProperty {
  std::string name;
  bool monotone = true;  // callers must only pass increasing properties
  std::function<bool(const Graph&)> test;
};

inline constexpr long long kNeverHits = -1;

/// Smallest m with property(prefix(m)) true, by binary search (the property
/// must be monotone increasing in the edge set; anything else is refused).
long long hitting_time(const ProcessTrace& trace, const MonotoneProperty& property);

struct ProbeStat {
  double p = 0;
  double frequency = 0;
};

struct PcEstimate {
  double p_hat = 0;
  double p_low = 0, p_high = 1;
  double level = 0.5;
  int trials = 0;
  int probes_used = 0;
  std::vector<ProbeStat> probes;
  std::uint64_t seed = 0;
};

/// Bisection (in log p) of the empirical percolation frequency against the
/// given level, with per-trial coupling: trial t reuses one uniform per pair
/// across probes, so its percolation indicator is a step function of p.
PcEstimate estimate_percolation_threshold(const Graph& H, int n, double level, int trials,
                                          double rel_tol, std::uint64_t seed);

inline PcEstimate estimate_pc(const Graph& H, int n, int trials, double rel_tol,
                              std::uint64_t seed) {
  return estimate_percolation_threshold(H, n, 0.5, trials, rel_tol, seed);
}
inline PcEstimate estimate_p_eps(const Graph& H, int n, double eps, int trials, double rel_tol,
                                 std::uint64_t seed) {
  return estimate_percolation_threshold(H, n, eps, trials, rel_tol, seed);
}

struct SharpnessReport {
  int n = 0;
  double eps = 0;
  PcEstimate low, high, critical;  // p_eps, p_{1-eps}, p_c
  double window_ratio = 0;         // (p_{1-eps} - p_eps) / p_c
};
SharpnessReport sharpness_report(const Graph& H, int n, double eps, int trials, double rel_tol,
                                 std::uint64_t seed);

struct LowerBoundReport {
  double p = 0;
  bool clipped = false;
  int trials = 0;
  int failures = 0;          // trials that did not percolate
  double failure_frequency = 0;
  double eps_param = 0;
  std::uint64_t seed = 0;
};

/// Sets p from n * p^rho * (ln n)^rho = eps_param and reports how often the
/// sample fails to percolate. Requires a certified activation density > 1.
LowerBoundReport lower_bound_experiment(const Graph& H, const Rational& rho, int n,
                                        double eps_param, int trials, std::uint64_t seed);

enum class HittingMode { leaf_family, connectivity };

struct HittingReport {
  std::string mode;
  int n = 0;
  int traces = 0;
  int equal = 0;
  double coincidence = 0;
  std::vector<long long> gaps;  // percolation hit minus reference hit, per trace
  std::uint64_t seed = 0;
};

/// Compares the percolation hitting time per trace against the reference
/// event: first copy of a minimizing edge-deleted graph (leaf-family mode),
/// or connectivity (requires activation density exactly 1 and min degree 2).
HittingReport hitting_coincidence(const Graph& H, int n, int traces, HittingMode mode,
                                  std::uint64_t seed);

}  // namespace percolab
