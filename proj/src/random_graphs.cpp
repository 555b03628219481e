#include "percolab/random_graphs.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "percolab/certificates.hpp"
#include "percolab/closure.hpp"
#include "percolab/density.hpp"

namespace percolab {

namespace {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Fully specified uniform in [0,1): top 53 bits of the engine output.
inline double uniform01(std::mt19937_64& rng) {
  return (double)(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + (stream + 1) * 0x9E3779B97F4A7C15ull);
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw DomainError("sample_gnp: p outside [0,1]");
  Graph g(n);
  if (n < 2) return g;
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) g.add_edge(u, v);
  return g;
}

Graph ProcessTrace::prefix(long long m) const {
  if (m < 0 || m > (long long)order.size())
    throw DomainError("ProcessTrace: prefix length out of range");
  Graph g(n);
  for (long long i = 0; i < m; ++i) g.add_edge(order[i]);
  return g;
}

ProcessTrace random_process(int n, std::uint64_t seed) {
  ProcessTrace t;
  t.n = n;
  t.seed = seed;
  t.order.reserve(Graph::pair_count(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) t.order.push_back(Edge(u, v));
  std::mt19937_64 rng(seed);
  for (std::size_t i = t.order.size(); i > 1; --i) {
    std::size_t j = (std::size_t)(rng() % i);
    std::swap(t.order[i - 1], t.order[j]);
  }
  return t;
}

long long hitting_time(const ProcessTrace& trace, const MonotoneProperty& property) {
  if (!property.monotone)
    throw DomainError("hitting_time: property '" + property.name + "' is not monotone");
  long long lo = 0, hi = (long long)trace.order.size();
  if (!property.test(trace.prefix(hi))) return kNeverHits;
  if (property.test(trace.prefix(0))) return 0;
  while (lo + 1 < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (property.test(trace.prefix(mid)))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

namespace {

struct CoupledTrials {
  const Graph& H;
  int n;
  int trials;
  std::uint64_t seed;
  // per-trial probe history for the step-function sanity check
  std::vector<std::vector<std::pair<double, bool>>> history;

  CoupledTrials(const Graph& H_, int n_, int trials_, std::uint64_t seed_)
      : H(H_), n(n_), trials(trials_), seed(seed_), history(trials_) {}

  double frequency(double p) {
    std::vector<char> ok(trials, 0);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
      Graph g = sample_gnp(n, p, split_seed(seed, (std::uint64_t)t));
      ok[t] = percolates(H, g);
    }
    int count = 0;
    for (int t = 0; t < trials; ++t) {
      count += ok[t];
      history[t].emplace_back(p, (bool)ok[t]);
    }
    return (double)count / trials;
  }

  // Coupling makes each trial's indicator a step function of p.
  void check_steps() const {
    for (const auto& h : history) {
      auto sorted = h;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i - 1].second && !sorted[i].second)
          throw DomainError("estimate: coupled trial lost monotonicity");
    }
  }
};

}  // namespace

PcEstimate estimate_percolation_threshold(const Graph& H, int n, double level, int trials,
                                          double rel_tol, std::uint64_t seed) {
  if (trials < 1) throw DomainError("estimate: need at least one trial");
  if (level <= 0.0 || level >= 1.0) throw DomainError("estimate: level must be in (0,1)");
  PcEstimate est;
  est.level = level;
  est.trials = trials;
  est.seed = seed;
  CoupledTrials coupled(H, n, trials, seed);
  auto probe = [&](double p) {
    double f = coupled.frequency(p);
    est.probes.push_back({p, f});
    ++est.probes_used;
    return f;
  };

  // degenerate floor: percolation from the empty graph
  if (probe(0.0) >= level) {
    est.p_hat = 0.0;
    est.p_low = 0.0;
    est.p_high = 0.0;
    coupled.check_steps();
    return est;
  }
  double lo = 1.0 / ((double)n * n), hi = 1.0;
  if (probe(hi) < level) {
    // not even the complete graph percolates at this level (H too large)
    est.p_hat = 1.0;
    est.p_low = lo;
    est.p_high = 1.0;
    coupled.check_steps();
    return est;
  }
  if (probe(lo) >= level) {
    hi = lo;
    lo = 0.0;
  }
  const int kMaxProbes = 40;
  while (est.probes_used < kMaxProbes) {
    if (lo > 0.0 && (hi - lo) <= rel_tol * hi) break;
    double mid = lo > 0.0 ? std::sqrt(lo * hi) : hi / 16.0;
    if (mid <= lo || mid >= hi) break;  // numeric floor
    if (probe(mid) >= level)
      hi = mid;
    else
      lo = mid;
  }
  est.p_low = lo;
  est.p_high = hi;
  est.p_hat = hi;
  coupled.check_steps();
  return est;
}

SharpnessReport sharpness_report(const Graph& H, int n, double eps, int trials, double rel_tol,
                                 std::uint64_t seed) {
  if (eps <= 0.0 || eps >= 1.0) throw DomainError("sharpness: eps must be in (0,1)");
  SharpnessReport rep;
  rep.n = n;
  rep.eps = eps;
  rep.low = estimate_percolation_threshold(H, n, eps, trials, rel_tol, split_seed(seed, 1));
  rep.high = estimate_percolation_threshold(H, n, 1.0 - eps, trials, rel_tol, split_seed(seed, 2));
  rep.critical = estimate_percolation_threshold(H, n, 0.5, trials, rel_tol, split_seed(seed, 3));
  rep.window_ratio =
      rep.critical.p_hat > 0 ? (rep.high.p_hat - rep.low.p_hat) / rep.critical.p_hat : 0.0;
  return rep;
}

LowerBoundReport lower_bound_experiment(const Graph& H, const Rational& rho, int n,
                                        double eps_param, int trials, std::uint64_t seed) {
  if (!(rho > Rational(1))) throw DomainError("lower_bound: certified density must exceed 1");
  if (eps_param <= 0) throw DomainError("lower_bound: eps must be positive");
  LowerBoundReport rep;
  rep.trials = trials;
  rep.eps_param = eps_param;
  rep.seed = seed;
  const double r = rho.to_double();
  double p = std::exp((std::log(eps_param) - std::log((double)n) - r * std::log(std::log((double)n))) / r);
  if (p > 1.0) {
    p = 1.0;
    rep.clipped = true;
  }
  rep.p = p;
  std::vector<char> fail(trials, 0);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    Graph g = sample_gnp(n, p, split_seed(seed, (std::uint64_t)t));
    fail[t] = !percolates(H, g);
  }
  for (int t = 0; t < trials; ++t) rep.failures += fail[t];
  rep.failure_frequency = trials > 0 ? (double)rep.failures / trials : 0.0;
  return rep;
}

HittingReport hitting_coincidence(const Graph& H, int n, int traces, HittingMode mode,
                                  std::uint64_t seed) {
  HittingReport rep;
  rep.n = n;
  rep.traces = traces;
  rep.seed = seed;

  MonotoneProperty reference;
  if (mode == HittingMode::leaf_family) {
    rep.mode = "leaf-family";
    if (!H.has_leaf()) throw DomainError("hitting: leaf-family mode needs a pattern with a leaf");
    BetaResult br = beta(H);
    auto family = std::make_shared<std::vector<Graph>>(br.family);
    reference.name = "contains-minimizing-edge-deleted-copy";
    reference.test = [family](const Graph& g) {
      for (const Graph& f : *family)
        if (subgraph_exists(f, g)) return true;
      return false;
    };
  } else {
    rep.mode = "connectivity";
    auto special = rho_exact_special(H);
    if (!special || special->infinite || !(special->value == Rational(1)))
      throw DomainError("hitting: connectivity mode needs activation density exactly 1");
    if (H.min_degree() < 2)
      throw DomainError("hitting: connectivity mode needs minimum degree 2");
    reference.name = "connected";
    reference.test = [](const Graph& g) { return g.is_connected(); };
  }
  MonotoneProperty percolation{"percolates", true,
                               [&H](const Graph& g) { return percolates(H, g); }};

  std::vector<long long> perc_hits(traces), ref_hits(traces);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < traces; ++t) {
    ProcessTrace trace = random_process(n, split_seed(seed, (std::uint64_t)t));
    perc_hits[t] = hitting_time(trace, percolation);
    ref_hits[t] = hitting_time(trace, reference);
  }
  for (int t = 0; t < traces; ++t) {
    rep.gaps.push_back(perc_hits[t] - ref_hits[t]);
    if (perc_hits[t] == ref_hits[t]) ++rep.equal;
  }
  rep.coincidence = traces > 0 ? (double)rep.equal / traces : 0.0;
  return rep;
}

}  // namespace percolab
