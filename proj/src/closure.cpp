#include "percolab/closure.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>

namespace percolab {

namespace {

// If H is a complete graph on >= 2 vertices, returns its order.
int clique_order(const Graph& H) {
  int n = H.vertex_count();
  if (n >= 2 && H.edge_count() == Graph::pair_count(n)) return n;
  return 0;
}

std::vector<Edge> inactive_pairs(const Graph& G) {
  std::vector<Edge> out;
  int n = G.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!G.has_edge(u, v)) out.push_back(Edge(u, v));
  return out;
}

// Candidate pairs for the seeding pass. For clique patterns K_r only pairs
// with at least r-2 common active neighbors can complete a copy, and those
// are exactly the pairs seen in >= r-2 wedges; cheaper than scanning all
// inactive pairs when the graph is sparse.
std::vector<Edge> first_round_candidates(const Graph& H, const Graph& G, int r) {
  const int n = G.vertex_count();
  if (r >= 3) {
    long long wedge_bound = 0;
    for (int v = 0; v < n; ++v) {
      long long d = G.degree(v);
      wedge_bound += d * d;
    }
    if (wedge_bound / 2 < Graph::pair_count(n) / 4) {
      std::unordered_map<long long, int> count;
      count.reserve(1024);
      for (int z = 0; z < n; ++z) {
        std::vector<int> nb = G.neighbors(z);
        for (std::size_t i = 0; i < nb.size(); ++i)
          for (std::size_t j = i + 1; j < nb.size(); ++j)
            ++count[(long long)nb[i] * n + nb[j]];
      }
      std::vector<Edge> cands;
      for (auto& [key, c] : count) {
        if (c < r - 2) continue;
        int u = (int)(key / n), v = (int)(key % n);
        if (!G.has_edge(u, v)) cands.push_back(Edge(u, v));
      }
      std::sort(cands.begin(), cands.end());
      return cands;
    }
  }
  return inactive_pairs(G);
}

std::vector<Edge> run_candidate_pass(const CompletionTester& tester, const Graph& G,
                                     const std::vector<Edge>& cands) {
  std::vector<char> hit(cands.size(), 0);
#pragma omp parallel
  {
    MatchWorkspace ws;
#pragma omp for schedule(dynamic, 64)
    for (long long i = 0; i < (long long)cands.size(); ++i)
      hit[i] = tester.exists(G, cands[i], ws);
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (hit[i]) out.push_back(cands[i]);
  return out;
}

std::vector<Edge> propagate_pass(const CompletionTester& tester, const Graph& G,
                                 const std::vector<Edge>& last_round) {
  const int n = G.vertex_count();
  std::vector<std::vector<long long>> found;
#pragma omp parallel
  {
#pragma omp single
    found.resize(omp_get_num_threads());
    MatchWorkspace ws;
    int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic, 8)
    for (long long i = 0; i < (long long)last_round.size(); ++i) {
      tester.propagate(G, last_round[i], ws, [&](int a, int b) {
        Edge e(a, b);
        found[tid].push_back((long long)e.u * n + e.v);
      });
    }
  }
  std::vector<long long> merged;
  for (auto& f : found) merged.insert(merged.end(), f.begin(), f.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  std::vector<Edge> out;
  out.reserve(merged.size());
  for (long long key : merged) out.push_back(Edge((int)(key / n), (int)(key % n)));
  return out;
}

void record_completions(const Graph& H, const Graph& pre_round, const std::vector<Edge>& acts,
                        int round, ClosureTrace& trace) {
  const int n = pre_round.vertex_count();
  CompletionTester canon(H, /*all_edges=*/true);
  std::vector<Completion> comps(acts.size());
#pragma omp parallel
  {
    MatchWorkspace ws;
#pragma omp for schedule(dynamic, 16)
    for (long long i = 0; i < (long long)acts.size(); ++i) {
      Completion c;
      c.round = round;
      if (!canon.first(pre_round, acts[i], ws, c.emb, c.pattern_edge))
        c.round = -1;  // cannot happen for genuine activations
      comps[i] = std::move(c);
    }
  }
  for (std::size_t i = 0; i < acts.size(); ++i) {
    if (comps[i].round < 0) throw DomainError("closure: lost completing copy");
    trace.completions.emplace(ClosureTrace::pair_key(n, acts[i]), std::move(comps[i]));
  }
}

}  // namespace

std::vector<Edge> step(const Graph& H, const Graph& G) {
  if (H.edge_count() == 0) return {};
  CompletionTester tester(H);
  return run_candidate_pass(tester, G, inactive_pairs(G));
}

ClosureTrace closure(const Graph& H, const Graph& G, const ClosureOptions& opts) {
  ClosureTrace trace;
  trace.final = G;
  if (H.edge_count() == 0) {
    trace.complete = G.is_complete();
    return trace;
  }
  CompletionTester tester(H);
  const int r = clique_order(H);
  Graph work = G;
  std::vector<Edge> last;
  int round = 0;
  bool swept = false;  // one confirming full rescan after the first stall
  while (true) {
    if (opts.early_exit_complete && work.is_complete()) break;
    std::vector<Edge> acts;
    if (round == 0) {
      acts = run_candidate_pass(tester, work, first_round_candidates(H, work, r));
      swept = true;
    } else if (!last.empty()) {
      acts = propagate_pass(tester, work, last);
      swept = false;
    }
    if (acts.empty()) {
      if (swept || !opts.confirm_sweep) break;
      acts = run_candidate_pass(tester, work, inactive_pairs(work));
      swept = true;
      if (acts.empty()) break;
    }
    ++round;
    if (opts.record_trace) record_completions(H, work, acts, round, trace);
    for (const Edge& e : acts) work.add_edge(e);
    trace.rounds.push_back(acts);
    last = std::move(acts);
  }
  trace.final = work;
  trace.complete = work.is_complete();
  return trace;
}

ClosureTrace closure_reference(const Graph& H, const Graph& G, bool record_trace) {
  ClosureTrace trace;
  trace.final = G;
  if (H.edge_count() == 0) {
    trace.complete = G.is_complete();
    return trace;
  }
  CompletionTester tester(H);
  MatchWorkspace ws;
  Graph work = G;
  int round = 0;
  while (true) {
    std::vector<Edge> acts;
    for (int u = 0; u < work.vertex_count(); ++u)
      for (int v = u + 1; v < work.vertex_count(); ++v)
        if (!work.has_edge(u, v) && tester.exists(work, Edge(u, v), ws))
          acts.push_back(Edge(u, v));
    if (acts.empty()) break;
    ++round;
    if (record_trace) record_completions(H, work, acts, round, trace);
    for (const Edge& e : acts) work.add_edge(e);
    trace.rounds.push_back(std::move(acts));
  }
  trace.final = work;
  trace.complete = work.is_complete();
  return trace;
}

namespace {

// Greedy certified-complete-set growth for clique patterns. S starts as an
// active (r-1)-clique; any vertex with >= r-2 active edges into S joins, and
// the complete graph on the final S is contained in the closure. Returns the
// grown set (possibly empty when no seed exists).
class CliqueGrower {
 public:
  CliqueGrower(int r, int n) : r_(r), n_(n) {}

  // Attempts growth to the full vertex set; returns true on success and
  // leaves the best grown set in set().
  bool try_grow(const Graph& G) {
    if (!best_.empty() && grow_from(G, best_)) return true;
    std::vector<char> covered(n_, 0);
    for (const std::vector<int>& seed : find_seeds(G, covered))
      if (grow_from(G, seed)) return true;
    return false;
  }

  const std::vector<int>& set() const { return best_; }

 private:
  bool grow_from(const Graph& G, const std::vector<int>& seed) {
    std::vector<char> in(n_, 0);
    std::vector<int> members = seed;
    for (int v : seed) in[v] = 1;
    std::vector<int> count(n_, 0);
    std::vector<int> queue;
    for (int v = 0; v < n_; ++v) {
      if (in[v]) continue;
      int c = 0;
      for (int s : members) c += G.has_edge(v, s);
      count[v] = c;
      if (c >= r_ - 2) queue.push_back(v);
    }
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      if (in[v]) continue;
      in[v] = 1;
      members.push_back(v);
      for (int w : G.neighbors(v)) {
        if (in[w]) continue;
        if (++count[w] == r_ - 2) queue.push_back(w);
      }
    }
    if ((int)members.size() > (int)best_.size()) {
      std::sort(members.begin(), members.end());
      best_ = members;
    }
    return (int)best_.size() == n_;
  }

  // Active (r-1)-cliques to seed from, skipping vertices already inside a
  // stalled grown set (growth is monotone in the seed). Budget-capped.
  std::vector<std::vector<int>> find_seeds(const Graph& G, std::vector<char>& covered) {
    std::vector<std::vector<int>> seeds;
    const int want = r_ - 1;
    const int budget = 64;
    for (int v : best_) covered[v] = 1;
    std::vector<int> clique;
    std::function<bool(int)> extend = [&](int start) -> bool {
      if ((int)clique.size() == want) {
        seeds.push_back(clique);
        return (int)seeds.size() >= budget;
      }
      for (int u = start; u < n_; ++u) {
        if (covered[u]) continue;
        bool ok = true;
        for (int c : clique)
          if (!G.has_edge(u, c)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        clique.push_back(u);
        bool full = extend(u + 1);
        clique.pop_back();
        if (full) return true;
      }
      return false;
    };
    extend(0);
    return seeds;
  }

  int r_;
  int n_;
  std::vector<int> best_;
};

}  // namespace

bool percolates(const Graph& H, const Graph& G) {
  const int n = G.vertex_count();
  if (H.edge_count() == 0) return G.is_complete();
  if (G.is_complete()) return true;
  CompletionTester tester(H);
  const int r = clique_order(H);
  Graph work = G;
  CliqueGrower grower(r, n);

  // Grows a certified complete set; edges inside it belong to the closure
  // and are injected so later propagation can use them. Returns true when
  // the set covers every vertex.
  auto grow_shortcut = [&](std::vector<Edge>& injected) -> bool {
    if (r < 3) return false;
    bool full = grower.try_grow(work);
    const std::vector<int>& s = grower.set();
    if (full) return true;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (work.add_edge(s[i], s[j])) injected.push_back(Edge(s[i], s[j]));
    return false;
  };

  std::vector<Edge> last;
  int round = 0;
  while (true) {
    std::vector<Edge> acts;
    if (round == 0) {
      acts = run_candidate_pass(tester, work, first_round_candidates(H, work, r));
    } else {
      acts = propagate_pass(tester, work, last);
    }
    ++round;
    for (const Edge& e : acts) work.add_edge(e);
    if (work.is_complete()) return true;

    if (round == 1) {
      // Degree freeze: a vertex with fewer than min_degree(H)-1 active edges
      // can never gain one, so any such vertex rules out completion.
      int t = H.min_degree() - 1;
      if (t > 0 && n >= 2)
        for (int v = 0; v < n; ++v)
          if (work.degree(v) < t) return false;
    }

    if (grow_shortcut(acts)) return true;
    if (acts.empty()) return false;  // stall with edges missing
    std::sort(acts.begin(), acts.end());
    acts.erase(std::unique(acts.begin(), acts.end()), acts.end());
    last = std::move(acts);
  }
}

Graph wsat_bollobas(int n, int r) {
  if (r < 3) throw DomainError("wsat_bollobas: r must be at least 3");
  if (n < r - 2) throw DomainError("wsat_bollobas: need at least r-2 vertices");
  Graph g(n);
  for (int u = 0; u < r - 2; ++u)
    for (int v = u + 1; v < r - 2; ++v) g.add_edge(u, v);
  for (int v = r - 2; v < n; ++v)
    for (int back = 1; back <= r - 2; ++back) g.add_edge(v, v - back);
  return g;
}

}  // namespace percolab
