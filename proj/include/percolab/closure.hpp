#pragma once

#include <unordered_map>
#include <vector>

#include "percolab/embed.hpp"
#include "percolab/graph.hpp"

namespace percolab {

/// One completing copy, recorded at activation time: the canonical first
/// embedding of H over the pre-round graph that the activated edge finishes.
struct Completion {
  Edge pattern_edge;  // the H-edge mapped onto the activated pair
  Embedding emb;      // H-vertex -> host vertex
  int round = 0;      // activation round (1-based)
};

/// Result of running the bootstrap dynamics to their fixed point. The
/// universe is V(G), isolated vertices included; rounds hold exactly the
/// edges activated per synchronous step.
struct ClosureTrace {
  Graph final;
  bool complete = false;
  std::vector<std::vector<Edge>> rounds;
  std::unordered_map<long long, Completion> completions;  // key = pair_key(n, e)

  static long long pair_key(int n, Edge e) { return (long long)e.u * n + e.v; }
  bool activated(Edge e) const {
    return completions.count(pair_key(final.vertex_count(), e)) > 0;
  }
};

struct ClosureOptions {
  bool record_trace = false;       // keep per-edge completing copies
  bool early_exit_complete = false;
  bool confirm_sweep = true;       // full rescan after stall to certify the fixed point
};

/// Edges of the complete graph on V(G) that are inactive in G but would be
/// activated by one synchronous step of the H-dynamics.
std::vector<Edge> step(const Graph& H, const Graph& G);

/// Fixed point of step: incremental engine seeded by a full pass, then
/// driven by the edges activated in the previous round.
ClosureTrace closure(const Graph& H, const Graph& G, const ClosureOptions& opts = {});

/// Serial reference engine: rescans every inactive pair each round. Kept as
/// the comparison baseline for the incremental engine.
ClosureTrace closure_reference(const Graph& H, const Graph& G, bool record_trace = false);

/// True iff the closure is the complete graph on V(G). Early-exits on
/// stalls, freezes low-degree vertices, and for clique patterns grows a
/// certified complete set instead of materializing the cascade.
bool percolates(const Graph& H, const Graph& G);

/// Weakly saturated construction for K_r: a clique on r-2 vertices, each
/// later vertex joined to the r-2 most recently added. Edge count is
/// (r-2)n - C(r-1,2).
Graph wsat_bollobas(int n, int r);

}  // namespace percolab
