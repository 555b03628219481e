#pragma once

#include <optional>
#include <unordered_map>

#include "percolab/closure.hpp"
#include "percolab/density.hpp"
#include "percolab/rational.hpp"

namespace percolab {

/// A subgraph referenced inside a larger host: explicit vertex and edge
/// lists in the host's id space.
struct SubgraphRef {
  std::vector<int> verts;  // sorted
  std::vector<Edge> edges;  // sorted
};

/// Witness record for one edge: the inclusion-minimal set of initially
/// active edges (black) from which the dynamics re-activate the target, and
/// the activated edges consumed on the way (red, target included).
struct WitnessRecord {
  Edge target;
  std::vector<Edge> black;  // W_e, a subset of E(G)
  std::vector<Edge> red;    // activated edges, contains target when activated
  std::optional<Completion> copy;  // completing copy for activated targets
  bool initially_active = false;
};

/// Runs the trace-mode dynamics once and answers witness / dense-part
/// queries against the recorded completing copies. Union-rule results are
/// memoized per edge.
class WitnessAnalysis {
 public:
  WitnessAnalysis(Graph H, Graph G);

  const Graph& pattern() const { return H_; }
  const Graph& initial() const { return G_; }
  const ClosureTrace& trace() const { return trace_; }

  bool in_closure(Edge e) const { return trace_.final.has_edge(e.u, e.v); }
  bool activated(Edge e) const { return trace_.activated(e); }
  /// 0 for initially active edges, activation round otherwise; throws when
  /// the edge is not in the closure.
  int round_of(Edge e) const;

  /// Witness for an edge of the closure; throws when the target was never
  /// activated nor initially active.
  const WitnessRecord& witness(Edge target);

  /// Dense part tracked along the witness recursion: an inclusion-maximal
  /// subgraph F of the recorded black structure with root edge e and
  /// (e(F)-1)/(v(F)-2) >= rho. `ok` is false when no subgraph of the
  /// recursively built candidate meets the bound (flagged, bare edge); a
  /// failure already at a round-1 copy throws, since the base copy itself
  /// certifies a ratio of at least the true activation density.
  struct DensePart {
    SubgraphRef part;  // includes the root edge
    bool ok = true;
  };
  const DensePart& dense_part(Edge e, const Rational& rho);

 private:
  const WitnessRecord& witness_rec(Edge target, int depth);
  const DensePart& dense_part_rec(Edge e, const Rational& rho, int depth);

  Graph H_;
  Graph G_;
  ClosureTrace trace_;
  std::unordered_map<long long, WitnessRecord> witness_memo_;
  std::unordered_map<long long, DensePart> dense_memo_;
  std::optional<Rational> dense_rho_;  // dense parts are cached per rho value

  long long key(Edge e) const { return ClosureTrace::pair_key(G_.vertex_count(), e); }
};

}  // namespace percolab
