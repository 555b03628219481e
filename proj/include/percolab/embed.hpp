#pragma once

#include <functional>
#include <span>
#include <vector>

#include "percolab/graph.hpp"

namespace percolab {

/// Injective vertex map from a pattern graph into a host graph.
struct Embedding {
  std::vector<int> map;  // pattern vertex -> host vertex
};

/// Per-thread scratch for the matcher; reuse across calls to avoid
/// allocation in inner loops.
struct MatchWorkspace {
  std::vector<std::uint64_t> buf;
  std::vector<std::uint64_t> used;
  std::vector<int> map;
};

/// Backtracking matcher for a pattern with a pre-mapped anchor vertex set.
/// Pattern edges with both endpoints inside the anchor are exempt from
/// matching (they are the caller's business); every other pattern edge must
/// land on a host edge. Non-anchor image vertices are pairwise distinct and
/// distinct from the anchor; anchor vertices are not required to be adjacent
/// in the host.
///
/// Assignment order after the anchor: descending pattern degree, ties by
/// ascending id. Host candidates are scanned in ascending id, so the first
/// embedding found is canonical.
class AnchoredMatcher {
 public:
  AnchoredMatcher(const Graph& pattern, std::span<const int> anchor);
  AnchoredMatcher(const Graph& pattern, Edge anchor_edge);

  int pattern_size() const { return k_; }
  int anchor_size() const { return a_; }

  bool exists(const Graph& host, std::span<const int> anchor_host, MatchWorkspace& ws) const;
  bool first(const Graph& host, std::span<const int> anchor_host, MatchWorkspace& ws,
             Embedding& out) const;
  /// Visits embeddings in canonical order until cb returns false.
  void enumerate(const Graph& host, std::span<const int> anchor_host, MatchWorkspace& ws,
                 const std::function<bool(const Embedding&)>& cb) const;

  /// One-missing sweep: finds every copy of the pattern anchored as given in
  /// which exactly one non-exempt pattern edge lands on an inactive host
  /// pair and all others are active, and emits that pair. Duplicate
  /// emissions are possible; callers dedupe.
  void propagate(const Graph& host, std::span<const int> anchor_host, MatchWorkspace& ws,
                 const std::function<void(int, int)>& emit) const;

 private:
  void init(const Graph& pattern, std::span<const int> anchor);
  bool prepare(const Graph& host, std::span<const int> anchor_host, MatchWorkspace& ws) const;
  bool search(const Graph& host, MatchWorkspace& ws, int slot, Embedding* out,
              const std::function<bool(const Embedding&)>* cb, bool* stop) const;
  void propagate_rec(const Graph& host, MatchWorkspace& ws, int slot,
                     const std::function<void(int, int)>& emit) const;

  int k_ = 0;  // pattern vertex count
  int a_ = 0;  // anchor size
  std::vector<int> order_;              // slot -> pattern vertex; slots [0,a_) are the anchor
  std::vector<std::vector<int>> reqs_;  // slot -> earlier slots that must be host-adjacent
};

/// Reusable per-pair completion test: does some copy of H through the pair e
/// have all its non-e edges in G? Anchors at edge-orbit representatives of H
/// (or at every edge when `all_edges`, which makes first() canonical).
class CompletionTester {
 public:
  explicit CompletionTester(const Graph& H, bool all_edges = false);
  bool exists(const Graph& G, Edge e, MatchWorkspace& ws) const;
  /// Canonical completing copy: pattern edges in sorted order, orientation
  /// (e.u,e.v) before (e.v,e.u), host candidates ascending.
  bool first(const Graph& G, Edge e, MatchWorkspace& ws, Embedding& out, Edge& pattern_edge) const;
  /// One-missing sweep around a freshly activated edge f (see
  /// AnchoredMatcher::propagate), over all anchor representatives.
  void propagate(const Graph& G, Edge f, MatchWorkspace& ws,
                 const std::function<void(int, int)>& emit) const;

  const std::vector<Edge>& anchor_edges() const { return anchors_; }

 private:
  std::vector<Edge> anchors_;
  std::vector<AnchoredMatcher> matchers_;
};

/// Labeled embeddings of H into the complete graph on V(G) that map the
/// pattern edge eH onto the host pair eG (both anchor orientations tried,
/// (eG.u,eG.v) first) such that every H-edge except eH lands on an edge of
/// G. Yields until cb returns false.
void enumerate_anchored_copies(const Graph& H, Edge eH, const Graph& G, Edge eG,
                               const std::function<bool(const Embedding&)>& cb);

/// Number of distinct copies (image edge sets) in the stream above.
long long count_anchored_copies(const Graph& H, Edge eH, const Graph& G, Edge eG);

/// Unanchored subgraph containment (not induced).
bool subgraph_exists(const Graph& pattern, const Graph& host);

/// Edge-orbit representatives of H under its automorphism group, computed by
/// brute force for v(H) <= 9; beyond that every edge is its own orbit.
std::vector<Edge> edge_orbit_representatives(const Graph& H);

}  // namespace percolab
