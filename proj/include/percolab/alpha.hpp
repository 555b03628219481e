#pragma once

#include <optional>

#include "percolab/density.hpp"
#include "percolab/witness.hpp"

namespace percolab {

struct AlphaDenseResult {
  bool dense = false;
  /// First violating induced-subgraph vertex set in canonical order
  /// (smallest set, then lexicographic), when not dense.
  std::optional<std::vector<int>> violator;
};

/// (e, F) is alpha-dense when every induced subgraph F' with
/// V(e) <= V(F') < V(F) satisfies e(F) - e(F') >= alpha (v(F) - v(F')).
/// F must contain both endpoints of e; the edge e itself may be absent from
/// F (it is added implicitly). Enumerates vertex subsets; capped at 24
/// vertices.
AlphaDenseResult is_alpha_dense(Edge e, const Graph& F, const Rational& alpha);

struct AlphaSparseResult {
  bool sparse = false;
  /// Maximizing vertex set witnessing rho_max(S, F) >= alpha, when not sparse.
  std::optional<std::vector<int>> violator;
};

/// (S, F) is alpha-sparse when rho_max(S, F) < alpha. Vacuously sparse when
/// F adds no vertices over S.
AlphaSparseResult is_alpha_sparse(const Graph& S, const Graph& F, const Rational& alpha);
AlphaSparseResult is_alpha_sparse_anchored(const Graph& F, std::span<const int> anchor,
                                           long long anchor_edges, const Rational& alpha);

struct CoreResult {
  /// The core C_e: the unique maximal F with e in F <= A u e and (e, F)
  /// alpha-dense, minus the edge e itself. Empty (just the endpoints of e)
  /// when no such F exists.
  SubgraphRef core;
  bool dense_pair_ok = false;  // true when the core is nonempty
  /// The maximal alpha-dense F (core plus the root edge), when nonempty.
  std::optional<SubgraphRef> certificate;
};

/// Alpha-core of (e, A): vertex ids live in A's id space; both endpoints of
/// e must be vertices of A. Exact subset enumeration, capped at 24 vertices.
CoreResult alpha_core(Edge e, const Graph& A, const Rational& alpha);

/// Modified core of an activated edge f: the union of the cores of the
/// edges of f's completing copy, where initially active edges contribute
/// themselves and activated edges g contribute the alpha-core of
/// (g, W_g). Throws for initially active f.
SubgraphRef modified_core(Edge f, WitnessAnalysis& analysis, const Rational& alpha);

}  // namespace percolab
