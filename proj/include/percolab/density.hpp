#pragma once

#include <span>
#include <vector>

#include "percolab/graph.hpp"
#include "percolab/rational.hpp"

namespace percolab {

/// Incremental density of B over A: (e(B) - e(A)) / (v(B) - v(A)).
/// A must be a proper subgraph of B in the shared id space (vertices of A
/// are ids [0, v(A)) of B) with strictly fewer vertices.
Rational rho_pair(const Graph& A, const Graph& B);

struct RhoMaxResult {
  Rational value;
  std::vector<int> witness;  // maximizing vertex set, sorted
};

/// max over anchor ⊊ U ⊆ V(F) of (e(F[U]) - anchor_edges) / (|U| - |anchor|),
/// where F[U] takes every F-edge inside U (adding edges on a fixed vertex
/// set only raises the ratio, so induced supersets suffice). The witness is
/// the unique minimal maximizing set, which is also the smallest and
/// lexicographically least. Small instances run by subset enumeration;
/// larger ones by an exact min-cut iteration — identical results.
RhoMaxResult rho_max_anchored(const Graph& F, std::span<const int> anchor,
                              long long anchor_edges);

/// rho_max over graph-typed arguments; S sits in F as ids [0, v(S)).
RhoMaxResult rho_max(const Graph& S, const Graph& F);

/// 2-density: max over vertex sets U with |U| >= 3 of (e(U)-1)/(|U|-2).
Rational two_density(const Graph& G);

/// (e(H)-2)/(v(H)-2).
Rational lambda_density(const Graph& H);

/// min over vertex sets U with 2 <= |U| < v(H) of (e(H)-e(H[U])-1)/(v(H)-|U|).
Rational lambda_star(const Graph& H);

enum class Balance { strictly_balanced, balanced, unbalanced };
const char* balance_name(Balance b);

/// Compares (e(F)-1)/(v(F)-2) against lambda over proper subgraphs with
/// 3 <= v(F) < v(H). Requires v(H) >= 4.
Balance balance_class(const Graph& H);

struct BetaResult {
  Rational value;
  std::vector<Edge> minimizing_edges;  // edges e with rho_max(empty, H\e) minimal
  std::vector<Graph> family;           // the graphs H\e, deduplicated up to isomorphism
};

/// beta(H) = min over edges e of max over nonempty F <= H\e of e(F)/v(F).
/// Requires H to have a leaf.
BetaResult beta(const Graph& H);

/// Selection value and set for max over U >= forced of b*e(F[U]) - a*|U|,
/// solved by min-cut. `maximal` picks the unique maximal maximizer instead
/// of the minimal one.
struct DensitySelection {
  long long value = 0;
  std::vector<int> verts;  // sorted
};
DensitySelection max_density_closure(const Graph& F, std::span<const int> forced, long long b,
                                     long long a, bool maximal);

/// Throws if H has an isolated vertex (analysis entry points assume none).
void require_no_isolated(const Graph& H, const char* op);

}  // namespace percolab
