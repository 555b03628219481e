#pragma once

#include <optional>
#include <string>

#include "percolab/density.hpp"
#include "percolab/graph.hpp"

namespace percolab {

/// Upper-bound certificate for the critical activation density: a graph A
/// and a target edge e missing from A such that the dynamics started from A
/// activate e; `bound` is the exact rooted density rho_max(e, A u e), an
/// upper bound on the activation density of H.
struct RhoCertificate {
  Edge e;
  Graph A;  // target edge absent; e's endpoints are vertices of A
  Rational bound;
  std::vector<int> maximizer;  // vertex set attaining the bound
  std::string provenance;      // "ladder" | "single" | "leaf-family" | "cycle-gadget" | "glue" | "single-edge"
  int copies = 1;              // pattern copies used by the construction
};

/// H-ladder of height h: h copies of H chained so adjacent copies share one
/// edge; all shared edges and one end edge are removed, and the dynamics
/// re-activate them from the far end inward. `shared` is the pattern edge
/// each new copy glues with (its image in the first copy is the returned
/// target). Activation is verified by running the dynamics; a failing
/// construction throws.
RhoCertificate ladder(const Graph& H, Edge shared, int height);

struct SpecialRho {
  bool infinite = false;  // no activating pair exists at all
  Rational value;         // meaningful when !infinite
  std::string reason;
};

/// Exact activation density for the decided classes: edgeless, single-edge,
/// leafed (with the sparse-forest refinement), cycles and graphs whose
/// cycles are separated by one edge, and balanced graphs. nullopt when H
/// falls in no decided class.
std::optional<SpecialRho> rho_exact_special(const Graph& H);

struct SearchBudget {
  int max_copies = 6;       // pattern copies glued per candidate
  int max_vertices = 48;    // candidate graph size cap
  int max_candidates = 512; // evaluated candidates cap
};

/// Best-first certificate search: singles, ladders over shared-edge choices,
/// disjoint-family gadgets for leafed H, triangle-plus-path gadgets for
/// cycles, and edge-glued copies. Always returns a closure-verified
/// certificate; the bound is at least the true activation density and is
/// nonincreasing in the budget.
RhoCertificate rho_upper_bound(const Graph& H, const SearchBudget& budget = {});

}  // namespace percolab
