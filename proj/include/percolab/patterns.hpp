#pragma once

#include <optional>
#include <string>

#include "percolab/graph.hpp"

namespace percolab {

Graph complete_graph(int n);
Graph cycle_graph(int m);
/// Path on k vertices (k - 1 edges).
Graph path_graph(int k);
/// Star K_{1,k}: one hub, k leaves.
Graph star_graph(int k);
Graph complete_bipartite(int a, int b);
/// Triangle plus a pendant edge at vertex 0.
Graph paw_graph();
Graph empty_graph(int n);

/// Resolves builtin pattern names: K2..K99, C3..C99, K_{a,b} (also "Ka,b"),
/// paw, path_k (k vertices), star_k (K_{1,k}). Returns nullopt when the name
/// is not a builtin.
std::optional<Graph> builtin_pattern(const std::string& name);

}  // namespace percolab
