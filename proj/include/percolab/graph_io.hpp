#pragma once

#include <string>

#include "percolab/graph.hpp"

namespace percolab {

enum class GraphFormat { graph6, edge_list };

/// Parses `text` in the declared format.
/// Edge-list text is one "u v" pair per line (0-based vertex ids); blank
/// lines are allowed. `vertex_hint`, when >= 0, fixes the vertex count so
/// trailing isolated vertices survive a round trip (default: max id + 1).
Graph parse_graph(const std::string& text, GraphFormat format, int vertex_hint = -1);

Graph parse_graph6(const std::string& text);
Graph parse_edge_list(const std::string& text, int vertex_hint = -1);

std::string to_graph6(const Graph& g);
/// Canonical edge-list serialization: sorted "u v" lines.
std::string to_edge_list(const Graph& g);

}  // namespace percolab
