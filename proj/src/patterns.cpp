#include "percolab/patterns.hpp"

#include <cctype>

namespace percolab {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int m) {
  if (m < 3) throw DomainError("cycle_graph: need at least 3 vertices");
  Graph g(m);
  for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
  return g;
}

Graph path_graph(int k) {
  if (k < 1) throw DomainError("path_graph: need at least 1 vertex");
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int k) {
  if (k < 1) throw DomainError("star_graph: need at least 1 leaf");
  Graph g(k + 1);
  for (int v = 1; v <= k; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("complete_bipartite: parts must be nonempty");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph paw_graph() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

namespace {

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return std::nullopt;
  if (s.size() > 4) return std::nullopt;
  return std::stoi(s);
}

}  // namespace

std::optional<Graph> builtin_pattern(const std::string& name) {
  if (name == "paw") return paw_graph();
  if (name.rfind("path_", 0) == 0) {
    if (auto k = parse_int(name.substr(5)); k && *k >= 1) return path_graph(*k);
    return std::nullopt;
  }
  if (name.rfind("star_", 0) == 0) {
    if (auto k = parse_int(name.substr(5)); k && *k >= 1) return star_graph(*k);
    return std::nullopt;
  }
  if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C')) {
    std::string body = name.substr(1);
    if (body.size() >= 3 && body.front() == '_' && body[1] == '{' && body.back() == '}')
      body = body.substr(2, body.size() - 3);
    auto comma = body.find(',');
    if (comma != std::string::npos) {
      if (name[0] != 'K') return std::nullopt;
      auto a = parse_int(body.substr(0, comma));
      auto b = parse_int(body.substr(comma + 1));
      if (a && b && *a >= 1 && *b >= 1) return complete_bipartite(*a, *b);
      return std::nullopt;
    }
    auto k = parse_int(body);
    if (!k) return std::nullopt;
    if (name[0] == 'K' && *k >= 1) return complete_graph(*k);
    if (name[0] == 'C' && *k >= 3) return cycle_graph(*k);
  }
  return std::nullopt;
}

}  // namespace percolab
