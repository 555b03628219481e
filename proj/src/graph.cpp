#include "percolab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace percolab {

int Graph::degree(int v) const {
  auto r = row(v);
  int d = 0;
  for (std::uint64_t w : r) d += std::popcount(w);
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve((std::size_t)m_);
  for (int u = 0; u < n_; ++u) {
    auto r = row(u);
    for (int w = (u + 1) >> 6; w < words_; ++w) {
      std::uint64_t word = r[w];
      if (w == (u + 1) >> 6) word &= ~0ull << ((u + 1) & 63);
      while (word) {
        int v = (w << 6) + std::countr_zero(word);
        word &= word - 1;
        out.push_back(Edge(u, v));
      }
    }
  }
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word) {
      out.push_back((w << 6) + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

Graph Graph::induced(std::span<const int> verts) const {
  Graph g((int)verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (has_edge(verts[i], verts[j])) g.add_edge((int)i, (int)j);
  return g;
}

Graph Graph::padded(int extra) const {
  if (extra < 0) throw DomainError("Graph::padded: negative padding");
  Graph g(n_ + extra);
  for (const Edge& e : edges()) g.add_edge(e);
  return g;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<int> stack{0};
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n_;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n_, 0);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

long long Graph::cycle_rank() const { return m_ - n_ + (long long)components().size(); }

bool Graph::is_cycle_graph() const {
  if (n_ < 3 || m_ != n_) return false;
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 2) return false;
  return is_connected();
}

bool Graph::has_leaf() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 1) return true;
  return false;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 0) return true;
  return false;
}

bool Graph::contains_edges_of(const Graph& sub) const {
  if (sub.vertex_count() > n_) return false;
  for (const Edge& e : sub.edges())
    if (!has_edge(e.u, e.v)) return false;
  return true;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<char>& used, int next) {
  int n = a.vertex_count();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (a.degree(next) != b.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (a.has_edge(prev, next) != b.has_edge(map[prev], cand)) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (extend_isomorphism(a, b, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  return extend_isomorphism(a, b, map, used, 0);
}

std::string graph_fingerprint(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> sorted_deg = deg;
  std::sort(sorted_deg.begin(), sorted_deg.end());
  std::vector<std::pair<int, int>> edge_degs;
  for (const Edge& e : g.edges()) {
    int x = deg[e.u], y = deg[e.v];
    edge_degs.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edge_degs.begin(), edge_degs.end());
  std::string s = std::to_string(n) + ";" + std::to_string(g.edge_count()) + ";";
  for (int d : sorted_deg) s += std::to_string(d) + ",";
  s += ";";
  for (auto& [x, y] : edge_degs) s += std::to_string(x) + "-" + std::to_string(y) + ",";
  return s;
}

}  // namespace percolab
