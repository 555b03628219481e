#include "percolab/density.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace percolab {

namespace {

constexpr int kSubsetCap = 24;      // hard cap for plain subset enumeration ops
constexpr int kEnumFreeLimit = 18;  // rho_max switches to min-cut above this many free vertices

long long induced_edges_prefix(const Graph& g, const std::vector<int>& verts) {
  long long e = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) ++e;
  return e;
}

// ---- max-flow (Dinic) for density selections -------------------------------

struct Dinic {
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> level, iter;

  explicit Dinic(int n) : g(n), level(n), iter(n) {}

  void add(int from, int to, long long cap) {
    g[from].push_back({to, cap, (int)g[to].size()});
    g[to].push_back({from, 0, (int)g[from].size() - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : g[v])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < (int)g[v].size(); ++i) {
      Arc& a = g[v][i];
      if (a.cap > 0 && level[v] < level[a.to]) {
        long long d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          g[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
    }
    return flow;
  }

  // Vertices reachable from s in the residual network (minimal source side).
  std::vector<char> reachable(int s) {
    std::vector<char> seen(g.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : g[v])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    return seen;
  }

  // Complement of the set that reaches t in the residual network
  // (maximal source side).
  std::vector<char> coreachable_complement(int t) {
    std::vector<char> reach_t(g.size(), 0);
    std::vector<int> stack{t};
    reach_t[t] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int i = 0; i < (int)g[v].size(); ++i) {
        // arc u->v with residual>0 means u can reach t through v
        const Arc& back = g[v][i];
        const Arc& fwd = g[back.to][back.rev];
        if (fwd.cap > 0 && !reach_t[back.to]) {
          reach_t[back.to] = 1;
          stack.push_back(back.to);
        }
      }
    }
    for (auto& c : reach_t) c = !c;
    return reach_t;
  }
};

}  // namespace

DensitySelection max_density_closure(const Graph& F, std::span<const int> forced, long long b,
                                     long long a, bool maximal) {
  if (b <= 0) throw DomainError("max_density_closure: nonpositive scale");
  if (a < 0) throw DomainError("max_density_closure: negative vertex cost");
  const int n = F.vertex_count();
  const std::vector<Edge> edges = F.edges();
  const long long INF = std::numeric_limits<long long>::max() / 4;
  // node ids: 0 = source, 1 = sink, 2..2+m-1 = edge items, 2+m.. = vertices
  const int m = (int)edges.size();
  Dinic net(2 + m + n);
  for (int i = 0; i < m; ++i) {
    net.add(0, 2 + i, b);
    net.add(2 + i, 2 + m + edges[i].u, INF);
    net.add(2 + i, 2 + m + edges[i].v, INF);
  }
  for (int v = 0; v < n; ++v) net.add(2 + m + v, 1, a);
  for (int v : forced) net.add(0, 2 + m + v, INF);
  net.max_flow(0, 1);
  std::vector<char> side = maximal ? net.coreachable_complement(1) : net.reachable(0);
  DensitySelection sel;
  for (int v = 0; v < n; ++v)
    if (side[2 + m + v]) sel.verts.push_back(v);
  long long e_sel = 0;
  for (const Edge& e : edges)
    if (side[2 + m + e.u] && side[2 + m + e.v]) ++e_sel;
  sel.value = b * e_sel - a * (long long)sel.verts.size();
  return sel;
}

namespace {

// rho_max by subset enumeration over the free vertices; canonical witness.
RhoMaxResult rho_max_enumerate(const Graph& F, std::span<const int> anchor,
                               long long anchor_edges) {
  const int n = F.vertex_count();
  std::vector<char> in_anchor(n, 0);
  for (int v : anchor) in_anchor[v] = 1;
  std::vector<int> free_verts;
  for (int v = 0; v < n; ++v)
    if (!in_anchor[v]) free_verts.push_back(v);
  const int f = (int)free_verts.size();

  // per free vertex: adjacency to anchor (count) and to other free vertices (mask)
  std::vector<long long> anchor_deg(f, 0);
  std::vector<std::uint32_t> adj(f, 0);
  for (int i = 0; i < f; ++i) {
    for (int v : anchor)
      if (F.has_edge(free_verts[i], v)) ++anchor_deg[i];
    for (int j = 0; j < i; ++j)
      if (F.has_edge(free_verts[i], free_verts[j])) adj[i] |= 1u << j;
  }
  long long anchor_induced = induced_edges_prefix(F, std::vector<int>(anchor.begin(), anchor.end()));

  bool found = false;
  long long best_num = 0, best_den = 1;
  std::uint32_t best_mask = 0;
  int best_size = 0;
  for (std::uint32_t mask = 1; mask < (1u << f); ++mask) {
    long long e = anchor_induced;
    int size = std::popcount(mask);
    std::uint32_t rest = mask;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      e += anchor_deg[i] + std::popcount(adj[i] & mask);
    }
    long long num = e - anchor_edges;
    long long den = size;  // |U| - |anchor|
    bool better;
    if (!found) {
      better = true;
    } else {
      __int128 lhs = (__int128)num * best_den, rhs = (__int128)best_num * den;
      if (lhs != rhs) {
        better = lhs > rhs;
      } else if (size != best_size) {
        better = size < best_size;
      } else if (mask != best_mask) {
        // lexicographic vertex-list comparison on exact ties
        std::uint32_t x = mask, y = best_mask;
        better = false;
        while (x && y) {
          int ix = std::countr_zero(x), iy = std::countr_zero(y);
          if (ix != iy) {
            better = ix < iy;
            break;
          }
          x &= x - 1;
          y &= y - 1;
        }
      } else {
        better = false;
      }
    }
    if (better) {
      found = true;
      best_num = num;
      best_den = den;
      best_mask = mask;
      best_size = size;
    }
  }
  RhoMaxResult res;
  res.value = Rational(best_num, best_den);
  res.witness.assign(anchor.begin(), anchor.end());
  for (int i = 0; i < f; ++i)
    if ((best_mask >> i) & 1) res.witness.push_back(free_verts[i]);
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

RhoMaxResult rho_max_flow(const Graph& F, std::span<const int> anchor, long long anchor_edges) {
  const int n = F.vertex_count();
  const int s = (int)anchor.size();
  std::vector<char> in_anchor(n, 0);
  for (int v : anchor) in_anchor[v] = 1;

  auto ratio_of = [&](const std::vector<int>& verts) {
    long long e = induced_edges_prefix(F, verts);
    return Rational(e - anchor_edges, (long long)verts.size() - s);
  };

  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  Rational lam = ratio_of(all);
  std::vector<int> best = all;

  bool converged = false;
  // Newton iteration on the piecewise-linear envelope; the active slope
  // (set size) strictly changes, so n+2 rounds suffice.
  for (int iter = 0; iter < 4 * n + 8; ++iter) {
    long long b = lam.den(), a = lam.num();
    if (a < 0) a = 0, b = 1;  // selection needs a >= 0; ratios here are >= 0 anyway
    const long long threshold = b * anchor_edges - a * s;
    long long best_val = std::numeric_limits<long long>::min();
    std::vector<int> forced(anchor.begin(), anchor.end());
    forced.push_back(-1);
    std::vector<std::vector<int>> winners;
    for (int w = 0; w < n; ++w) {
      if (in_anchor[w]) continue;
      forced.back() = w;
      DensitySelection sel = max_density_closure(F, forced, b, a, /*maximal=*/false);
      if (sel.value > best_val) {
        best_val = sel.value;
        winners.clear();
        winners.push_back(std::move(sel.verts));
      } else if (sel.value == best_val) {
        winners.push_back(std::move(sel.verts));
      }
    }
    auto canonical_min = [&]() {
      std::size_t pick = 0;
      for (std::size_t i = 1; i < winners.size(); ++i) {
        if (winners[i].size() < winners[pick].size() ||
            (winners[i].size() == winners[pick].size() && winners[i] < winners[pick]))
          pick = i;
      }
      return winners[pick];
    };
    if (best_val > threshold) {
      best = canonical_min();
      lam = ratio_of(best);
      continue;
    }
    // best_val == threshold: lam is the exact maximum; pick canonical witness
    best = canonical_min();
    converged = true;
    break;
  }
  if (!converged) throw DomainError("rho_max: ratio iteration failed to converge");
  RhoMaxResult res;
  res.value = ratio_of(best);
  res.witness = best;
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

}  // namespace

RhoMaxResult rho_max_anchored(const Graph& F, std::span<const int> anchor,
                              long long anchor_edges) {
  const int n = F.vertex_count();
  const int s = (int)anchor.size();
  if (n <= s) throw DomainError("rho_max: anchor exhausts the graph (degenerate pair)");
  for (int v : anchor)
    if (v < 0 || v >= n) throw DomainError("rho_max: anchor vertex out of range");
  if (n - s <= kEnumFreeLimit) return rho_max_enumerate(F, anchor, anchor_edges);
  return rho_max_flow(F, anchor, anchor_edges);
}

Rational rho_pair(const Graph& A, const Graph& B) {
  if (A.vertex_count() > B.vertex_count() || !B.contains_edges_of(A))
    throw DomainError("rho_pair: A is not a subgraph of B");
  if (A.vertex_count() == B.vertex_count())
    throw DomainError("rho_pair: degenerate pair (equal vertex counts)");
  return Rational(B.edge_count() - A.edge_count(),
                  (long long)B.vertex_count() - A.vertex_count());
}

RhoMaxResult rho_max(const Graph& S, const Graph& F) {
  if (S.vertex_count() > F.vertex_count() || !F.contains_edges_of(S))
    throw DomainError("rho_max: S is not a subgraph of F");
  if (S.vertex_count() == F.vertex_count())
    throw DomainError("rho_max: degenerate pair (equal vertex counts)");
  std::vector<int> anchor(S.vertex_count());
  for (int i = 0; i < S.vertex_count(); ++i) anchor[i] = i;
  return rho_max_anchored(F, anchor, S.edge_count());
}

Rational two_density(const Graph& G) {
  const int n = G.vertex_count();
  if (n < 3) throw DomainError("two_density: need at least 3 vertices");
  if (n > kSubsetCap) throw DomainError("two_density: vertex count exceeds enumeration cap");
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : G.edges()) {
    adj[e.v] |= 1u << e.u;
  }
  bool found = false;
  long long bn = 0, bd = 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size < 3) continue;
    long long e = 0;
    std::uint32_t rest = mask;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      e += std::popcount(adj[i] & mask);
    }
    long long num = e - 1, den = size - 2;
    if (!found || (__int128)num * bd > (__int128)bn * den) {
      found = true;
      bn = num;
      bd = den;
    }
  }
  return Rational(bn, bd);
}

Rational lambda_density(const Graph& H) {
  require_no_isolated(H, "lambda");
  if (H.vertex_count() < 3) throw DomainError("lambda: need at least 3 vertices");
  return Rational(H.edge_count() - 2, H.vertex_count() - 2);
}

Rational lambda_star(const Graph& H) {
  require_no_isolated(H, "lambda_star");
  const int n = H.vertex_count();
  if (n < 3) throw DomainError("lambda_star: need at least 3 vertices");
  if (n > kSubsetCap) throw DomainError("lambda_star: vertex count exceeds enumeration cap");
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : H.edges()) adj[e.v] |= 1u << e.u;
  const long long m = H.edge_count();
  bool found = false;
  long long bn = 0, bd = 1;
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size < 2) continue;
    long long e = 0;
    std::uint32_t rest = mask;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      e += std::popcount(adj[i] & mask);
    }
    long long num = m - e - 1, den = n - size;
    if (!found || (__int128)num * bd < (__int128)bn * den) {
      found = true;
      bn = num;
      bd = den;
    }
  }
  return Rational(bn, bd);
}

const char* balance_name(Balance b) {
  switch (b) {
    case Balance::strictly_balanced:
      return "strictly-balanced";
    case Balance::balanced:
      return "balanced";
    case Balance::unbalanced:
      return "unbalanced";
  }
  return "?";
}

Balance balance_class(const Graph& H) {
  require_no_isolated(H, "balance_class");
  const int n = H.vertex_count();
  if (n < 4) throw DomainError("balance_class: need at least 4 vertices");
  if (n > kSubsetCap) throw DomainError("balance_class: vertex count exceeds enumeration cap");
  Rational lam = lambda_density(H);
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : H.edges()) adj[e.v] |= 1u << e.u;
  bool strict = true, bal = true;
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size < 3) continue;
    long long e = 0;
    std::uint32_t rest = mask;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      e += std::popcount(adj[i] & mask);
    }
    Rational r(e - 1, size - 2);
    if (r > lam) {
      bal = false;
      break;
    }
    if (r == lam) strict = false;
  }
  if (!bal) return Balance::unbalanced;
  return strict ? Balance::strictly_balanced : Balance::balanced;
}

BetaResult beta(const Graph& H) {
  require_no_isolated(H, "beta");
  if (!H.has_leaf()) throw DomainError("beta: H has no leaf (vertex of degree 1)");
  BetaResult out;
  bool found = false;
  std::vector<std::pair<Edge, Graph>> minimizers;
  for (const Edge& e : H.edges()) {
    Graph He = H;
    He.remove_edge(e);
    Rational r(0, 1);
    if (He.edge_count() > 0) r = rho_max_anchored(He, {}, 0).value;
    if (!found || r < out.value) {
      found = true;
      out.value = r;
      minimizers.clear();
      minimizers.emplace_back(e, He);
    } else if (r == out.value) {
      minimizers.emplace_back(e, He);
    }
  }
  for (auto& [e, g] : minimizers) {
    out.minimizing_edges.push_back(e);
    bool dup = false;
    for (const Graph& have : out.family)
      if (graphs_isomorphic(have, g)) {
        dup = true;
        break;
      }
    if (!dup) out.family.push_back(g);
  }
  return out;
}

void require_no_isolated(const Graph& H, const char* op) {
  if (H.has_isolated_vertex())
    throw DomainError(std::string(op) + ": H has isolated vertices; remove them first");
}

}  // namespace percolab
