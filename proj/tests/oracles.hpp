// Independent brute-force oracles used to cross-check the library. These
// deliberately avoid the library's matcher/flow machinery: plain recursion
// over injective maps and plain subset loops.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "percolab/graph.hpp"
#include "percolab/rational.hpp"

namespace oracle {

using percolab::Edge;
using percolab::Graph;
using percolab::Rational;

// Is there an injective map of V(H) into V(G) sending eH to (a,b) such that
// every H-edge except eH lands on a G-edge?
inline bool extend_map(const Graph& H, Edge eH, const Graph& G, std::vector<int>& map,
                       std::vector<char>& used, int next) {
  int k = H.vertex_count();
  while (next < k && map[next] >= 0) ++next;
  if (next == k) return true;
  for (int cand = 0; cand < G.vertex_count(); ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < k && ok; ++prev) {
      if (map[prev] < 0 || prev == next) continue;
      if (!H.has_edge(prev, next)) continue;
      if (Edge(prev, next) == eH) continue;
      if (!G.has_edge(map[prev], cand)) ok = false;
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (extend_map(H, eH, G, map, used, next)) return true;
    map[next] = -1;
    used[cand] = 0;
  }
  return false;
}

inline bool completes_copy(const Graph& H, const Graph& G, Edge e) {
  int k = H.vertex_count();
  if (k > G.vertex_count()) return false;
  for (const Edge& eH : H.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<int> map(k, -1);
      std::vector<char> used(G.vertex_count(), 0);
      map[eH.u] = flip ? e.v : e.u;
      map[eH.v] = flip ? e.u : e.v;
      used[map[eH.u]] = 1;
      used[map[eH.v]] = 1;
      // check H-edges inside the premapped pair
      if (extend_map(H, eH, G, map, used, 0)) return true;
    }
  }
  return false;
}

inline std::vector<Edge> step(const Graph& H, const Graph& G) {
  std::vector<Edge> out;
  if (H.edge_count() == 0) return out;
  for (int u = 0; u < G.vertex_count(); ++u)
    for (int v = u + 1; v < G.vertex_count(); ++v)
      if (!G.has_edge(u, v) && completes_copy(H, G, Edge(u, v))) out.push_back(Edge(u, v));
  return out;
}

struct ClosureResult {
  Graph final;
  std::vector<std::vector<Edge>> rounds;
};

inline ClosureResult closure(const Graph& H, const Graph& G) {
  ClosureResult res;
  res.final = G;
  while (true) {
    std::vector<Edge> acts = step(H, res.final);
    if (acts.empty()) break;
    for (const Edge& e : acts) res.final.add_edge(e);
    res.rounds.push_back(std::move(acts));
  }
  return res;
}

inline bool percolates(const Graph& H, const Graph& G) { return closure(H, G).final.is_complete(); }

// max over anchor < U <= V(F) of (e(F[U]) - anchor_edges)/(|U| - |anchor|),
// by plain subset enumeration. Returns nullopt when no proper superset
// exists. Also reports the canonical (smallest, then lexicographic least)
// maximizer.
struct RhoMaxOracle {
  Rational value;
  std::vector<int> witness;
};

inline std::optional<RhoMaxOracle> rho_max(const Graph& F, const std::vector<int>& anchor,
                                           long long anchor_edges) {
  int n = F.vertex_count();
  std::vector<char> in_anchor(n, 0);
  for (int v : anchor) in_anchor[v] = 1;
  std::vector<int> free_verts;
  for (int v = 0; v < n; ++v)
    if (!in_anchor[v]) free_verts.push_back(v);
  int f = (int)free_verts.size();
  if (f == 0) return std::nullopt;
  std::optional<RhoMaxOracle> best;
  for (unsigned mask = 1; mask < (1u << f); ++mask) {
    std::vector<int> verts(anchor.begin(), anchor.end());
    for (int i = 0; i < f; ++i)
      if ((mask >> i) & 1) verts.push_back(free_verts[i]);
    std::sort(verts.begin(), verts.end());
    long long e = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (F.has_edge(verts[i], verts[j])) ++e;
    Rational r(e - anchor_edges, (long long)verts.size() - (long long)anchor.size());
    if (!best || r > best->value ||
        (r == best->value && (verts.size() < best->witness.size() ||
                              (verts.size() == best->witness.size() && verts < best->witness)))) {
      best = RhoMaxOracle{r, verts};
    }
  }
  return best;
}

// Same maximum taken over every subgraph (each vertex subset with each edge
// subset); feasible only for small inputs. Used to confirm that induced
// supersets attain the maximum.
inline std::optional<Rational> rho_max_all_subgraphs(const Graph& F, const std::vector<int>& anchor,
                                                     long long anchor_edges) {
  int n = F.vertex_count();
  std::vector<char> in_anchor(n, 0);
  for (int v : anchor) in_anchor[v] = 1;
  std::vector<int> free_verts;
  for (int v = 0; v < n; ++v)
    if (!in_anchor[v]) free_verts.push_back(v);
  int f = (int)free_verts.size();
  std::optional<Rational> best;
  for (unsigned mask = 1; mask < (1u << f); ++mask) {
    std::vector<int> verts(anchor.begin(), anchor.end());
    for (int i = 0; i < f; ++i)
      if ((mask >> i) & 1) verts.push_back(free_verts[i]);
    std::vector<Edge> inside;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (F.has_edge(verts[i], verts[j])) inside.push_back(Edge(verts[i], verts[j]));
    if (inside.size() > 20) return std::nullopt;  // caller keeps instances tiny
    for (unsigned emask = 0; emask < (1u << inside.size()); ++emask) {
      long long e = __builtin_popcount(emask);
      Rational r(e - anchor_edges, (long long)verts.size() - (long long)anchor.size());
      if (!best || r > *best) best = r;
    }
  }
  return best;
}

// All alpha-dense supersets of e inside A (with the edge e added), their
// union, by the direct nested definition.
inline bool alpha_dense_direct(Edge e, const Graph& F, const Rational& alpha) {
  // F contains both endpoints of e; edge e itself included implicitly
  Graph Fe = F;
  if (!Fe.has_edge(e.u, e.v)) Fe.add_edge(e.u, e.v);
  int n = Fe.vertex_count();
  std::vector<int> free_verts;
  for (int v = 0; v < n; ++v)
    if (v != e.u && v != e.v) free_verts.push_back(v);
  int f = (int)free_verts.size();
  long long etotal = Fe.edge_count();
  for (unsigned mask = 0; mask + 1 < (1u << f) || (f == 0 && mask == 0); ++mask) {
    if (f == 0) break;  // no proper induced subgraph containing e exists
    std::vector<int> verts{e.u, e.v};
    for (int i = 0; i < f; ++i)
      if ((mask >> i) & 1) verts.push_back(free_verts[i]);
    long long esub = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (Fe.has_edge(verts[i], verts[j])) ++esub;
    long long dv = f - __builtin_popcount(mask);
    if (Rational(etotal - esub, 1) < alpha * Rational(dv, 1)) return false;
  }
  return true;
}

struct CoreOracle {
  std::vector<int> verts;  // union of all dense candidates; {e.u,e.v} when none
  bool nonempty = false;
};

inline CoreOracle alpha_core(Edge e, const Graph& A, const Rational& alpha) {
  Graph Ae = A;
  if (!Ae.has_edge(e.u, e.v)) Ae.add_edge(e.u, e.v);
  int n = Ae.vertex_count();
  std::vector<int> free_verts;
  for (int v = 0; v < n; ++v)
    if (v != e.u && v != e.v) free_verts.push_back(v);
  int f = (int)free_verts.size();
  std::vector<char> keep(n, 0);
  bool any = false;
  for (unsigned mask = 1; mask < (1u << f); ++mask) {
    std::vector<int> verts{e.u, e.v};
    for (int i = 0; i < f; ++i)
      if ((mask >> i) & 1) verts.push_back(free_verts[i]);
    Graph sub = Ae;  // restrict by checking density on the induced set
    // build induced graph on verts in A-e ids
    Graph ind(n);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (Ae.has_edge(verts[i], verts[j])) ind.add_edge(verts[i], verts[j]);
    // check alpha-density of (e, ind restricted to verts)
    std::vector<int> inner;
    for (int v : verts)
      if (v != e.u && v != e.v) inner.push_back(v);
    bool dense = true;
    for (unsigned sub_mask = 0; sub_mask + 1 < (1u << inner.size()) || inner.empty(); ++sub_mask) {
      if (inner.empty()) break;
      std::vector<int> sverts{e.u, e.v};
      for (std::size_t i = 0; i < inner.size(); ++i)
        if ((sub_mask >> i) & 1) sverts.push_back(inner[i]);
      long long efull = 0, esub = 0;
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
          if (Ae.has_edge(verts[i], verts[j])) ++efull;
      for (std::size_t i = 0; i < sverts.size(); ++i)
        for (std::size_t j = i + 1; j < sverts.size(); ++j)
          if (Ae.has_edge(sverts[i], sverts[j])) ++esub;
      long long dv = (long long)verts.size() - (long long)sverts.size();
      if (Rational(efull - esub, 1) < alpha * Rational(dv, 1)) {
        dense = false;
        break;
      }
    }
    if (dense) {
      any = true;
      for (int v : verts) keep[v] = 1;
    }
  }
  CoreOracle out;
  out.nonempty = any;
  if (any) {
    for (int v = 0; v < n; ++v)
      if (keep[v]) out.verts.push_back(v);
  } else {
    out.verts = {std::min(e.u, e.v), std::max(e.u, e.v)};
  }
  return out;
}

}  // namespace oracle
