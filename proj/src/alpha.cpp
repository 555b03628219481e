#include "percolab/alpha.hpp"

#include <algorithm>
#include <bit>

namespace percolab {

namespace {

constexpr int kCap = 24;

// Induced edge count per free-vertex mask plus anchored extras; shared by
// the subset sweeps below.
struct SubsetCounter {
  std::vector<int> free_verts;
  std::vector<long long> anchor_deg;
  std::vector<std::uint32_t> adj;
  long long anchor_induced = 0;

  SubsetCounter(const Graph& g, std::span<const int> anchor) {
    std::vector<char> in_anchor(g.vertex_count(), 0);
    for (int v : anchor) in_anchor[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!in_anchor[v]) free_verts.push_back(v);
    anchor_deg.assign(free_verts.size(), 0);
    adj.assign(free_verts.size(), 0);
    for (std::size_t i = 0; i < free_verts.size(); ++i) {
      for (int v : anchor)
        if (g.has_edge(free_verts[i], v)) ++anchor_deg[i];
      for (std::size_t j = 0; j < i; ++j)
        if (g.has_edge(free_verts[i], free_verts[j])) adj[i] |= 1u << j;
    }
    for (std::size_t i = 0; i < anchor.size(); ++i)
      for (std::size_t j = i + 1; j < anchor.size(); ++j)
        if (g.has_edge(anchor[i], anchor[j])) ++anchor_induced;
  }

  long long edges(std::uint32_t mask) const {
    long long e = anchor_induced;
    std::uint32_t rest = mask;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      e += anchor_deg[i] + std::popcount(adj[i] & mask);
    }
    return e;
  }
};

// Visits free-vertex subsets in canonical order (size ascending, then
// lexicographic vertex list) until the visitor returns false.
template <typename F>
void for_each_subset_canonical(int f, const F& visit) {
  std::vector<int> combo;
  // size 0
  if (!visit(std::uint32_t{0})) return;
  for (int k = 1; k <= f; ++k) {
    combo.assign(k, 0);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int i : combo) mask |= 1u << i;
      if (!visit(mask)) return;
      int pos = k - 1;
      while (pos >= 0 && combo[pos] == f - k + pos) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
}

}  // namespace

AlphaDenseResult is_alpha_dense(Edge e, const Graph& F, const Rational& alpha) {
  const int n = F.vertex_count();
  if (e.u >= n || e.v >= n) throw DomainError("is_alpha_dense: edge endpoints outside F");
  if (n > kCap) throw DomainError("is_alpha_dense: vertex count exceeds enumeration cap");
  Graph Fe = F;
  Fe.add_edge(e.u, e.v);  // root edge implicit
  int anchor[2] = {e.u, e.v};
  SubsetCounter counter(Fe, std::span<const int>(anchor, 2));
  const int f = (int)counter.free_verts.size();
  const long long total_e = Fe.edge_count();
  const long long a = alpha.num(), b = alpha.den();
  const std::uint32_t full = f == 32 ? ~0u : ((1u << f) - 1);

  AlphaDenseResult res;
  res.dense = true;
  for_each_subset_canonical(f, [&](std::uint32_t mask) {
    if (mask == full) return true;  // proper subgraphs only
    long long e_sub = counter.edges(mask);
    long long dv = (long long)(f - std::popcount(mask));
    // violation: e(F) - e(F') < alpha * (v(F) - v(F'))
    if (b * (total_e - e_sub) < a * dv) {
      res.dense = false;
      std::vector<int> set{e.u, e.v};
      std::uint32_t rest = mask;
      while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        set.push_back(counter.free_verts[i]);
      }
      std::sort(set.begin(), set.end());
      res.violator = std::move(set);
      return false;
    }
    return true;
  });
  return res;
}

AlphaSparseResult is_alpha_sparse_anchored(const Graph& F, std::span<const int> anchor,
                                           long long anchor_edges, const Rational& alpha) {
  AlphaSparseResult res;
  if (F.vertex_count() <= (int)anchor.size()) {
    res.sparse = true;  // no proper vertex superset exists
    return res;
  }
  RhoMaxResult rm = rho_max_anchored(F, anchor, anchor_edges);
  if (rm.value < alpha) {
    res.sparse = true;
  } else {
    res.sparse = false;
    res.violator = rm.witness;
  }
  return res;
}

AlphaSparseResult is_alpha_sparse(const Graph& S, const Graph& F, const Rational& alpha) {
  if (S.vertex_count() > F.vertex_count() || !F.contains_edges_of(S))
    throw DomainError("is_alpha_sparse: S is not a subgraph of F");
  std::vector<int> anchor(S.vertex_count());
  for (int i = 0; i < S.vertex_count(); ++i) anchor[i] = i;
  return is_alpha_sparse_anchored(F, anchor, S.edge_count(), alpha);
}

CoreResult alpha_core(Edge e, const Graph& A, const Rational& alpha) {
  const int n = A.vertex_count();
  if (e.u >= n || e.v >= n) throw DomainError("alpha_core: edge endpoints outside A");
  if (n > kCap) throw DomainError("alpha_core: vertex count exceeds enumeration cap");
  Graph Ae = A;
  Ae.add_edge(e.u, e.v);
  int anchor[2] = {e.u, e.v};
  SubsetCounter counter(Ae, std::span<const int>(anchor, 2));
  const int f = (int)counter.free_verts.size();
  const long long a = alpha.num(), b = alpha.den();

  // A vertex set T (containing the root) spans an alpha-dense pair exactly
  // when it maximizes b*e(U) - a*|U| over its own subsets; the union of all
  // global maximizers is therefore the unique maximal alpha-dense set.
  long long best = std::numeric_limits<long long>::min();
  std::uint32_t union_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
    long long val = b * counter.edges(mask) - a * (long long)std::popcount(mask);
    if (val > best) {
      best = val;
      union_mask = mask;
    } else if (val == best) {
      union_mask |= mask;
    }
  }

  CoreResult res;
  if (union_mask == 0) {
    res.dense_pair_ok = false;
    res.core.verts = {std::min(e.u, e.v), std::max(e.u, e.v)};
    return res;
  }
  std::vector<int> set{e.u, e.v};
  std::uint32_t rest = union_mask;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    set.push_back(counter.free_verts[i]);
  }
  std::sort(set.begin(), set.end());

  SubgraphRef dense_f;
  dense_f.verts = set;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (Ae.has_edge(set[i], set[j])) dense_f.edges.push_back(Edge(set[i], set[j]));
  std::sort(dense_f.edges.begin(), dense_f.edges.end());

  res.dense_pair_ok = true;
  res.core.verts = set;
  for (const Edge& g : dense_f.edges)
    if (!(g == e)) res.core.edges.push_back(g);
  res.certificate = std::move(dense_f);
  return res;
}

SubgraphRef modified_core(Edge f, WitnessAnalysis& analysis, const Rational& alpha) {
  if (analysis.initial().has_edge(f.u, f.v))
    throw DomainError("modified_core: edge is initially active, no completing copy exists");
  const WitnessRecord& rec = analysis.witness(f);
  const Completion& c = *rec.copy;

  SubgraphRef out;
  auto add_ref = [&](const SubgraphRef& r) {
    out.verts.insert(out.verts.end(), r.verts.begin(), r.verts.end());
    out.edges.insert(out.edges.end(), r.edges.begin(), r.edges.end());
  };
  for (const Edge& pe : analysis.pattern().edges()) {
    if (pe == c.pattern_edge) continue;
    Edge g(c.emb.map[pe.u], c.emb.map[pe.v]);
    if (analysis.initial().has_edge(g.u, g.v)) {
      out.verts.push_back(g.u);
      out.verts.push_back(g.v);
      out.edges.push_back(g);
    } else {
      // core of (g, W_g), computed on the witness graph compacted to its
      // own vertex set
      const WitnessRecord& wg = analysis.witness(g);
      std::vector<int> verts{g.u, g.v};
      for (const Edge& we : wg.black) {
        verts.push_back(we.u);
        verts.push_back(we.v);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      std::vector<int> local_of(analysis.initial().vertex_count(), -1);
      for (std::size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = (int)i;
      Graph local((int)verts.size());
      for (const Edge& we : wg.black) local.add_edge(local_of[we.u], local_of[we.v]);
      CoreResult core = alpha_core(Edge(local_of[g.u], local_of[g.v]), local, alpha);
      SubgraphRef mapped;
      for (int v : core.core.verts) mapped.verts.push_back(verts[v]);
      for (const Edge& ce : core.core.edges)
        mapped.edges.push_back(Edge(verts[ce.u], verts[ce.v]));
      add_ref(mapped);
    }
  }
  std::sort(out.verts.begin(), out.verts.end());
  out.verts.erase(std::unique(out.verts.begin(), out.verts.end()), out.verts.end());
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

}  // namespace percolab
