#include "percolab/extensions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "percolab/closure.hpp"

namespace percolab {

std::optional<Embedding> find_extension(const ExtensionSpec& spec,
                                        std::span<const int> host_anchor, const Graph& host) {
  if (host_anchor.size() != spec.anchor.size())
    throw DomainError("find_extension: anchor length mismatch");
  AnchoredMatcher m(spec.pattern, spec.anchor);
  MatchWorkspace ws;
  Embedding out;
  if (m.first(host, host_anchor, ws, out)) return out;
  return std::nullopt;
}

namespace {

// Alpha-core of (f, W_f) computed on the witness graph compacted to its own
// vertex span, mapped back to certificate ids.
SubgraphRef core_of(WitnessAnalysis& analysis, Edge f, const Rational& alpha) {
  const WitnessRecord& rec = analysis.witness(f);
  std::vector<int> verts{f.u, f.v};
  for (const Edge& we : rec.black) {
    verts.push_back(we.u);
    verts.push_back(we.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> local_of(analysis.initial().vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = (int)i;
  Graph local((int)verts.size());
  for (const Edge& we : rec.black) local.add_edge(local_of[we.u], local_of[we.v]);
  CoreResult core = alpha_core(Edge(local_of[f.u], local_of[f.v]), local, alpha);
  SubgraphRef mapped;
  for (int v : core.core.verts) mapped.verts.push_back(verts[v]);
  for (const Edge& ce : core.core.edges) mapped.edges.push_back(Edge(verts[ce.u], verts[ce.v]));
  std::sort(mapped.verts.begin(), mapped.verts.end());
  std::sort(mapped.edges.begin(), mapped.edges.end());
  return mapped;
}

}  // namespace

FoldPlan::FoldPlan(const Graph& H, const RhoCertificate& cert, const Rational& alpha)
    : H_(H), alpha_(alpha), target_(cert.e), bound_(cert.bound) {
  require_no_isolated(H, "fold");
  if (cert.A.has_edge(cert.e.u, cert.e.v))
    throw DomainError("fold: certificate target is already an edge of A");
  WitnessAnalysis analysis(H_, cert.A);
  if (!analysis.in_closure(cert.e))
    throw DomainError("fold: certificate is invalid, target not activated from A");

  const WitnessRecord& root_rec = analysis.witness(cert.e);
  std::vector<Edge> red_edges = root_rec.red;  // sorted, includes the target
  std::map<Edge, int> index_of;
  for (std::size_t i = 0; i < red_edges.size(); ++i) index_of[red_edges[i]] = (int)i;

  reds_.resize(red_edges.size());
  for (std::size_t i = 0; i < red_edges.size(); ++i) {
    RedEdge& red = reds_[i];
    red.edge = red_edges[i];
    const bool is_root = red.edge == cert.e;
    if (is_root) root_ = (int)i;

    SubgraphRef mf = modified_core(red.edge, analysis, alpha_);
    if (is_root) {
      red.core_verts = {red.edge.u, red.edge.v};
    } else {
      red.core_verts = core_of(analysis, red.edge, alpha_).verts;
    }

    // pattern = core union modified core (plus the root pair for the base
    // spec), compacted to its sorted vertex span
    std::vector<int> verts = mf.verts;
    verts.insert(verts.end(), red.core_verts.begin(), red.core_verts.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> pos_of(cert.A.vertex_count(), -1);
    for (std::size_t k = 0; k < verts.size(); ++k) pos_of[verts[k]] = (int)k;

    std::vector<Edge> edges = mf.edges;
    if (is_root) {
      edges.push_back(red.edge);
    } else {
      SubgraphRef cf = core_of(analysis, red.edge, alpha_);
      edges.insert(edges.end(), cf.edges.begin(), cf.edges.end());
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    red.spec.pattern = Graph((int)verts.size());
    for (const Edge& e : edges) red.spec.pattern.add_edge(pos_of[e.u], pos_of[e.v]);
    red.spec.anchor.clear();
    for (int v : red.core_verts) red.spec.anchor.push_back(pos_of[v]);

    // children: red edges of the completing copy
    const Completion& c = *analysis.witness(red.edge).copy;
    for (const Edge& pe : H_.edges()) {
      if (pe == c.pattern_edge) continue;
      Edge g(c.emb.map[pe.u], c.emb.map[pe.v]);
      if (analysis.initial().has_edge(g.u, g.v)) continue;
      RedEdge::Child child;
      child.red_index = index_of.at(g);
      child.pair_pos_u = pos_of[g.u];
      child.pair_pos_v = pos_of[g.v];
      for (int v : core_of(analysis, g, alpha_).verts) child.anchor_pos.push_back(pos_of[v]);
      for (int p : child.anchor_pos)
        if (p < 0) throw DomainError("fold: child core escapes the modified core");
      if (child.pair_pos_u < 0 || child.pair_pos_v < 0)
        throw DomainError("fold: child edge escapes the modified core");
      red.children.push_back(std::move(child));
    }
  }

  // The base pair (target, modified core + target) must be alpha-sparse for
  // extensions of it to be plentiful; a violation means alpha does not
  // exceed the certificate bound.
  const RedEdge& root = reds_[root_];
  AlphaSparseResult sp = is_alpha_sparse_anchored(
      root.spec.pattern, root.spec.anchor, /*anchor_edges=*/1, alpha_);
  if (!sp.sparse)
    throw DomainError("fold: (target, modified core) is not alpha-sparse; raise alpha above "
                      "the certificate bound");
}

FoldReport fold_activate(const FoldPlan& plan, Edge g, const Graph& host, long long max_copies) {
  FoldReport report;
  report.g = g;
  if (host.has_edge(g.u, g.v)) throw DomainError("fold: target pair is already active in the host");

  const int n = host.vertex_count();
  std::set<long long> edge_keys;
  std::set<std::pair<int, long long>> processed;
  struct Pending {
    int red_index;
    std::vector<int> host_anchor;
    Edge host_pair;
  };
  std::deque<Pending> pending;

  auto pair_key = [n](Edge e) { return (long long)e.u * n + e.v; };

  auto process = [&](int red_index, const Embedding& emb) {
    const FoldPlan::RedEdge& red = plan.red(red_index);
    std::vector<char> in_anchor(red.spec.pattern.vertex_count(), 0);
    for (int p : red.spec.anchor) in_anchor[p] = 1;
    for (const Edge& pe : red.spec.pattern.edges()) {
      if (in_anchor[pe.u] && in_anchor[pe.v]) continue;
      edge_keys.insert(pair_key(Edge(emb.map[pe.u], emb.map[pe.v])));
    }
    for (const FoldPlan::RedEdge::Child& child : red.children) {
      Edge host_pair(emb.map[child.pair_pos_u], emb.map[child.pair_pos_v]);
      if (host.has_edge(host_pair.u, host_pair.v)) continue;  // already active
      if (processed.count({child.red_index, pair_key(host_pair)})) continue;
      Pending p;
      p.red_index = child.red_index;
      for (int pos : child.anchor_pos) p.host_anchor.push_back(emb.map[pos]);
      p.host_pair = host_pair;
      pending.push_back(std::move(p));
    }
  };

  // Base step: embed the target's extension over g, either orientation.
  {
    const FoldPlan::RedEdge& root = plan.red(plan.root_index());
    int fwd[2] = {g.u, g.v};
    int rev[2] = {g.v, g.u};
    std::optional<Embedding> emb =
        find_extension(root.spec, std::span<const int>(fwd, 2), host);
    if (!emb) emb = find_extension(root.spec, std::span<const int>(rev, 2), host);
    if (!emb) {
      report.failure_point = "base: no (target, modified-core) extension of g";
      return report;
    }
    ++report.copies_processed;
    processed.insert({plan.root_index(), pair_key(g)});
    process(plan.root_index(), *emb);
  }

  while (!pending.empty()) {
    Pending p = std::move(pending.front());
    pending.pop_front();
    if (processed.count({p.red_index, pair_key(p.host_pair)})) continue;
    if (report.copies_processed >= max_copies) {
      report.failure_point = "copy cap exceeded";
      return report;
    }
    const FoldPlan::RedEdge& red = plan.red(p.red_index);
    std::optional<Embedding> emb = find_extension(red.spec, p.host_anchor, host);
    if (!emb) {
      report.failure_point =
          "no (core, modified-core) extension for red edge (" + std::to_string(red.edge.u) +
          "," + std::to_string(red.edge.v) + ")";
      return report;
    }
    ++report.copies_processed;
    processed.insert({p.red_index, pair_key(p.host_pair)});
    process(p.red_index, *emb);
  }

  report.success = true;
  std::vector<int> verts{g.u, g.v};
  for (long long key : edge_keys) {
    verts.push_back((int)(key / n));
    verts.push_back((int)(key % n));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  report.embedded.verts = verts;
  for (long long key : edge_keys) report.embedded.edges.push_back(Edge((int)(key / n), (int)(key % n)));
  std::sort(report.embedded.edges.begin(), report.embedded.edges.end());

  // Independent check: the embedded union really activates g.
  std::vector<int> local_of(n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = (int)i;
  Graph Ag((int)verts.size());
  for (const Edge& e : report.embedded.edges) Ag.add_edge(local_of[e.u], local_of[e.v]);
  ClosureTrace t = closure(plan.pattern(), Ag);
  report.verified = t.final.has_edge(local_of[g.u], local_of[g.v]);
  return report;
}

}  // namespace percolab
