#include "percolab/witness.hpp"

#include <algorithm>

namespace percolab {

namespace {

std::vector<Edge> merge_edge_sets(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

WitnessAnalysis::WitnessAnalysis(Graph H, Graph G) : H_(std::move(H)), G_(std::move(G)) {
  ClosureOptions opts;
  opts.record_trace = true;
  trace_ = closure(H_, G_, opts);
}

int WitnessAnalysis::round_of(Edge e) const {
  if (G_.has_edge(e.u, e.v)) return 0;
  auto it = trace_.completions.find(key(e));
  if (it == trace_.completions.end())
    throw DomainError("witness: edge is not in the closure");
  return it->second.round;
}

const WitnessRecord& WitnessAnalysis::witness(Edge target) { return witness_rec(target, 0); }

const WitnessRecord& WitnessAnalysis::witness_rec(Edge target, int depth) {
  if (depth > 4 * G_.vertex_count() * G_.vertex_count())
    throw DomainError("witness: recursion depth exceeded");
  auto it = witness_memo_.find(key(target));
  if (it != witness_memo_.end()) return it->second;

  WitnessRecord rec;
  rec.target = target;
  if (G_.has_edge(target.u, target.v)) {
    rec.initially_active = true;
    rec.black = {target};
  } else {
    auto cit = trace_.completions.find(key(target));
    if (cit == trace_.completions.end())
      throw DomainError("witness: target edge was never activated");
    const Completion& c = cit->second;
    rec.copy = c;
    rec.red = {target};
    for (const Edge& pe : H_.edges()) {
      if (pe == c.pattern_edge) continue;
      Edge f(c.emb.map[pe.u], c.emb.map[pe.v]);
      const WitnessRecord& sub = witness_rec(f, depth + 1);
      rec.black = merge_edge_sets(rec.black, sub.black);
      rec.red = merge_edge_sets(rec.red, sub.red);
    }
  }
  return witness_memo_.emplace(key(target), std::move(rec)).first->second;
}

const WitnessAnalysis::DensePart& WitnessAnalysis::dense_part(Edge e, const Rational& rho) {
  if (!dense_rho_ || !(*dense_rho_ == rho)) {
    dense_memo_.clear();
    dense_rho_ = rho;
  }
  return dense_part_rec(e, rho, 0);
}

const WitnessAnalysis::DensePart& WitnessAnalysis::dense_part_rec(Edge e, const Rational& rho,
                                                                  int depth) {
  if (depth > 4 * G_.vertex_count() * G_.vertex_count())
    throw DomainError("dense_part: recursion depth exceeded");
  auto it = dense_memo_.find(key(e));
  if (it != dense_memo_.end()) return it->second;

  DensePart result;
  if (G_.has_edge(e.u, e.v)) {
    result.part.verts = {e.u, e.v};
    result.part.edges = {e};
    return dense_memo_.emplace(key(e), std::move(result)).first->second;
  }
  auto cit = trace_.completions.find(key(e));
  if (cit == trace_.completions.end())
    throw DomainError("dense_part: edge is not in the closure");
  const Completion& c = cit->second;

  // Candidate built by the activation recursion: the root edge plus, per
  // edge f of the completing copy, either f itself (initially active) or
  // f's dense part with the edge f stripped (keeping its vertices).
  std::vector<int> verts{e.u, e.v};
  std::vector<Edge> cand_edges{e};
  for (const Edge& pe : H_.edges()) {
    if (pe == c.pattern_edge) continue;
    Edge f(c.emb.map[pe.u], c.emb.map[pe.v]);
    if (G_.has_edge(f.u, f.v)) {
      cand_edges.push_back(f);
      verts.push_back(f.u);
      verts.push_back(f.v);
    } else {
      const DensePart& sub = dense_part_rec(f, rho, depth + 1);
      for (int v : sub.part.verts) verts.push_back(v);
      for (const Edge& g : sub.part.edges)
        if (!(g == f)) cand_edges.push_back(g);
    }
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::sort(cand_edges.begin(), cand_edges.end());
  cand_edges.erase(std::unique(cand_edges.begin(), cand_edges.end()), cand_edges.end());

  // Local graph on the candidate's vertices with exactly the candidate's
  // edges (not everything G induces there).
  std::vector<int> local_of_host(G_.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local_of_host[verts[i]] = (int)i;
  Graph local((int)verts.size());
  for (const Edge& g : cand_edges) local.add_edge(local_of_host[g.u], local_of_host[g.v]);
  int anchor[2] = {local_of_host[e.u], local_of_host[e.v]};

  const long long a = rho.num(), b = rho.den();
  const long long threshold = b - 2 * a;  // b*e(F) - a*v(F) >= b - 2a  <=>  ratio >= rho
  auto solve = [&](std::span<const int> forced) {
    return max_density_closure(local, forced, b, a, /*maximal=*/true);
  };
  // The bare root edge meets the scaled inequality vacuously, so start from
  // the anchor and grow; a valid dense part must properly contain the root.
  std::vector<int> chosen(anchor, anchor + 2);
  std::sort(chosen.begin(), chosen.end());
  DensitySelection whole = solve(std::span<const int>(anchor, 2));
  if (whole.value >= threshold && (int)whole.verts.size() > 2) chosen = whole.verts;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<char> in(local.vertex_count(), 0);
    for (int v : chosen) in[v] = 1;
    for (int w = 0; w < local.vertex_count() && !grew; ++w) {
      if (in[w]) continue;
      std::vector<int> forced = chosen;
      forced.push_back(w);
      DensitySelection ext = solve(forced);
      if (ext.value >= threshold) {
        chosen = ext.verts;
        grew = true;
      }
    }
  }
  if ((int)chosen.size() <= 2) {
    if (c.round == 1)
      throw DomainError("dense_part: density bound not achieved at a base copy; "
                        "the supplied bound exceeds the activation density");
    result.ok = false;
    result.part.verts = {e.u, e.v};
    result.part.edges = {e};
    return dense_memo_.emplace(key(e), std::move(result)).first->second;
  }

  std::vector<char> keep(local.vertex_count(), 0);
  for (int v : chosen) keep[v] = 1;
  for (int v : chosen) result.part.verts.push_back(verts[v]);
  std::sort(result.part.verts.begin(), result.part.verts.end());
  for (const Edge& g : cand_edges)
    if (keep[local_of_host[g.u]] && keep[local_of_host[g.v]]) result.part.edges.push_back(g);
  return dense_memo_.emplace(key(e), std::move(result)).first->second;
}

}  // namespace percolab
