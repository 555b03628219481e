#include "percolab/report.hpp"

namespace percolab {

Json rational_json(const Rational& r) {
  return Json{{"str", r.str()}, {"num", r.num()}, {"den", r.den()}, {"value", r.to_double()}};
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

Json graph_json(const Graph& g) {
  return Json{{"n", g.vertex_count()}, {"edges", edges_json(g.edges())}};
}

Json subgraph_json(const SubgraphRef& s) {
  return Json{{"verts", s.verts}, {"edges", edges_json(s.edges)}};
}

Json certificate_json(const RhoCertificate& cert) {
  return Json{{"e", edge_json(cert.e)},
              {"A", graph_json(cert.A)},
              {"bound", rational_json(cert.bound)},
              {"maximizer", cert.maximizer},
              {"provenance", cert.provenance},
              {"copies", cert.copies}};
}

RhoCertificate certificate_from_json(const Json& j) {
  RhoCertificate cert;
  cert.e = Edge(j.at("e").at(0).get<int>(), j.at("e").at(1).get<int>());
  const Json& a = j.at("A");
  Graph g(a.at("n").get<int>());
  for (const Json& e : a.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  cert.A = std::move(g);
  cert.bound = Rational(j.at("bound").at("num").get<long long>(),
                        j.at("bound").at("den").get<long long>());
  if (j.contains("maximizer")) cert.maximizer = j.at("maximizer").get<std::vector<int>>();
  if (j.contains("provenance")) cert.provenance = j.at("provenance").get<std::string>();
  if (j.contains("copies")) cert.copies = j.at("copies").get<int>();
  return cert;
}

Json trace_json(const ClosureTrace& trace) {
  Json rounds = Json::array();
  for (const auto& r : trace.rounds) rounds.push_back(edges_json(r));
  return Json{{"complete", trace.complete},
              {"final_edges", trace.final.edge_count()},
              {"n", trace.final.vertex_count()},
              {"rounds", rounds}};
}

Json witness_json(const WitnessRecord& rec) {
  Json j{{"target", edge_json(rec.target)},
         {"initially_active", rec.initially_active},
         {"W", edges_json(rec.black)},
         {"R", edges_json(rec.red)}};
  if (rec.copy) {
    Json he{{"pattern_edge", edge_json(rec.copy->pattern_edge)},
            {"map", rec.copy->emb.map},
            {"round", rec.copy->round}};
    j["He"] = he;
  }
  return j;
}

Json estimate_json(const PcEstimate& est) {
  Json probes = Json::array();
  for (const ProbeStat& ps : est.probes)
    probes.push_back(Json{{"p", ps.p}, {"frequency", ps.frequency}});
  return Json{{"p_hat", est.p_hat},
              {"p_low", est.p_low},
              {"p_high", est.p_high},
              {"level", est.level},
              {"trials", est.trials},
              {"probes_used", est.probes_used},
              {"probes", probes},
              {"seed", est.seed}};
}

Json fold_json(const FoldReport& rep) {
  Json j{{"g", edge_json(rep.g)},
         {"success", rep.success},
         {"verified", rep.verified},
         {"copies_processed", rep.copies_processed},
         {"v_Ag", (long long)rep.embedded.verts.size()},
         {"e_Ag", (long long)rep.embedded.edges.size()}};
  if (rep.failure_point) j["failure_point"] = *rep.failure_point;
  return j;
}

}  // namespace percolab
