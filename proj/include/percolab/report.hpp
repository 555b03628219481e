#pragma once

#include <json.hpp>

#include "percolab/certificates.hpp"
#include "percolab/closure.hpp"
#include "percolab/extensions.hpp"
#include "percolab/random_graphs.hpp"
#include "percolab/witness.hpp"

namespace percolab {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json edge_json(const Edge& e);
Json edges_json(const std::vector<Edge>& edges);
Json graph_json(const Graph& g);
Json subgraph_json(const SubgraphRef& s);
Json certificate_json(const RhoCertificate& cert);
RhoCertificate certificate_from_json(const Json& j);
Json trace_json(const ClosureTrace& trace);
Json witness_json(const WitnessRecord& rec);
Json estimate_json(const PcEstimate& est);
Json fold_json(const FoldReport& rep);

}  // namespace percolab
