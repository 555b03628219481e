#include <doctest.h>

#include "percolab/graph.hpp"
#include "percolab/patterns.hpp"

using namespace percolab;

TEST_CASE("graph basics: edges, degrees, loops rejected") {
  Graph g(4);
  CHECK(g.add_edge(0, 1));
  CHECK(g.add_edge(2, 1));
  CHECK_FALSE(g.add_edge(1, 0));  // duplicate
  CHECK_THROWS_AS(g.add_edge(2, 2), DomainError);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  auto es = g.edges();
  REQUIRE(es.size() == 2);
  CHECK(es[0] == Edge(0, 1));
  CHECK(es[1] == Edge(1, 2));
  CHECK(g.remove_edge(0, 1));
  CHECK_FALSE(g.remove_edge(0, 1));
  CHECK(g.edge_count() == 1);
}

TEST_CASE("complete graph edge counts") {
  CHECK(complete_graph(0).edge_count() == 0);
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(complete_graph(6).edge_count() == 15);
  CHECK(complete_graph(6).is_complete());
}

TEST_CASE("components, connectivity, cycle rank") {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  CHECK_FALSE(g.is_connected());
  CHECK(g.components().size() == 3);  // {0,1,2}, {3,4}, {5}
  CHECK(g.cycle_rank() == 0);
  g.add_edge(0, 2);
  CHECK(g.cycle_rank() == 1);
  CHECK(cycle_graph(5).is_cycle_graph());
  CHECK_FALSE(paw_graph().is_cycle_graph());
  CHECK(paw_graph().has_leaf());
  CHECK_FALSE(cycle_graph(4).has_leaf());
}

TEST_CASE("induced subgraphs relabel by position") {
  Graph g = paw_graph();  // triangle 0,1,2 plus pendant 0-3
  std::vector<int> tri{0, 1, 2};
  Graph t = g.induced(tri);
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  std::vector<int> mixed{0, 3};
  CHECK(g.induced(mixed).edge_count() == 1);
}

TEST_CASE("graph vertex ids out of range throw") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
  CHECK_THROWS_AS((void)g.has_edge(-1, 0), DomainError);
}

TEST_CASE("brute isomorphism distinguishes small graphs") {
  CHECK(graphs_isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
  CHECK_FALSE(graphs_isomorphic(cycle_graph(4), path_graph(4)));
  Graph p1 = path_graph(4);
  Graph p2(4);
  p2.add_edge(2, 0);
  p2.add_edge(0, 3);
  p2.add_edge(3, 1);
  CHECK(graphs_isomorphic(p1, p2));
  CHECK(graph_fingerprint(p1) == graph_fingerprint(p2));
}
