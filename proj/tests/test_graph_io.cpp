#include <doctest.h>

#include <random>

#include "percolab/graph_io.hpp"
#include "percolab/patterns.hpp"
#include "percolab/random_graphs.hpp"

using namespace percolab;

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("0 1\n1 2");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));

  CHECK_THROWS_AS(parse_edge_list("0 0"), DomainError);          // loop
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), DomainError);     // duplicate
  CHECK_THROWS_AS(parse_edge_list("0 1\n2"), ParseError);        // malformed
  CHECK_THROWS_AS(parse_edge_list("a b"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);         // trailing token

  Graph padded = parse_edge_list("0 1", 5);
  CHECK(padded.vertex_count() == 5);
  CHECK(parse_edge_list("").vertex_count() == 0);
}

TEST_CASE("graph6 decodes C~ as the complete graph on 4 vertices") {
  // 'C' encodes n=4; '~' carries six set bits, one per vertex pair
  Graph g = parse_graph6("C~");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(graphs_isomorphic(g, complete_graph(4)));
  CHECK(to_graph6(complete_graph(4)) == "C~");
}

TEST_CASE("graph6 known small encodings") {
  // path 0-1-2: pairs (0,1),(0,2),(1,2) -> bits 101 -> 'B' 'g'
  Graph p = parse_graph6("Bg");
  CHECK(p.vertex_count() == 3);
  CHECK(p.edge_count() == 2);
  CHECK(p.has_edge(0, 1));
  CHECK(p.has_edge(1, 2));
  CHECK(to_graph6(p) == "Bg");
  CHECK(parse_graph6("?").vertex_count() == 0);
  CHECK(parse_graph6(">>graph6<<A_\n").edge_count() == 1);
}

TEST_CASE("graph6 malformed inputs raise parse errors") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);        // truncated bits
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);      // trailing data
  CHECK_THROWS_AS(parse_graph6("C\x01\x01"), ParseError);  // invalid byte
}

TEST_CASE("graph6 round trip on random graphs, including the long size form") {
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 10000; ++it) {
    int n = (int)(rng() % 21);
    double p = (double)(rng() % 100) / 100.0;
    Graph g = sample_gnp(n, p, rng());
    Graph back = parse_graph6(to_graph6(g));
    REQUIRE(back == g);
    (void)p;
  }
  Graph big = sample_gnp(70, 0.3, 99);  // forces the 4-byte size form
  CHECK(parse_graph6(to_graph6(big)) == big);
}

TEST_CASE("edge list serialization is sorted and round trips") {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 1);
  CHECK(to_edge_list(g) == "0 1\n0 2\n1 3\n");
  CHECK(parse_edge_list(to_edge_list(g), 4) == g);
}
