#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace percolab {

/// Domain-rule violation (bad precondition, size cap, inconsistent input).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; message carries line/offset context.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 1;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw DomainError("Edge: endpoints must be distinct");
  }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph over vertices [0, n). Adjacency is a symmetric
/// bit matrix, one 64-bit-packed row per vertex, which keeps neighborhood
/// intersections (the inner loop of every embedding search) cheap.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) { reset(n); }

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int words() const { return words_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[(std::size_t)u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  /// Adds {u,v}; returns false if the edge was already present.
  bool add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("Graph: loop edge " + std::to_string(u));
    std::uint64_t& wu = bits_[(std::size_t)u * words_ + (v >> 6)];
    if ((wu >> (v & 63)) & 1u) return false;
    wu |= 1ull << (v & 63);
    bits_[(std::size_t)v * words_ + (u >> 6)] |= 1ull << (u & 63);
    ++m_;
    return true;
  }
  bool add_edge(Edge e) { return add_edge(e.u, e.v); }

  bool remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    std::uint64_t& wu = bits_[(std::size_t)u * words_ + (v >> 6)];
    if (!((wu >> (v & 63)) & 1u)) return false;
    wu &= ~(1ull << (v & 63));
    bits_[(std::size_t)v * words_ + (u >> 6)] &= ~(1ull << (u & 63));
    --m_;
    return true;
  }
  bool remove_edge(Edge e) { return remove_edge(e.u, e.v); }

  std::span<const std::uint64_t> row(int v) const {
    check_vertex(v);
    return {bits_.data() + (std::size_t)v * words_, (std::size_t)words_};
  }

  int degree(int v) const;
  int min_degree() const;

  std::vector<Edge> edges() const;  // sorted by (u, v)
  std::vector<int> neighbors(int v) const;

  /// Induced subgraph; vertex i of the result is verts[i].
  Graph induced(std::span<const int> verts) const;

  /// Same graph on n + extra vertices (new vertices isolated).
  Graph padded(int extra) const;

  bool is_complete() const { return m_ == (long long)n_ * (n_ - 1) / 2; }
  bool is_connected() const;
  std::vector<std::vector<int>> components() const;
  /// Components of the graph restricted to non-isolated vertices plus all
  /// isolated vertices as singletons; count excludes nothing.
  long long cycle_rank() const;  // e - v + #components
  bool is_cycle_graph() const;
  bool has_leaf() const;
  bool has_isolated_vertex() const;

  /// True if every edge of `sub` (same vertex-id space, sub.n <= n) is here.
  bool contains_edges_of(const Graph& sub) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  static long long pair_count(int n) { return (long long)n * (n - 1) / 2; }

 private:
  void reset(int n) {
    if (n < 0) throw DomainError("Graph: negative vertex count");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign((std::size_t)n * words_, 0);
    m_ = 0;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw DomainError("Graph: vertex " + std::to_string(v) + " out of range");
  }

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Brute-force isomorphism test; intended for small graphs (<= 10 vertices).
bool graphs_isomorphic(const Graph& a, const Graph& b);

/// Cheap canonical-ish fingerprint (n, m, sorted degree sequence, sorted
/// degree pairs over edges); equal for isomorphic graphs, used to bucket
/// candidates before the exact isomorphism check.
std::string graph_fingerprint(const Graph& g);

}  // namespace percolab
