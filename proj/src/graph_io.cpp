#include "percolab/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace percolab {

namespace {

constexpr int kBias = 63;

long long read_graph6_size(const std::string& s, std::size_t& pos) {
  auto need = [&](std::size_t k) {
    if (pos + k > s.size()) throw ParseError("graph6: truncated size field at offset " + std::to_string(pos));
  };
  auto val = [&](std::size_t i) -> long long {
    unsigned char c = s[i];
    if (c < 63 || c > 126)
      throw ParseError("graph6: invalid byte at offset " + std::to_string(i));
    return c - kBias;
  };
  need(1);
  if (s[pos] != 126) return val(pos++);
  ++pos;
  need(1);
  if (s[pos] != 126) {
    need(3);
    long long n = (val(pos) << 12) | (val(pos + 1) << 6) | val(pos + 2);
    pos += 3;
    return n;
  }
  ++pos;
  need(6);
  long long n = 0;
  for (int i = 0; i < 6; ++i) n = (n << 6) | val(pos + i);
  pos += 6;
  return n;
}

void write_graph6_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back((char)(n + kBias));
  } else if (n <= 258047) {
    out.push_back((char)126);
    out.push_back((char)(((n >> 12) & 63) + kBias));
    out.push_back((char)(((n >> 6) & 63) + kBias));
    out.push_back((char)((n & 63) + kBias));
  } else {
    out.push_back((char)126);
    out.push_back((char)126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back((char)(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string s = raw;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long long n = read_graph6_size(s, pos);
  if (n > 1000000) throw ParseError("graph6: vertex count too large");
  Graph g((int)n);

  long long bits = Graph::pair_count((int)n);
  long long chars = (bits + 5) / 6;
  if ((long long)(s.size() - pos) < chars)
    throw ParseError("graph6: truncated adjacency data at offset " + std::to_string(s.size()));
  if ((long long)(s.size() - pos) > chars)
    throw ParseError("graph6: trailing data at offset " + std::to_string(pos + chars));

  long long idx = 0;  // bit index over pairs, column-major: (0,1),(0,2),(1,2),...
  int i = 0, j = 1;
  for (long long c = 0; c < chars; ++c) {
    unsigned char ch = s[pos + c];
    if (ch < 63 || ch > 126)
      throw ParseError("graph6: invalid byte at offset " + std::to_string(pos + c));
    int group = ch - kBias;
    for (int b = 5; b >= 0 && idx < bits; --b, ++idx) {
      if ((group >> b) & 1) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
    // padding bits beyond `bits` must be zero
    if (idx >= bits) {
      int tail = (int)(6 * (c + 1) - bits);
      if (tail > 0 && (group & ((1 << tail) - 1)) != 0)
        throw ParseError("graph6: nonzero padding at offset " + std::to_string(pos + c));
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  write_graph6_size(out, g.vertex_count());
  long long bits = Graph::pair_count(g.vertex_count());
  int group = 0, have = 0;
  int i = 0, j = 1;
  for (long long idx = 0; idx < bits; ++idx) {
    group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
    if (++i == j) {
      i = 0;
      ++j;
    }
    if (++have == 6) {
      out.push_back((char)(group + kBias));
      group = 0;
      have = 0;
    }
  }
  if (have > 0) out.push_back((char)((group << (6 - have)) + kBias));
  return out;
}

Graph parse_edge_list(const std::string& text, int vertex_hint) {
  std::vector<std::pair<int, int>> pairs;
  int max_id = -1;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v))
      throw ParseError("edge list: malformed line " + std::to_string(line_no));
    std::string rest;
    if (ls >> rest)
      throw ParseError("edge list: trailing tokens on line " + std::to_string(line_no));
    if (u < 0 || v < 0)
      throw ParseError("edge list: negative vertex id on line " + std::to_string(line_no));
    if (u == v)
      throw DomainError("edge list: loop edge on line " + std::to_string(line_no));
    if (u > 1000000 || v > 1000000)
      throw ParseError("edge list: vertex id too large on line " + std::to_string(line_no));
    pairs.emplace_back((int)u, (int)v);
    max_id = std::max(max_id, (int)std::max(u, v));
  }
  int n = vertex_hint >= 0 ? vertex_hint : max_id + 1;
  if (max_id >= n) throw DomainError("edge list: vertex id exceeds declared vertex count");
  Graph g(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!g.add_edge(pairs[k].first, pairs[k].second))
      throw DomainError("edge list: duplicate edge " + std::to_string(pairs[k].first) + " " +
                        std::to_string(pairs[k].second));
  }
  return g;
}

Graph parse_graph(const std::string& text, GraphFormat format, int vertex_hint) {
  switch (format) {
    case GraphFormat::graph6:
      return parse_graph6(text);
    case GraphFormat::edge_list:
      return parse_edge_list(text, vertex_hint);
  }
  throw DomainError("parse_graph: unknown format");
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace percolab
