#include "percolab/embed.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace percolab {

namespace {

inline void set_bit(std::vector<std::uint64_t>& bits, int v) { bits[v >> 6] |= 1ull << (v & 63); }
inline void clear_bit(std::vector<std::uint64_t>& bits, int v) {
  bits[v >> 6] &= ~(1ull << (v & 63));
}

// Mask for the last row word so complements never produce phantom vertices.
inline std::uint64_t tail_mask(int n) {
  return (n & 63) ? ((1ull << (n & 63)) - 1) : ~0ull;
}

}  // namespace

AnchoredMatcher::AnchoredMatcher(const Graph& pattern, std::span<const int> anchor) {
  init(pattern, anchor);
}

AnchoredMatcher::AnchoredMatcher(const Graph& pattern, Edge anchor_edge) {
  int anchor[2] = {anchor_edge.u, anchor_edge.v};
  init(pattern, std::span<const int>(anchor, 2));
}

void AnchoredMatcher::init(const Graph& pattern, std::span<const int> anchor) {
  k_ = pattern.vertex_count();
  a_ = (int)anchor.size();
  if (a_ > k_) throw DomainError("AnchoredMatcher: anchor larger than pattern");
  std::vector<char> in_anchor(k_, 0);
  for (int v : anchor) {
    if (v < 0 || v >= k_) throw DomainError("AnchoredMatcher: anchor vertex out of range");
    if (in_anchor[v]) throw DomainError("AnchoredMatcher: repeated anchor vertex");
    in_anchor[v] = 1;
  }
  order_.assign(anchor.begin(), anchor.end());
  std::vector<int> rest;
  for (int v = 0; v < k_; ++v)
    if (!in_anchor[v]) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(), [&](int x, int y) {
    int dx = pattern.degree(x), dy = pattern.degree(y);
    if (dx != dy) return dx > dy;
    return x < y;
  });
  order_.insert(order_.end(), rest.begin(), rest.end());

  std::vector<int> slot_of(k_);
  for (int s = 0; s < k_; ++s) slot_of[order_[s]] = s;
  reqs_.assign(k_, {});
  for (const Edge& e : pattern.edges()) {
    if (in_anchor[e.u] && in_anchor[e.v]) continue;  // exempt
    int su = slot_of[e.u], sv = slot_of[e.v];
    reqs_[std::max(su, sv)].push_back(std::min(su, sv));
  }
  for (auto& r : reqs_) std::sort(r.begin(), r.end());
}

bool AnchoredMatcher::prepare(const Graph& host, std::span<const int> anchor_host,
                              MatchWorkspace& ws) const {
  if ((int)anchor_host.size() != a_) throw DomainError("AnchoredMatcher: anchor length mismatch");
  if (k_ > host.vertex_count()) return false;
  ws.buf.assign((std::size_t)k_ * host.words(), 0);
  ws.used.assign(host.words(), 0);
  ws.map.assign(k_, -1);
  for (int s = 0; s < a_; ++s) {
    int v = anchor_host[s];
    if (v < 0 || v >= host.vertex_count())
      throw DomainError("AnchoredMatcher: host anchor vertex out of range");
    if ((ws.used[v >> 6] >> (v & 63)) & 1)
      throw DomainError("AnchoredMatcher: repeated host anchor vertex");
    ws.map[s] = v;
    set_bit(ws.used, v);
  }
  return true;
}

bool AnchoredMatcher::search(const Graph& host, MatchWorkspace& ws, int slot, Embedding* out,
                             const std::function<bool(const Embedding&)>* cb, bool* stop) const {
  if (slot == k_) {
    if (out) {
      out->map.assign(k_, -1);
      for (int s = 0; s < k_; ++s) out->map[order_[s]] = ws.map[s];
      return true;
    }
    Embedding emb;
    emb.map.assign(k_, -1);
    for (int s = 0; s < k_; ++s) emb.map[order_[s]] = ws.map[s];
    if (!(*cb)(emb)) *stop = true;
    return false;
  }
  const int words = host.words();
  std::uint64_t* cand = ws.buf.data() + (std::size_t)slot * words;
  if (reqs_[slot].empty()) {
    for (int w = 0; w < words; ++w) cand[w] = ~ws.used[w];
  } else {
    auto r0 = host.row(ws.map[reqs_[slot][0]]);
    for (int w = 0; w < words; ++w) cand[w] = r0[w] & ~ws.used[w];
    for (std::size_t i = 1; i < reqs_[slot].size(); ++i) {
      auto r = host.row(ws.map[reqs_[slot][i]]);
      for (int w = 0; w < words; ++w) cand[w] &= r[w];
    }
  }
  cand[words - 1] &= tail_mask(host.vertex_count());
  for (int w = 0; w < words; ++w) {
    std::uint64_t word = cand[w];
    while (word) {
      int v = (w << 6) + std::countr_zero(word);
      word &= word - 1;
      ws.map[slot] = v;
      set_bit(ws.used, v);
      bool found = search(host, ws, slot + 1, out, cb, stop);
      clear_bit(ws.used, v);
      if (found) return true;
      if (stop && *stop) return false;
    }
  }
  return false;
}

bool AnchoredMatcher::exists(const Graph& host, std::span<const int> anchor_host,
                             MatchWorkspace& ws) const {
  Embedding scratch;
  return first(host, anchor_host, ws, scratch);
}

bool AnchoredMatcher::first(const Graph& host, std::span<const int> anchor_host,
                            MatchWorkspace& ws, Embedding& out) const {
  if (!prepare(host, anchor_host, ws)) return false;
  return search(host, ws, a_, &out, nullptr, nullptr);
}

void AnchoredMatcher::enumerate(const Graph& host, std::span<const int> anchor_host,
                                MatchWorkspace& ws,
                                const std::function<bool(const Embedding&)>& cb) const {
  if (!prepare(host, anchor_host, ws)) return;
  bool stop = false;
  search(host, ws, a_, nullptr, &cb, &stop);
}

void AnchoredMatcher::propagate_rec(const Graph& host, MatchWorkspace& ws, int slot,
                                    const std::function<void(int, int)>& emit) const {
  if (slot >= k_) return;
  const int words = host.words();
  const std::uint64_t tmask = tail_mask(host.vertex_count());
  std::uint64_t* cand = ws.buf.data() + (std::size_t)slot * words;

  // Branch 1: the missing edge is one of this slot's required edges; every
  // other requirement here and everything deeper is strict.
  for (std::size_t miss = 0; miss < reqs_[slot].size(); ++miss) {
    auto rm = host.row(ws.map[reqs_[slot][miss]]);
    bool first_req = true;
    for (std::size_t i = 0; i < reqs_[slot].size(); ++i) {
      if (i == miss) continue;
      auto r = host.row(ws.map[reqs_[slot][i]]);
      if (first_req) {
        for (int w = 0; w < words; ++w) cand[w] = r[w] & ~ws.used[w];
        first_req = false;
      } else {
        for (int w = 0; w < words; ++w) cand[w] &= r[w];
      }
    }
    if (first_req)
      for (int w = 0; w < words; ++w) cand[w] = ~ws.used[w];
    for (int w = 0; w < words; ++w) cand[w] &= ~rm[w];
    cand[words - 1] &= tmask;
    const int partner = ws.map[reqs_[slot][miss]];
    for (int w = 0; w < words; ++w) {
      std::uint64_t word = cand[w];
      while (word) {
        int v = (w << 6) + std::countr_zero(word);
        word &= word - 1;
        if (slot + 1 == k_) {
          emit(v, partner);
        } else {
          ws.map[slot] = v;
          set_bit(ws.used, v);
          Embedding scratch;
          if (search(host, ws, slot + 1, &scratch, nullptr, nullptr)) emit(v, partner);
          clear_bit(ws.used, v);
        }
      }
    }
  }

  // Branch 2: everything at this slot is active; the missing edge sits at a
  // later slot. Pointless at the last slot.
  if (slot + 1 == k_) return;
  if (reqs_[slot].empty()) {
    for (int w = 0; w < words; ++w) cand[w] = ~ws.used[w];
  } else {
    auto r0 = host.row(ws.map[reqs_[slot][0]]);
    for (int w = 0; w < words; ++w) cand[w] = r0[w] & ~ws.used[w];
    for (std::size_t i = 1; i < reqs_[slot].size(); ++i) {
      auto r = host.row(ws.map[reqs_[slot][i]]);
      for (int w = 0; w < words; ++w) cand[w] &= r[w];
    }
  }
  cand[words - 1] &= tmask;
  std::vector<int> strict;
  for (int w = 0; w < words; ++w) {
    std::uint64_t word = cand[w];
    while (word) {
      strict.push_back((w << 6) + std::countr_zero(word));
      word &= word - 1;
    }
  }
  for (int v : strict) {
    ws.map[slot] = v;
    set_bit(ws.used, v);
    propagate_rec(host, ws, slot + 1, emit);
    clear_bit(ws.used, v);
  }
}

void AnchoredMatcher::propagate(const Graph& host, std::span<const int> anchor_host,
                                MatchWorkspace& ws,
                                const std::function<void(int, int)>& emit) const {
  if (!prepare(host, anchor_host, ws)) return;
  propagate_rec(host, ws, a_, emit);
}

CompletionTester::CompletionTester(const Graph& H, bool all_edges) {
  anchors_ = all_edges ? H.edges() : edge_orbit_representatives(H);
  matchers_.reserve(anchors_.size());
  for (const Edge& e : anchors_) matchers_.emplace_back(H, e);
}

bool CompletionTester::exists(const Graph& G, Edge e, MatchWorkspace& ws) const {
  for (const AnchoredMatcher& m : matchers_) {
    int fwd[2] = {e.u, e.v};
    if (m.exists(G, std::span<const int>(fwd, 2), ws)) return true;
    int rev[2] = {e.v, e.u};
    if (m.exists(G, std::span<const int>(rev, 2), ws)) return true;
  }
  return false;
}

bool CompletionTester::first(const Graph& G, Edge e, MatchWorkspace& ws, Embedding& out,
                             Edge& pattern_edge) const {
  for (std::size_t i = 0; i < matchers_.size(); ++i) {
    int fwd[2] = {e.u, e.v};
    if (matchers_[i].first(G, std::span<const int>(fwd, 2), ws, out)) {
      pattern_edge = anchors_[i];
      return true;
    }
    int rev[2] = {e.v, e.u};
    if (matchers_[i].first(G, std::span<const int>(rev, 2), ws, out)) {
      pattern_edge = anchors_[i];
      return true;
    }
  }
  return false;
}

void CompletionTester::propagate(const Graph& G, Edge f, MatchWorkspace& ws,
                                 const std::function<void(int, int)>& emit) const {
  for (const AnchoredMatcher& m : matchers_) {
    int fwd[2] = {f.u, f.v};
    m.propagate(G, std::span<const int>(fwd, 2), ws, emit);
    int rev[2] = {f.v, f.u};
    m.propagate(G, std::span<const int>(rev, 2), ws, emit);
  }
}

void enumerate_anchored_copies(const Graph& H, Edge eH, const Graph& G, Edge eG,
                               const std::function<bool(const Embedding&)>& cb) {
  if (!H.has_edge(eH.u, eH.v))
    throw DomainError("enumerate_anchored_copies: anchor not an edge of H");
  AnchoredMatcher m(H, eH);
  MatchWorkspace ws;
  bool keep = true;
  auto wrapped = [&](const Embedding& e) {
    keep = cb(e);
    return keep;
  };
  int fwd[2] = {eG.u, eG.v};
  m.enumerate(G, std::span<const int>(fwd, 2), ws, wrapped);
  if (!keep) return;
  int rev[2] = {eG.v, eG.u};
  m.enumerate(G, std::span<const int>(rev, 2), ws, wrapped);
}

long long count_anchored_copies(const Graph& H, Edge eH, const Graph& G, Edge eG) {
  std::set<std::vector<Edge>> images;
  std::vector<Edge> pattern_edges = H.edges();
  enumerate_anchored_copies(H, eH, G, eG, [&](const Embedding& emb) {
    std::vector<Edge> image;
    image.reserve(pattern_edges.size());
    for (const Edge& pe : pattern_edges) image.push_back(Edge(emb.map[pe.u], emb.map[pe.v]));
    std::sort(image.begin(), image.end());
    images.insert(std::move(image));
    return true;
  });
  return (long long)images.size();
}

bool subgraph_exists(const Graph& pattern, const Graph& host) {
  if (pattern.vertex_count() == 0) return true;
  if (pattern.vertex_count() > host.vertex_count()) return false;
  AnchoredMatcher m(pattern, std::span<const int>{});
  MatchWorkspace ws;
  return m.exists(host, {}, ws);
}

namespace {

void collect_automorphisms(const Graph& g, std::vector<int>& perm, std::vector<char>& used,
                           int next, const std::function<void(const std::vector<int>&)>& sink) {
  int n = g.vertex_count();
  if (next == n) {
    sink(perm);
    return;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (g.degree(next) != g.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (g.has_edge(prev, next) != g.has_edge(perm[prev], cand)) ok = false;
    if (!ok) continue;
    perm[next] = cand;
    used[cand] = 1;
    collect_automorphisms(g, perm, used, next + 1, sink);
    used[cand] = 0;
  }
}

}  // namespace

std::vector<Edge> edge_orbit_representatives(const Graph& H) {
  std::vector<Edge> edges = H.edges();
  if (edges.empty()) return {};
  if (H.vertex_count() > 9) return edges;

  std::vector<int> orbit(edges.size());
  std::iota(orbit.begin(), orbit.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
    return x;
  };
  auto edge_index = [&](Edge e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    return (int)(it - edges.begin());
  };
  std::vector<int> perm(H.vertex_count(), -1);
  std::vector<char> used(H.vertex_count(), 0);
  collect_automorphisms(H, perm, used, 0, [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      int j = edge_index(Edge(p[edges[i].u], p[edges[i].v]));
      int x = find((int)i), y = find(j);
      if (x != y) orbit[std::max(x, y)] = std::min(x, y);
    }
  });
  std::vector<Edge> reps;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (find((int)i) == (int)i) reps.push_back(edges[i]);
  return reps;
}

}  // namespace percolab
