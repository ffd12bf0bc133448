#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "chipfire/combinatorics.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Valences on the diagonal, minus edge multiplicities off it.
inline IntMatrix laplacian(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix l(n, std::vector<std::int64_t>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    l[u][u] = g.valence(u);
    for (const Neighbor& nb : g.neighbors(u)) l[u][nb.vertex] = -nb.multiplicity;
  }
  return l;
}

// Number of edges (with multiplicity) between `set` and its complement.
inline std::int64_t outdegree(const Multigraph& g, const VertexSet& set) {
  detail::require_same_graph(g, set);
  detail::require(set.is_proper_nonempty(), "outdegree needs a non-empty proper subset");
  std::int64_t out = 0;
  for (Vertex u : set.members())
    for (const Neighbor& nb : g.neighbors(u))
      if (!set.contains(nb.vertex)) out += nb.multiplicity;
  return out;
}

// First Betti number |E| - |V| + 1, edges counted with multiplicity.
inline std::int64_t genus(const Multigraph& g) {
  return g.edge_count() - static_cast<std::int64_t>(g.vertex_count()) + 1;
}

// K = sum of (val(v) - 2)(v).
inline Divisor canonical_divisor(const Multigraph& g) {
  Divisor k(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) k[v] = g.valence(v) - 2;
  return k;
}

inline int min_valence(const Multigraph& g) {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.valence(v));
  return best;
}

inline bool is_regular(const Multigraph& g, int r) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.valence(v) != r) return false;
  return true;
}

// True when every adjacent pair shares at least two edges.
inline bool all_edges_multiple(const Multigraph& g) {
  for (const Edge& e : g.edges())
    if (e.multiplicity < 2) return false;
  return true;
}

namespace detail {

// Is the graph minus `removed` disconnected? Multiplicities are ignored.
inline bool disconnected_without(const Multigraph& g, const std::vector<std::uint8_t>& removed) {
  const std::size_t n = g.vertex_count();
  Vertex start = n;
  std::size_t alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start == n) start = v;
    }
  }
  if (alive < 2) return false;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (removed[nb.vertex] || seen[nb.vertex]) continue;
      seen[nb.vertex] = 1;
      ++reached;
      stack.push_back(nb.vertex);
    }
  }
  return reached < alive;
}

// Maximum number of internally vertex-disjoint s-t paths, s and t
// non-adjacent. Unit vertex capacities via the usual in/out split.
inline int local_vertex_connectivity(const Multigraph& g, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out(2 * n);
  const int inf = static_cast<int>(n) + 1;
  auto add = [&](std::size_t a, std::size_t b, int cap) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, cap});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0});
  };
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
  for (Vertex u = 0; u < n; ++u)
    for (const Neighbor& nb : g.neighbors(u)) add(2 * u + 1, 2 * nb.vertex, inf);

  const std::size_t source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  std::vector<std::size_t> via(2 * n);
  for (;;) {
    std::vector<std::uint8_t> seen(2 * n, 0);
    std::queue<std::size_t> q;
    q.push(source);
    seen[source] = 1;
    while (!q.empty() && !seen[sink]) {
      std::size_t a = q.front();
      q.pop();
      for (std::size_t id : out[a]) {
        if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
          seen[arcs[id].to] = 1;
          via[arcs[id].to] = id;
          q.push(arcs[id].to);
        }
      }
    }
    if (!seen[sink]) break;
    for (std::size_t x = sink; x != source;) {
      std::size_t id = via[x];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      x = arcs[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

// Smallest vertex cut by exhaustive search over candidate cut sets.
inline int vertex_connectivity_brute_force(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    auto cut = colex::first(k);
    do {
      std::vector<std::uint8_t> removed(n, 0);
      for (Vertex v : cut) removed[v] = 1;
      if (detail::disconnected_without(g, removed)) return static_cast<int>(k);
    } while (colex::next(cut, n));
  }
  return static_cast<int>(n) - 1;
}

// Even's scheme: minimum local connectivity over non-adjacent pairs whose
// first vertex is among the first kappa+1 vertices.
inline int vertex_connectivity_max_flow(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  int best = static_cast<int>(n) - 1;
  for (Vertex i = 0; i < n && static_cast<int>(i) <= best; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) best = std::min(best, detail::local_vertex_connectivity(g, i, j));
  return best;
}

inline constexpr std::size_t kBruteForceConnectivityLimit = 16;

inline int vertex_connectivity(const Multigraph& g) {
  return g.vertex_count() <= kBruteForceConnectivityLimit ? vertex_connectivity_brute_force(g)
                                                          : vertex_connectivity_max_flow(g);
}

namespace detail {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(words_[i] & o.words_[i]));
    return c;
  }
  void and_not(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t w = words_[i]; w; w &= w - 1)
        f(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
  }

 private:
  std::vector<std::uint64_t> words_;
};

class IndependenceSolver {
 public:
  explicit IndependenceSolver(const Multigraph& g) : n_(g.vertex_count()) {
    closed_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      Bits b(n_);
      b.set(v);
      for (const Neighbor& nb : g.neighbors(v)) b.set(nb.vertex);
      closed_.push_back(std::move(b));
    }
  }

  std::size_t solve() {
    Bits all(n_);
    for (Vertex v = 0; v < n_; ++v) all.set(v);
    expand(0, all);
    return best_;
  }

 private:
  void expand(std::size_t taken, Bits candidates) {
    for (;;) {
      const std::size_t left = candidates.count();
      if (left == 0) {
        best_ = std::max(best_, taken);
        return;
      }
      if (taken + left <= best_) return;
      std::size_t min_v = 0, min_d = n_ + 1, max_v = 0, max_d = 0;
      candidates.for_each([&](std::size_t v) {
        const std::size_t d = closed_[v].count_and(candidates) - 1;
        if (d < min_d) min_d = d, min_v = v;
        if (d >= max_d) max_d = d, max_v = v;
      });
      // A vertex of degree at most one lies in some maximum independent set.
      if (min_d <= 1) {
        candidates.and_not(closed_[min_v]);
        ++taken;
        continue;
      }
      Bits with = candidates;
      with.and_not(closed_[max_v]);
      expand(taken + 1, with);
      candidates.reset(max_v);
    }
  }

  std::size_t n_;
  std::vector<Bits> closed_;
  std::size_t best_ = 0;
};

}  // namespace detail

// Largest set of pairwise non-adjacent vertices (exact branch and bound).
inline int independence_number(const Multigraph& g) {
  return static_cast<int>(detail::IndependenceSolver(g).solve());
}

// Vertex (a, b) of G x H gets index a * |V(H)| + b.
inline Multigraph cartesian_product(const Multigraph& g, const Multigraph& h) {
  detail::require(g.is_simple() && h.is_simple(), "cartesian_product needs simple graphs");
  const std::size_t ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < ng; ++a)
    for (const Edge& e : h.edges()) edges.push_back({a * nh + e.u, a * nh + e.v, 1});
  for (const Edge& e : g.edges())
    for (Vertex b = 0; b < nh; ++b) edges.push_back({e.u * nh + b, e.v * nh + b, 1});
  std::vector<std::string> labels;
  if (!g.labels().empty() || !h.labels().empty()) {
    for (Vertex a = 0; a < ng; ++a)
      for (Vertex b = 0; b < nh; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  }
  return Multigraph::from_edges(ng * nh, edges, std::move(labels));
}

// Adds `k` universal vertices one after another; new vertices are appended
// after the vertices of `h`.
inline Multigraph cone(const Multigraph& h, std::size_t k) {
  detail::require(h.is_simple(), "cone needs a simple base graph");
  detail::require(k >= 1, "cone needs at least one apex");
  const std::size_t n = h.vertex_count() + k;
  std::vector<Edge> edges = h.edges();
  for (Vertex a = h.vertex_count(); a < n; ++a)
    for (Vertex v = 0; v < a; ++v) edges.push_back({v, a, 1});
  std::vector<std::string> labels;
  if (!h.labels().empty()) {
    labels = h.labels();
    for (std::size_t i = 0; i < k; ++i) labels.push_back("apex" + std::to_string(i + 1));
  }
  return Multigraph::from_edges(n, edges, std::move(labels));
}

}  // namespace chipfire
