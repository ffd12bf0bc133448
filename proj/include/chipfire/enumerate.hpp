#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire::enumerate {

namespace detail {

// Small simple graph as rows of neighbour bitmasks (n <= 8).
struct Small {
  int n = 0;
  std::vector<std::uint32_t> rows;
};

// Upper-triangle bit code of `g` relabelled by `order` (order[new] = old).
inline std::uint64_t code(const Small& g, const std::vector<int>& order) {
  std::uint64_t c = 0;
  int bit = 0;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b, ++bit)
      if ((g.rows[order[a]] >> order[b]) & 1u) c |= std::uint64_t{1} << bit;
  return c;
}

// Canonical code: the smallest code over labellings that list vertices by
// non-decreasing degree. That ordering is isomorphism-invariant, so
// isomorphic graphs share a code.
inline std::uint64_t canonical(const Small& g) {
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = __builtin_popcount(g.rows[v]);
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b] || (deg[a] == deg[b] && a < b); });
  // Permute within each block of equal degree.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < g.n;) {
    int j = i;
    while (j < g.n && deg[order[j]] == deg[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      best = std::min(best, code(g, order));
      return;
    }
    auto first = order.begin() + blocks[b].first, last = order.begin() + blocks[b].second;
    std::sort(first, last);
    do self(self, b + 1);
    while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return best;
}

inline Small decode(int n, std::uint64_t c) {
  Small g{n, std::vector<std::uint32_t>(n, 0)};
  int bit = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++bit)
      if ((c >> bit) & 1u) {
        g.rows[a] |= 1u << b;
        g.rows[b] |= 1u << a;
      }
  return g;
}

inline bool connected(const Small& g) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if ((frontier >> v) & 1u) next |= g.rows[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.n == 32 ? ~0u : (1u << g.n) - 1);
}

}  // namespace detail

// Every simple graph on n vertices up to isomorphism, as canonical codes.
inline std::vector<std::uint64_t> all_graph_codes(int n) {
  chipfire::detail::require(n >= 1 && n <= 8, "graph enumeration supports 1..8 vertices");
  std::set<std::uint64_t> current{0};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t c : current) {
      const detail::Small base = detail::decode(k - 1, c);
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        detail::Small g{k, base.rows};
        g.rows.push_back(mask);
        for (int v = 0; v < k - 1; ++v)
          if ((mask >> v) & 1u) g.rows[v] |= 1u << (k - 1);
        next.insert(detail::canonical(g));
      }
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

// Connected simple graphs on n vertices, one per isomorphism class.
inline std::vector<Multigraph> connected_graphs(int n) {
  std::vector<Multigraph> out;
  for (std::uint64_t c : all_graph_codes(n)) {
    const detail::Small g = detail::decode(n, c);
    if (!detail::connected(g)) continue;
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if ((g.rows[a] >> b) & 1u) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), 1});
    out.push_back(Multigraph::from_edges(static_cast<std::size_t>(n), edges));
  }
  return out;
}

// Isomorphism-invariant code of a simple graph with at most 8 vertices.
inline std::uint64_t canonical_code(const Multigraph& g) {
  chipfire::detail::require(g.is_simple() && g.vertex_count() <= 8, "canonical code needs a simple graph on <= 8 vertices");
  const int n = static_cast<int>(g.vertex_count());
  detail::Small s{n, std::vector<std::uint32_t>(n, 0)};
  for (const Edge& e : g.edges()) {
    s.rows[e.u] |= 1u << e.v;
    s.rows[e.v] |= 1u << e.u;
  }
  return detail::canonical(s);
}

}  // namespace chipfire::enumerate
