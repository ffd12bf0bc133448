#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire::random {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Random spanning tree plus `extra_edges` further edges between random
// distinct pairs (repeats raise multiplicity up to `max_multiplicity`).
inline Multigraph connected_multigraph(Rng& rng, std::size_t n, std::size_t extra_edges,
                                       int max_multiplicity = 2) {
  std::vector<int> table(n * n, 0);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    Vertex p = uniform(rng, 0, v - 1);
    table[p * n + v] = table[v * n + p] = 1;
  }
  if (n >= 2) {
    for (std::size_t added = 0, tries = 0; added < extra_edges && tries < 100 * (extra_edges + 1); ++tries) {
      Vertex a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
      if (a == b || table[a * n + b] >= max_multiplicity) continue;
      ++table[a * n + b];
      ++table[b * n + a];
      ++added;
    }
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (table[u * n + v]) edges.push_back({u, v, table[u * n + v]});
  return Multigraph::from_edges(n, edges);
}

// Random spanning tree plus each other pair with probability p; simple.
inline Multigraph connected_simple(Rng& rng, std::size_t n, double p) {
  std::vector<std::uint8_t> adj(n * n, 0);
  for (Vertex v = 1; v < n; ++v) {
    Vertex parent = uniform(rng, 0, v - 1);
    adj[parent * n + v] = adj[v * n + parent] = 1;
  }
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!adj[u * n + v] && coin(rng)) adj[u * n + v] = 1;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adj[u * n + v] || adj[v * n + u]) edges.push_back({u, v, 1});
  return Multigraph::from_edges(n, edges);
}

// A connected simple graph with every edge given multiplicity in [lo, hi].
inline Multigraph all_multiedge(Rng& rng, std::size_t n, double p, int lo = 2, int hi = 3) {
  Multigraph base = connected_simple(rng, n, p);
  std::vector<Edge> edges = base.edges();
  for (Edge& e : edges) e.multiplicity = static_cast<int>(uniform_int(rng, lo, hi));
  return Multigraph::from_edges(n, edges);
}

// Random divisor of the given degree with entries spread over [-spread, spread]
// before the degree is corrected on a random vertex.
inline Divisor divisor(Rng& rng, std::size_t n, Chips degree, Chips spread = 2) {
  Divisor d(n);
  for (Vertex v = 0; v < n; ++v) d[v] = uniform_int(rng, -spread, spread);
  d[uniform(rng, 0, n - 1)] += degree - d.degree();
  return d;
}

inline Divisor effective_divisor(Rng& rng, std::size_t n, Chips degree) {
  Divisor d(n);
  for (Chips i = 0; i < degree; ++i) ++d[uniform(rng, 0, n - 1)];
  return d;
}

// Uniform k-subset of the vertices as a multiplicity-free divisor.
inline Divisor multiplicity_free_divisor(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[uniform(rng, i, n - 1)]);
  Divisor d(n);
  for (std::size_t i = 0; i < k; ++i) d[all[i]] = 1;
  return d;
}

inline VertexSet proper_subset(Rng& rng, std::size_t n) {
  VertexSet s(n);
  while (!s.is_proper_nonempty()) {
    s = VertexSet(n);
    for (Vertex v = 0; v < n; ++v)
      if (uniform(rng, 0, 1)) s.insert(v);
  }
  return s;
}

}  // namespace chipfire::random
