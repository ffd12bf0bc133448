#pragma once

// Slow reference implementations used to cross-check the production paths.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chipfire/combinatorics.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/graph_algorithms.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire::oracle {

// Calls f(E) for every effective divisor E of degree k on n vertices.
template <typename F>
bool for_each_effective(std::size_t n, Chips k, F&& f) {
  std::vector<Chips> x(n, 0);
  if (n == 0) return true;
  x[n - 1] = k;
  do {
    if (!f(Divisor(x))) return false;
  } while (compositions::next(x));
  return true;
}

// Rank straight from the quantifier: the largest r such that d - E is
// equivalent to an effective divisor for every effective E of degree r.
inline int rank_by_definition(const Multigraph& g, const Divisor& d) {
  if (!is_effective_equivalent(g, d)) return -1;
  const std::size_t n = g.vertex_count();
  for (Chips r = 1;; ++r) {
    bool all = for_each_effective(n, r, [&](const Divisor& e) { return is_effective_equivalent(g, d - e); });
    if (!all) return static_cast<int>(r - 1);
  }
}

// Whether a - b lies in the integer column space of the Laplacian, decided
// by diagonalising the Laplacian with unimodular row and column operations.
inline bool equivalent_by_smith(const Multigraph& g, const Divisor& a, const Divisor& b) {
  using I = __int128;
  const std::size_t n = g.vertex_count();
  const IntMatrix lap = laplacian(g);
  std::vector<std::vector<I>> m(n, std::vector<I>(n));
  std::vector<I> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = a[i] - b[i];
    for (std::size_t j = 0; j < n; ++j) m[i][j] = lap[i][j];
  }
  auto abs = [](I v) { return v < 0 ? -v : v; };
  std::size_t t = 0;
  for (; t < n; ++t) {
    // Pivot: smallest nonzero entry in the remaining block.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (m[i][j] != 0 && (!piv || abs(m[i][j]) < abs(m[piv->first][piv->second]))) piv = {i, j};
    if (!piv) break;
    std::swap(m[t], m[piv->first]);
    std::swap(rhs[t], rhs[piv->first]);
    for (auto& row : m) std::swap(row[t], row[piv->second]);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m[i][t] == 0) continue;
        I q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < n; ++j) m[i][j] -= q * m[t][j];
        rhs[i] -= q * rhs[t];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          std::swap(rhs[t], rhs[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m[t][j] == 0) continue;
        I q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < n; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
  }
  // Rows t.. are zero in the diagonal form; rows < t have pivot m[i][i].
  for (std::size_t i = 0; i < n; ++i) {
    if (i < t) {
      if (rhs[i] % m[i][i] != 0) return false;
    } else if (rhs[i] != 0) {
      return false;
    }
  }
  return true;
}

// Minimum degree of a divisor of rank >= r by trying every effective divisor
// of each degree with the definitional rank.
inline int gonality_brute_force(const Multigraph& g, int r = 1) {
  const std::size_t n = g.vertex_count();
  for (Chips d = r;; ++d) {
    bool found = !for_each_effective(n, d, [&](const Divisor& e) { return rank_by_definition(g, e) < r; });
    if (found) return static_cast<int>(d);
  }
}

// Minimum degree of a multiplicity-free divisor of rank >= r, or nullopt.
inline std::optional<int> mf_gonality_brute_force(const Multigraph& g, int r = 1) {
  const std::size_t n = g.vertex_count();
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<std::size_t> subset = colex::first(d);
    do {
      Divisor e(n);
      for (std::size_t v : subset) e[v] = 1;
      if (rank_by_definition(g, e) >= r) return static_cast<int>(d);
    } while (colex::next(subset, n));
  }
  return std::nullopt;
}

}  // namespace chipfire::oracle
