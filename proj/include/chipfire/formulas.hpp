#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/families.hpp"
#include "chipfire/graph_algorithms.hpp"

namespace chipfire {

// floor(sqrt(n)), exact.
inline std::uint64_t isqrt_floor(std::uint64_t n) {
  std::uint64_t r = 0;
  for (std::uint64_t bit = std::uint64_t{1} << 31; bit; bit >>= 1) {
    const std::uint64_t c = r | bit;
    if (c * c <= n) r = c;
  }
  return r;
}

inline std::uint64_t isqrt_ceil(std::uint64_t n) {
  const std::uint64_t f = isqrt_floor(n);
  return f * f == n ? f : f + 1;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// ceil(sqrt n) - 1 + ceil(n / ceil(sqrt n)).
inline std::int64_t wheel_gon(std::int64_t n) {
  chipfire::detail::require(n >= 3, "wheel needs n >= 3");
  const auto c = isqrt_ceil(static_cast<std::uint64_t>(n));
  return static_cast<std::int64_t>(c - 1 + ceil_div(static_cast<std::uint64_t>(n), c));
}

// ceil(n/2) + 1.
inline std::int64_t wheel_mfgon(std::int64_t n) {
  chipfire::detail::require(n >= 3, "wheel needs n >= 3");
  return (n + 1) / 2 + 1;
}

// (n_1 - 1) n_2 ... n_l with the sizes sorted ascending.
inline std::int64_t rook_mfgon(std::vector<std::int64_t> sizes) {
  chipfire::detail::require(!sizes.empty(), "rook's graph needs a factor");
  std::sort(sizes.begin(), sizes.end());
  chipfire::detail::require(sizes.front() >= 2, "rook factors need at least two vertices");
  std::int64_t value = sizes[0] - 1;
  for (std::size_t i = 1; i < sizes.size(); ++i) value *= sizes[i];
  return value;
}

// ceil(sqrt n) - 1 + ceil(n / ceil(sqrt n)) == floor(sqrt n) - 1 + ceil(n / floor(sqrt n)).
inline bool floor_ceil_identity(std::uint64_t n) {
  chipfire::detail::require(n >= 1, "identity is stated for positive n");
  const auto c = isqrt_ceil(n), f = isqrt_floor(n);
  return c - 1 + ceil_div(n, c) == f - 1 + ceil_div(n, f);
}

inline bool wheel_equality_predicate(std::int64_t n) { return wheel_gon(n) == wheel_mfgon(n); }

enum class Quantity { gon, mfgon };

struct Prediction {
  Quantity quantity = Quantity::gon;
  std::optional<std::int64_t> value;  // empty: not known in closed form
  std::string source;                 // which result supplies the value

  bool known() const noexcept { return value.has_value(); }
};

struct PredictionPair {
  Prediction gon{Quantity::gon, std::nullopt, ""};
  Prediction mfgon{Quantity::mfgon, std::nullopt, ""};
};

namespace detail {

inline PredictionPair both(std::int64_t gon, std::int64_t mfgon, const std::string& source) {
  return {{Quantity::gon, gon, source}, {Quantity::mfgon, mfgon, source}};
}

inline Prediction known(Quantity q, std::int64_t v, const std::string& source) { return {q, v, source}; }

inline Prediction unknown(Quantity q) { return {q, std::nullopt, "unknown"}; }

}  // namespace detail

// Proven values for a family instance. Anything without a closed form is
// reported unknown rather than estimated.
inline PredictionPair predicted(const FamilySpec& spec) {
  using detail::both;
  using detail::known;
  using detail::unknown;
  const Multigraph g = build(spec);  // validates parameters
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto& p = spec.params;
  PredictionPair out{unknown(Quantity::gon), unknown(Quantity::mfgon)};

  switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::tree:
      return n == 1 ? both(1, 1, "single-vertex") : both(1, 1, "tree");
    case FamilyKind::cycle:
      return both(2, 2, "cycle");
    case FamilyKind::complete:
      return n == 1 ? both(1, 1, "single-vertex") : both(n - 1, n - 1, "complete-graph");
    case FamilyKind::complete_multipartite: {
      const long long biggest = *std::max_element(p.begin(), p.end());
      if (p.size() == 1) return both(1, 1, "single-vertex");
      return both(n - biggest, n - biggest, "complete-multipartite");
    }
    case FamilyKind::multipath: {
      const std::int64_t j = p[0], i = p[1];
      if (j == 1) return both(1, 1, "single-vertex");
      if (i == 1) return both(1, 1, "tree");
      return {known(Quantity::gon, std::min(i, j), "multipath"),
              known(Quantity::mfgon, j, "all-multiedge")};
    }
    case FamilyKind::slashed_ladder:
      if (p[0] >= 3) return both(3, p[0], "slashed-ladder");
      return out;
    case FamilyKind::complete_slashed_ladder:
      return {known(Quantity::gon, p[1], "complete-slashed-ladder-gon"),
              known(Quantity::mfgon, p[1] + p[0] - 2, "complete-slashed-ladder-mfgon")};
    case FamilyKind::wheel:
      return {known(Quantity::gon, wheel_gon(p[0]), "wheel-gon"),
              known(Quantity::mfgon, wheel_mfgon(p[0]), "wheel-mfgon")};
    case FamilyKind::rook: {
      std::vector<std::int64_t> sizes(p.begin(), p.end());
      std::sort(sizes.begin(), sizes.end());
      out.mfgon = known(Quantity::mfgon, rook_mfgon(sizes), "rook-mfgon");
      if (sizes.size() == 1)
        out.gon = known(Quantity::gon, sizes[0] - 1, "complete-graph");
      else if (sizes == std::vector<std::int64_t>{2, 2})
        out.gon = known(Quantity::gon, 2, "cycle");
      else if (sizes == std::vector<std::int64_t>{2, 3, 4})
        out.gon = known(Quantity::gon, 12, "rook-2-3-4");
      return out;
    }
    case FamilyKind::regular_gap_multi:
      out.mfgon = known(Quantity::mfgon, n, "all-multiedge");
      return out;
    case FamilyKind::cone: {
      // A universal vertex with a connected remainder pins mfgon; minimum
      // valence above half the vertex count pins gon as well.
      const std::int64_t alpha = independence_number(g);
      out.mfgon = known(Quantity::mfgon, n - alpha, "universal-vertex");
      if (min_valence(g) >= n / 2 + 1) out.gon = known(Quantity::gon, n - alpha, "high-min-valence");
      return out;
    }
    case FamilyKind::antiprism:
    case FamilyKind::augmented_antiprism:
    case FamilyKind::loop_of_loops:
    case FamilyKind::regular_gap_simple:
      return out;
  }
  return out;
}

}  // namespace chipfire
