#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire {

// Integer chip count on each vertex of a graph. Negative entries are debt.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::size_t n) : chips_(n, 0) {}
  explicit Divisor(std::vector<Chips> chips) : chips_(std::move(chips)) {}
  Divisor(std::initializer_list<Chips> chips) : chips_(chips) {}

  static Divisor zero(std::size_t n) { return Divisor(n); }

  // D_1: one chip on every vertex.
  static Divisor ones(std::size_t n) { return Divisor(std::vector<Chips>(n, 1)); }

  // k(v).
  static Divisor point(std::size_t n, Vertex v, Chips k = 1) {
    Divisor d(n);
    d.chips_.at(v) = k;
    return d;
  }

  // Sum of (v) over the members of a vertex set.
  static Divisor indicator(const VertexSet& s) {
    Divisor d(s.universe());
    for (Vertex v : s.members()) d.chips_[v] = 1;
    return d;
  }

  std::size_t size() const noexcept { return chips_.size(); }
  Chips operator[](Vertex v) const noexcept { return chips_[v]; }
  Chips& operator[](Vertex v) noexcept { return chips_[v]; }
  std::span<const Chips> chips() const noexcept { return chips_; }
  std::span<Chips> chips() noexcept { return chips_; }

  Chips degree() const noexcept { return std::accumulate(chips_.begin(), chips_.end(), Chips{0}); }

  bool is_effective() const noexcept {
    return std::all_of(chips_.begin(), chips_.end(), [](Chips c) { return c >= 0; });
  }

  // Effective with at most one chip per vertex.
  bool is_multiplicity_free() const noexcept {
    return std::all_of(chips_.begin(), chips_.end(), [](Chips c) { return c == 0 || c == 1; });
  }

  Divisor& operator+=(const Divisor& o) {
    detail::require(o.size() == size(), "divisor size mismatch");
    for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] += o.chips_[i];
    return *this;
  }

  Divisor& operator-=(const Divisor& o) {
    detail::require(o.size() == size(), "divisor size mismatch");
    for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] -= o.chips_[i];
    return *this;
  }

  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }

  friend Divisor operator-(Divisor a) {
    for (Chips& c : a.chips_) c = -c;
    return a;
  }

  friend bool operator==(const Divisor&, const Divisor&) = default;
  // Lexicographic on the coefficient vector.
  friend auto operator<=>(const Divisor&, const Divisor&) = default;

 private:
  std::vector<Chips> chips_;
};

inline Chips degree(const Divisor& d) noexcept { return d.degree(); }
inline bool is_effective(const Divisor& d) noexcept { return d.is_effective(); }
inline bool is_multiplicity_free(const Divisor& d) noexcept { return d.is_multiplicity_free(); }

namespace detail {

inline void require_same_graph(const Multigraph& g, const Divisor& d) {
  require(d.size() == g.vertex_count(), "divisor has " + std::to_string(d.size()) +
                                            " entries but graph has " +
                                            std::to_string(g.vertex_count()) + " vertices");
}

inline void require_same_graph(const Multigraph& g, const VertexSet& s) {
  require(s.universe() == g.vertex_count(), "vertex set does not belong to this graph");
}

// Fires `members` (flagged in `in_set`) `times` times. No validation.
inline void fire_in_place(const Multigraph& g, std::span<Chips> chips, std::span<const Vertex> members,
                          const std::vector<std::uint8_t>& in_set, Chips times) {
  for (Vertex v : members) {
    for (const Neighbor& nb : g.neighbors(v)) {
      if (in_set[nb.vertex]) continue;
      const Chips moved = times * nb.multiplicity;
      chips[v] -= moved;
      chips[nb.vertex] += moved;
    }
  }
}

inline void fire_in_place(const Multigraph& g, Divisor& d, const VertexSet& s, Chips times = 1) {
  std::vector<std::uint8_t> in_set(g.vertex_count(), 0);
  auto members = s.members();
  for (Vertex v : members) in_set[v] = 1;
  fire_in_place(g, d.chips(), members, in_set, times);
}

}  // namespace detail

// Fires every vertex of `set` once: one chip crosses each edge leaving the set.
// The empty and full sets are rejected; firing them would do nothing.
inline Divisor fire_set(const Multigraph& g, const Divisor& d, const VertexSet& set) {
  detail::require_same_graph(g, d);
  detail::require_same_graph(g, set);
  detail::require(set.is_proper_nonempty(), "fire_set needs a non-empty proper subset");
  Divisor out = d;
  detail::fire_in_place(g, out, set);
  return out;
}

inline Divisor fire_vertex(const Multigraph& g, const Divisor& d, Vertex v) {
  return fire_set(g, d, VertexSet(g.vertex_count(), {v}));
}

// True when firing `set` from the effective divisor `d` creates no debt.
inline bool is_legal_firing(const Multigraph& g, const Divisor& d, const VertexSet& set) {
  detail::require(d.is_effective(), "is_legal_firing needs an effective divisor");
  return fire_set(g, d, set).is_effective();
}

}  // namespace chipfire
