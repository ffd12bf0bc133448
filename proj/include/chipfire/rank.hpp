#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <unordered_map>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/graph_algorithms.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

struct RankResult {
  int value = -1;
  // value == -1: the base vertex at which the reduced form is in debt.
  Vertex base_vertex = 0;
  // value >= 0: effective, degree value + 1, and d - witness is not
  // equivalent to an effective divisor.
  Divisor witness;
};

namespace detail {

struct ChipsHash {
  std::size_t operator()(const std::vector<Chips>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Chips c : v) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ull + (h >> 29);
    return h;
  }
};

// Rank by the recursion r(D) = 1 + min_v r(D - (v)), memoised on the
// 0-reduced representative of each class. One instance per thread.
class RankEngine {
 public:
  explicit RankEngine(const Multigraph& g)
      : g_(&g), burner_(g), layers_(distance_layers(g, 0)) {}

  // Exact rank; `witness_out` receives the chips of a degree rank+1 witness.
  int rank(const Divisor& d, std::vector<Vertex>* witness_out = nullptr) {
    std::vector<Chips> r(d.chips().begin(), d.chips().end());
    if (d.degree() < 0) return -1;
    reduce(r);
    int value = exact(r);
    if (witness_out && value >= 0) *witness_out = memo_.at(r).witness;
    return value;
  }

  // rank(d) >= k, usually far cheaper than the exact rank.
  bool rank_at_least(const Divisor& d, int k) {
    if (k <= -1) return true;
    if (d.degree() < k) return false;
    std::vector<Chips> r(d.chips().begin(), d.chips().end());
    reduce(r);
    return at_least(r, k);
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  struct Entry {
    int lo = -1;
    int hi = std::numeric_limits<int>::max();
    bool exact = false;
    std::vector<Vertex> witness;
  };

  void reduce(std::vector<Chips>& r) { reduce_in_place(*g_, burner_, r, 0, layers_); }

  // r is 0-reduced. Children are visited chipless vertices first, since those
  // are where debt is hardest to pay.
  std::vector<Vertex> child_order(const std::vector<Chips>& r) const {
    std::vector<Vertex> order;
    order.reserve(r.size());
    for (Vertex v = 1; v < r.size(); ++v)
      if (r[v] == 0) order.push_back(v);
    for (Vertex v = 0; v < r.size(); ++v)
      if (v == 0 || r[v] != 0) order.push_back(v);
    return order;
  }

  std::vector<Chips> child(const std::vector<Chips>& r, Vertex v) {
    std::vector<Chips> c = r;
    --c[v];
    // Removing a chip from a non-empty vertex keeps the divisor reduced.
    if (v != 0 && c[v] < 0) reduce(c);
    return c;
  }

  int exact(const std::vector<Chips>& r) {
    if (r[0] < 0) return -1;
    if (auto it = memo_.find(r); it != memo_.end() && it->second.exact) return it->second.lo;
    int best = std::numeric_limits<int>::max();
    std::vector<Vertex> best_witness;
    for (Vertex v : child_order(r)) {
      auto c = child(r, v);
      const int value = exact(c);
      if (value < best) {
        best = value;
        best_witness.assign(1, v);
        if (value >= 0) {
          const auto& w = memo_.at(c).witness;
          best_witness.insert(best_witness.end(), w.begin(), w.end());
        }
        if (best == -1) break;
      }
    }
    Entry& e = memo_[r];
    e.lo = e.hi = best + 1;
    e.exact = true;
    e.witness = std::move(best_witness);
    return best + 1;
  }

  bool at_least(const std::vector<Chips>& r, int k) {
    if (r[0] < 0) return k <= -1;
    if (k <= 0) return true;
    Entry* e = nullptr;
    if (auto it = memo_.find(r); it != memo_.end()) {
      if (it->second.lo >= k) return true;
      if (it->second.hi < k) return false;
    }
    bool ok = true;
    for (Vertex v : child_order(r)) {
      if (!at_least(child(r, v), k - 1)) {
        ok = false;
        break;
      }
    }
    e = &memo_[r];
    if (ok)
      e->lo = std::max(e->lo, k);
    else
      e->hi = std::min(e->hi, k - 1);
    return ok;
  }

  const Multigraph* g_;
  Burner burner_;
  std::vector<std::vector<Vertex>> layers_;
  std::unordered_map<std::vector<Chips>, Entry, ChipsHash> memo_;
};

// d - (v) is effective-equivalent for every v, with d given 0-reduced.
// Optionally tries the one-pass rank-zero certificate first from up to
// `certificate_probes` chipless vertices; `pruned` reports whether that fired.
inline bool reduced_has_positive_rank(Burner& burner, std::span<const Chips> reduced,
                                      std::vector<Chips>& scratch, int certificate_probes = 0,
                                      bool* pruned = nullptr) {
  const std::size_t n = reduced.size();
  if (reduced[0] < 1) return false;
  if (certificate_probes > 0) {
    int probes = 0;
    for (Vertex v = 1; v < n && probes < certificate_probes; ++v) {
      if (reduced[v] != 0) continue;
      ++probes;
      burner.burn(reduced, v);
      if (burner.burned(0)) {
        if (pruned) *pruned = true;
        return false;
      }
    }
  }
  for (Vertex v = 1; v < n; ++v) {
    if (reduced[v] != 0) continue;
    scratch.assign(reduced.begin(), reduced.end());
    if (!chip_reaches(burner, scratch, v)) return false;
  }
  return true;
}

}  // namespace detail

// r(d) >= 1, checked with one reduction per chipless vertex.
inline bool has_positive_rank(const Multigraph& g, const Divisor& d) {
  detail::require_same_graph(g, d);
  if (d.degree() < 1) return false;
  std::vector<Chips> r(d.chips().begin(), d.chips().end());
  detail::Burner burner(g);
  detail::reduce_in_place(g, burner, r, 0, detail::distance_layers(g, 0));
  std::vector<Chips> scratch;
  return detail::reduced_has_positive_rank(burner, r, scratch);
}

inline bool rank_at_least(const Multigraph& g, const Divisor& d, int k) {
  detail::require_same_graph(g, d);
  if (k == 1) return has_positive_rank(g, d);
  detail::RankEngine engine(g);
  return engine.rank_at_least(d, k);
}

// Baker-Norine rank with a witness.
inline RankResult rank(const Multigraph& g, const Divisor& d) {
  detail::require_same_graph(g, d);
  RankResult result;
  detail::RankEngine engine(g);
  std::vector<Vertex> points;
  result.value = engine.rank(d, &points);
  result.base_vertex = 0;
  if (result.value >= 0) {
    result.witness = Divisor(g.vertex_count());
    for (Vertex v : points) ++result.witness[v];
  }
  return result;
}

struct RiemannRochSides {
  int rank_d = 0;
  int rank_k_minus_d = 0;
  Chips degree = 0;
  std::int64_t genus = 0;

  std::int64_t lhs() const { return rank_d - rank_k_minus_d; }
  std::int64_t rhs() const { return degree + 1 - genus; }
  bool holds() const { return lhs() == rhs(); }
};

// Both sides of r(D) - r(K - D) = deg(D) + 1 - g, each rank computed directly.
inline RiemannRochSides riemann_roch_sides(const Multigraph& g, const Divisor& d) {
  detail::require_same_graph(g, d);
  RiemannRochSides s;
  detail::RankEngine engine(g);
  s.rank_d = engine.rank(d);
  s.rank_k_minus_d = engine.rank(canonical_divisor(g) - d);
  s.degree = d.degree();
  s.genus = genus(g);
  return s;
}

inline bool riemann_roch_check(const Multigraph& g, const Divisor& d) {
  return riemann_roch_sides(g, d).holds();
}

}  // namespace chipfire
