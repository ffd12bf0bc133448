#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/error.hpp"

namespace chipfire {

using Vertex = std::size_t;
using Chips = std::int64_t;

// Subset of the vertices of a graph with a fixed vertex count.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : bits_(universe, 0) {
    for (Vertex v : members) insert(v);
  }

  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), std::uint8_t{1});
    s.size_ = universe;
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool is_full() const noexcept { return size_ == bits_.size(); }
  bool is_proper_nonempty() const noexcept { return !empty() && !is_full(); }

  bool contains(Vertex v) const noexcept { return v < bits_.size() && bits_[v] != 0; }

  void insert(Vertex v) {
    detail::require(v < bits_.size(), "vertex " + std::to_string(v) + " outside vertex set universe");
    if (!bits_[v]) {
      bits_[v] = 1;
      ++size_;
    }
  }

  void erase(Vertex v) {
    if (contains(v)) {
      bits_[v] = 0;
      --size_;
    }
  }

  VertexSet complement() const {
    VertexSet c(bits_.size());
    for (Vertex v = 0; v < bits_.size(); ++v)
      if (!bits_[v]) c.insert(v);
    return c;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (Vertex v = 0; v < bits_.size(); ++v)
      if (bits_[v]) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t size_ = 0;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  int multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  int multiplicity = 0;
};

namespace detail {

// Connected components of the graph given by a dense multiplicity table,
// restricted to vertices where `alive` is set. Components are listed in order
// of their smallest vertex; each component is sorted.
inline std::vector<std::vector<Vertex>> components(std::size_t n, const std::vector<int>& table,
                                                   const std::vector<std::uint8_t>& alive) {
  std::vector<std::vector<Vertex>> out;
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      Vertex u = comp[head];
      for (Vertex w = 0; w < n; ++w) {
        if (alive[w] && !seen[w] && table[u * n + w] > 0) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

// Finite connected loopless multigraph on vertices 0..n-1.
//
// Multiplicities live in a dense symmetric table; adjacency lists are derived
// once at construction. Instances are immutable and safe to share.
class Multigraph {
 public:
  Multigraph() = default;

  // Throws InvalidArgument on loops, out-of-range endpoints, non-positive
  // multiplicities, or n == 0, and DisconnectedGraph when not connected.
  // Repeated pairs accumulate.
  static Multigraph from_edges(std::size_t n, std::span<const Edge> edges,
                               std::vector<std::string> labels = {}) {
    detail::require(n > 0, "a graph needs at least one vertex");
    detail::require(labels.empty() || labels.size() == n, "label count must match vertex count");
    std::vector<int> table(n * n, 0);
    for (const Edge& e : edges) {
      detail::require(e.u < n && e.v < n, "edge endpoint out of range");
      detail::require(e.u != e.v, "loops are not allowed (vertex " + std::to_string(e.u) + ")");
      detail::require(e.multiplicity > 0, "edge multiplicity must be positive");
      table[e.u * n + e.v] += e.multiplicity;
      table[e.v * n + e.u] += e.multiplicity;
    }
    return Multigraph(n, std::move(table), std::move(labels));
  }

  static Multigraph from_edges(std::size_t n, std::initializer_list<Edge> edges,
                               std::vector<std::string> labels = {}) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels));
  }

  std::size_t vertex_count() const noexcept { return n_; }

  int multiplicity(Vertex u, Vertex v) const noexcept { return table_[u * n_ + v]; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return multiplicity(u, v) > 0; }

  int valence(Vertex v) const noexcept { return valence_[v]; }

  std::span<const Neighbor> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  // Total number of edges, counting multiplicity.
  std::int64_t edge_count() const noexcept { return edge_count_; }

  bool is_simple() const noexcept {
    return std::all_of(table_.begin(), table_.end(), [](int m) { return m <= 1; });
  }

  // Unordered pairs with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (int m = multiplicity(u, v); m > 0) out.push_back({u, v, m});
    return out;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

  // Labels are cosmetic and do not take part in equality.
  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  Multigraph(std::size_t n, std::vector<int> table, std::vector<std::string> labels)
      : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
    auto comps = detail::components(n_, table_, std::vector<std::uint8_t>(n_, 1));
    if (comps.size() > 1) {
      std::string msg = "graph is disconnected; component without vertex 0:";
      for (Vertex v : comps[1]) msg += " " + std::to_string(v);
      throw DisconnectedGraph(msg);
    }
    valence_.assign(n_, 0);
    offsets_.assign(n_ + 1, 0);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (int m = multiplicity(u, v); m > 0) {
          adjacency_.push_back({v, m});
          valence_[u] += m;
          edge_count_ += m;
        }
      }
      offsets_[u + 1] = adjacency_.size();
    }
    edge_count_ /= 2;
  }

  std::size_t n_ = 0;
  std::vector<int> table_;
  std::vector<std::string> labels_;
  std::vector<int> valence_;
  std::vector<Neighbor> adjacency_;
  std::vector<std::size_t> offsets_;
  std::int64_t edge_count_ = 0;
};

}  // namespace chipfire
