#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

// Outcome of one pass of Dhar's burning algorithm.
struct BurnReport {
  Vertex source = 0;
  std::vector<Vertex> burned_order;  // source first
  VertexSet unburned;                // empty when the whole graph burned

  bool all_burned() const noexcept { return unburned.empty(); }
};

// One set-firing in a reduction script: `set` fired `times` times in a row.
struct FiringStep {
  VertexSet set;
  Chips times = 1;

  friend bool operator==(const FiringStep&, const FiringStep&) = default;
};

struct ReductionResult {
  Divisor reduced;
  std::vector<FiringStep> script;  // phase-1 layer firings, then Dhar firings
  std::size_t layer_firings = 0;   // leading script entries from phase 1
  std::size_t dhar_passes = 0;     // burning passes run in phase 2
};

namespace detail {

// Reusable buffers for the burning process. Not thread-safe; one per worker.
class Burner {
 public:
  explicit Burner(const Multigraph& g)
      : g_(&g), heat_(g.vertex_count(), 0), burned_(g.vertex_count(), 0) {
    queue_.reserve(g.vertex_count());
  }

  // Burns from `source` against `chips`; returns the number of burned
  // vertices. Burn order is the breadth-first order with neighbours scanned
  // by ascending index.
  std::size_t burn(std::span<const Chips> chips, Vertex source) {
    std::fill(heat_.begin(), heat_.end(), Chips{0});
    std::fill(burned_.begin(), burned_.end(), std::uint8_t{0});
    queue_.clear();
    burned_[source] = 1;
    queue_.push_back(source);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex u = queue_[head];
      for (const Neighbor& nb : g_->neighbors(u)) {
        const Vertex w = nb.vertex;
        if (burned_[w]) continue;
        heat_[w] += nb.multiplicity;
        if (heat_[w] > chips[w]) {
          burned_[w] = 1;
          queue_.push_back(w);
        }
      }
    }
    return queue_.size();
  }

  bool burned(Vertex v) const noexcept { return burned_[v] != 0; }
  // For an unburned vertex: edges joining it to burned vertices.
  Chips heat(Vertex v) const noexcept { return heat_[v]; }
  const std::vector<Vertex>& order() const noexcept { return queue_; }
  const std::vector<std::uint8_t>& burned_flags() const noexcept { return burned_; }

  // Fires the unburned set as many times as stays legal; returns the count.
  Chips fire_unburned_max(std::span<Chips> chips) {
    Chips times = std::numeric_limits<Chips>::max();
    const std::size_t n = g_->vertex_count();
    for (Vertex v = 0; v < n; ++v)
      if (!burned_[v] && heat_[v] > 0) times = std::min(times, chips[v] / heat_[v]);
    fire_unburned(chips, times);
    return times;
  }

  void fire_unburned(std::span<Chips> chips, Chips times) {
    const std::size_t n = g_->vertex_count();
    for (Vertex v = 0; v < n; ++v) {
      if (burned_[v]) continue;
      for (const Neighbor& nb : g_->neighbors(v)) {
        if (!burned_[nb.vertex]) continue;
        const Chips moved = times * nb.multiplicity;
        chips[v] -= moved;
        chips[nb.vertex] += moved;
      }
    }
  }

 private:
  const Multigraph* g_;
  std::vector<Chips> heat_;
  std::vector<std::uint8_t> burned_;
  std::vector<Vertex> queue_;
};

// Breadth-first layers around q: layers[0] = {q}.
inline std::vector<std::vector<Vertex>> distance_layers(const Multigraph& g, Vertex q) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n, n);
  std::vector<std::vector<Vertex>> layers{{q}};
  dist[q] = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    std::vector<Vertex> next;
    for (Vertex u : layers[i])
      for (const Neighbor& nb : g.neighbors(u))
        if (dist[nb.vertex] == n) {
          dist[nb.vertex] = i + 1;
          next.push_back(nb.vertex);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

// Clears all debt away from q. Working outward-in, layer i is fixed by firing
// everything closer to q just often enough; that firing only moves chips from
// layer i-1 into layer i, so layers already fixed stay fixed.
// `on_fire(layer_index, times)` is told about each firing of layers [0, i).
template <typename OnFire>
void clear_debt_off(const Multigraph& g, std::span<Chips> chips,
                    const std::vector<std::vector<Vertex>>& layers, OnFire&& on_fire) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> inner(n, 0);
  for (std::size_t i = layers.size(); i-- > 1;) {
    std::fill(inner.begin(), inner.end(), std::uint8_t{0});
    for (const Vertex v : layers[i - 1]) inner[v] = 1;
    Chips times = 0;
    for (const Vertex v : layers[i]) {
      if (chips[v] >= 0) continue;
      Chips toward = 0;
      for (const Neighbor& nb : g.neighbors(v))
        if (inner[nb.vertex]) toward += nb.multiplicity;
      times = std::max(times, (-chips[v] + toward - 1) / toward);
    }
    if (times == 0) continue;
    for (const Vertex u : layers[i - 1])
      for (const Neighbor& nb : g.neighbors(u))
        if (!inner[nb.vertex] && std::binary_search(layers[i].begin(), layers[i].end(), nb.vertex)) {
          chips[u] -= times * nb.multiplicity;
          chips[nb.vertex] += times * nb.multiplicity;
        }
    on_fire(i, times);
  }
}

// Brings a divisor that is effective off q to its q-reduced form, firing each
// unburned set as often as legal.
inline void settle(Burner& burner, std::span<Chips> chips, Vertex q) {
  const std::size_t n = chips.size();
  while (burner.burn(chips, q) < n) burner.fire_unburned_max(chips);
}

// In-place q-reduction without a script, for hot paths.
inline void reduce_in_place(const Multigraph& g, Burner& burner, std::span<Chips> chips, Vertex q,
                            const std::vector<std::vector<Vertex>>& layers) {
  clear_debt_off(g, chips, layers, [](std::size_t, Chips) {});
  settle(burner, chips, q);
}

// Given d effective, decides whether d - (v) is equivalent to an effective
// divisor by driving d toward its v-reduced form. Stops as soon as v holds a
// chip. `chips` is clobbered.
inline bool chip_reaches(Burner& burner, std::span<Chips> chips, Vertex v) {
  const std::size_t n = chips.size();
  while (chips[v] < 1) {
    if (burner.burn(chips, v) == n) return false;
    burner.fire_unburned_max(chips);
  }
  return true;
}

}  // namespace detail

// Dhar's burning algorithm from q. Requires d to be effective away from q.
inline BurnReport dhar(const Multigraph& g, const Divisor& d, Vertex q) {
  detail::require_same_graph(g, d);
  detail::require(q < g.vertex_count(), "burn source out of range");
  for (Vertex v = 0; v < d.size(); ++v)
    detail::require(v == q || d[v] >= 0,
                    "dhar needs a divisor without debt away from the source (vertex " +
                        std::to_string(v) + ")");
  detail::Burner burner(g);
  burner.burn(d.chips(), q);
  BurnReport report;
  report.source = q;
  report.burned_order = burner.order();
  report.unburned = VertexSet(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!burner.burned(v)) report.unburned.insert(v);
  return report;
}

inline bool is_q_reduced(const Multigraph& g, const Divisor& d, Vertex q) {
  detail::require_same_graph(g, d);
  for (Vertex v = 0; v < d.size(); ++v)
    if (v != q && d[v] < 0) return false;
  detail::Burner burner(g);
  return burner.burn(d.chips(), q) == g.vertex_count();
}

// The unique q-reduced divisor equivalent to d, with the firing script that
// produced it. Phase two fires each unburned set exactly once per pass.
inline ReductionResult q_reduce(const Multigraph& g, const Divisor& d, Vertex q) {
  detail::require_same_graph(g, d);
  detail::require(q < g.vertex_count(), "base vertex out of range");
  const std::size_t n = g.vertex_count();
  ReductionResult result;
  result.reduced = d;
  auto chips = result.reduced.chips();

  const auto layers = detail::distance_layers(g, q);
  detail::clear_debt_off(g, chips, layers, [&](std::size_t i, Chips times) {
    VertexSet inner(n);
    for (std::size_t j = 0; j < i; ++j)
      for (Vertex v : layers[j]) inner.insert(v);
    result.script.push_back({std::move(inner), times});
  });
  result.layer_firings = result.script.size();

  detail::Burner burner(g);
  for (;;) {
    ++result.dhar_passes;
    if (burner.burn(chips, q) == n) break;
    burner.fire_unburned(chips, 1);
    VertexSet fired(n);
    for (Vertex v = 0; v < n; ++v)
      if (!burner.burned(v)) fired.insert(v);
    if (result.script.size() > result.layer_firings && result.script.back().set == fired)
      ++result.script.back().times;
    else
      result.script.push_back({std::move(fired), 1});
  }
  return result;
}

// Replays a firing script on d.
inline Divisor replay(const Multigraph& g, Divisor d, const std::vector<FiringStep>& script) {
  detail::require_same_graph(g, d);
  for (const FiringStep& step : script) {
    detail::require_same_graph(g, step.set);
    detail::require(step.set.is_proper_nonempty(), "script step must be a non-empty proper subset");
    detail::fire_in_place(g, d, step.set, step.times);
  }
  return d;
}

// Sound certificate that r(d) = 0: d effective and q-reduced, d(v) = 0, and one
// burning pass from v reaches q.
inline bool rank_zero_certificate(const Multigraph& g, const Divisor& d, Vertex q, Vertex v) {
  detail::require_same_graph(g, d);
  detail::require(q < g.vertex_count() && v < g.vertex_count(), "vertex out of range");
  detail::require(v != q, "certificate needs v != q");
  detail::require(d.is_effective(), "certificate needs an effective divisor");
  detail::require(d[v] == 0, "certificate needs d(v) = 0");
  detail::require(is_q_reduced(g, d, q), "certificate needs a q-reduced divisor");
  detail::Burner burner(g);
  burner.burn(d.chips(), v);
  return burner.burned(q);
}

// d is equivalent to an effective divisor.
inline bool is_effective_equivalent(const Multigraph& g, const Divisor& d) {
  detail::require_same_graph(g, d);
  if (d.degree() < 0) return false;
  Divisor work = d;
  detail::Burner burner(g);
  detail::reduce_in_place(g, burner, work.chips(), 0, detail::distance_layers(g, 0));
  return work[0] >= 0;
}

// Same class in Pic(G): compared through q-reduction at vertex 0.
inline bool equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
  detail::require_same_graph(g, a);
  detail::require_same_graph(g, b);
  if (a.degree() != b.degree()) return false;
  Divisor x = a, y = b;
  detail::Burner burner(g);
  const auto layers = detail::distance_layers(g, 0);
  detail::reduce_in_place(g, burner, x.chips(), 0, layers);
  detail::reduce_in_place(g, burner, y.chips(), 0, layers);
  return x == y;
}

}  // namespace chipfire
