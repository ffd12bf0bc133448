#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/graph_algorithms.hpp"

namespace chipfire {

namespace families {

namespace detail {
using chipfire::detail::require;

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}
}  // namespace detail

inline Multigraph path(std::size_t n) {
  detail::require(n >= 1, "path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return Multigraph::from_edges(n, edges);
}

inline Multigraph cycle(std::size_t n) {
  detail::require(n >= 3, "cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1});
  return Multigraph::from_edges(n, edges);
}

// Vertex i + 1 hangs off parents[i], which must be at most i.
inline Multigraph tree(const std::vector<std::size_t>& parents) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    detail::require(parents[i] <= i, "tree parent of vertex " + std::to_string(i + 1) +
                                         " must have a smaller index");
    edges.push_back({parents[i], i + 1, 1});
  }
  return Multigraph::from_edges(parents.size() + 1, edges);
}

inline Multigraph star(std::size_t leaves) { return tree(std::vector<std::size_t>(leaves, 0)); }

inline Multigraph complete(std::size_t n) {
  detail::require(n >= 1, "complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  return Multigraph::from_edges(n, edges);
}

// K_{n_1,...,n_l}; parts are laid out consecutively.
inline Multigraph complete_multipartite(const std::vector<std::size_t>& parts) {
  detail::require(!parts.empty(), "complete multipartite graph needs a part");
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    detail::require(parts[p] >= 1, "parts must be non-empty");
    for (std::size_t i = 0; i < parts[p]; ++i) part_of.push_back(p);
    n += parts[p];
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.push_back({u, v, 1});
  return Multigraph::from_edges(n, edges);
}

// Path on `vertices` vertices with `multiplicity` parallel edges per step.
inline Multigraph multipath(std::size_t vertices, int multiplicity) {
  detail::require(vertices >= 1, "multipath needs at least one vertex");
  detail::require(multiplicity >= 1, "multipath multiplicity must be positive");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < vertices; ++v) edges.push_back({v, v + 1, multiplicity});
  return Multigraph::from_edges(vertices, edges);
}

// 2 x m slashed ladder. u_i is vertex i-1, v_i is vertex m+i-1.
// Rails u_i u_{i+1} and v_i v_{i+1}, rungs u_i v_i, and one slash per cell
// alternating in direction: u_i v_{i+1} for odd i, v_i u_{i+1} for even i.
//
// The slashes are pinned by the chain of equivalent divisors
// 2(u1)+(v1) ~ 3(u1)-(v1)+(v2) ~ (u2)+2(v2) ~ 2(u3)+(v3) ~ (u4)+2(v4).
// Firing v1 must send one chip to each of u1 and v2, so v1 carries no slash;
// firing u1 then sends chips to u2, v1 and v2, so the first slash is u1 v2.
// Firing the first two columns moves (u2)+2(v2) to 2(u3)+(v3) only if v2,
// not u2, has two edges into column 3, so the second slash is v2 u3, and so
// on alternately.
inline Multigraph slashed_ladder(std::size_t m) {
  detail::require(m >= 2, "slashed ladder needs m >= 2");
  auto u = [](std::size_t i) { return i - 1; };
  auto v = [m](std::size_t i) { return m + i - 1; };
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= m; ++i) {
    edges.push_back({u(i), v(i), 1});
    if (i < m) {
      edges.push_back({u(i), u(i + 1), 1});
      edges.push_back({v(i), v(i + 1), 1});
      if (i % 2 == 1)
        edges.push_back({u(i), v(i + 1), 1});
      else
        edges.push_back({v(i), u(i + 1), 1});
    }
  }
  auto labels = detail::numbered("u", m);
  auto vl = detail::numbered("v", m);
  labels.insert(labels.end(), vl.begin(), vl.end());
  return Multigraph::from_edges(2 * m, edges, std::move(labels));
}

// KL_{m,n}: slashed ladder with K_n glued on column m. The clique is
// {u_m, v_m, k_1, ..., k_{n-2}}, the extra vertices numbered from 2m; the rung
// u_m v_m doubles as a clique edge.
inline Multigraph complete_slashed_ladder(std::size_t m, std::size_t n) {
  detail::require(m >= 2, "complete slashed ladder needs m >= 2");
  detail::require(n >= 3, "complete slashed ladder needs n >= 3");
  const Multigraph ladder = slashed_ladder(m);
  std::vector<Edge> edges = ladder.edges();
  std::vector<Vertex> clique{m - 1, 2 * m - 1};
  for (std::size_t i = 0; i < n - 2; ++i) clique.push_back(2 * m + i);
  for (std::size_t a = 0; a < clique.size(); ++a)
    for (std::size_t b = a + 1; b < clique.size(); ++b)
      if (a != 0 || b != 1) edges.push_back({clique[a], clique[b], 1});
  auto labels = ladder.labels();
  auto kl = detail::numbered("k", n - 2);
  labels.insert(labels.end(), kl.begin(), kl.end());
  return Multigraph::from_edges(2 * m + n - 2, edges, std::move(labels));
}

// Antiprism on 2n vertices: u-cycle (0..n-1), v-cycle (n..2n-1), u_i joined
// to v_i and v_{i+1}; the augmented variant also joins u_i to v_{i-1}.
inline Multigraph antiprism(std::size_t n, bool augmented = false) {
  detail::require(n >= 3, "antiprism needs n >= 3");
  auto u = [](std::size_t i) { return i; };
  auto v = [n](std::size_t i) { return n + (i % n); };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({u(i), u((i + 1) % n), 1});
    edges.push_back({v(i), v(i + 1), 1});
    edges.push_back({u(i), v(i), 1});
    edges.push_back({u(i), v(i + 1), 1});
    if (augmented) edges.push_back({u(i), v(i + n - 1), 1});
  }
  auto labels = detail::numbered("u", n);
  auto vl = detail::numbered("v", n);
  labels.insert(labels.end(), vl.begin(), vl.end());
  return Multigraph::from_edges(2 * n, edges, std::move(labels));
}

// W_n: hub is vertex 0, rim vertices 1..n in cyclic order.
inline Multigraph wheel(std::size_t n) {
  detail::require(n >= 3, "wheel needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    edges.push_back({0, i, 1});
    edges.push_back({i, i % n + 1, 1});
  }
  std::vector<std::string> labels{"w"};
  auto rim = detail::numbered("r", n);
  labels.insert(labels.end(), rim.begin(), rim.end());
  return Multigraph::from_edges(n + 1, edges, std::move(labels));
}

// K_{n_1} x ... x K_{n_l}, mixed-radix indexed with the last factor fastest.
inline Multigraph rook(const std::vector<std::size_t>& sizes) {
  detail::require(!sizes.empty(), "rook's graph needs at least one factor");
  for (auto s : sizes) detail::require(s >= 2, "rook's graph factors need at least two vertices");
  Multigraph g = complete(sizes[0]);
  for (std::size_t i = 1; i < sizes.size(); ++i) g = cartesian_product(g, complete(sizes[i]));
  return g;
}

// r-regular multigraph on a cycle: r even gives C_{r+1} with r/2 parallel
// edges per step; r = 2s+1 gives C_{2s(s+1)+2} with multiplicities
// alternating s (edge 0-1) and s+1.
inline Multigraph regular_gap_multi(int r) {
  detail::require(r >= 4, "regular gap multigraph needs r >= 4");
  std::vector<Edge> edges;
  if (r % 2 == 0) {
    const std::size_t n = static_cast<std::size_t>(r) + 1;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, r / 2});
    return Multigraph::from_edges(n, edges);
  }
  const int s = (r - 1) / 2;
  const std::size_t n = static_cast<std::size_t>(2 * s * (s + 1) + 2);
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, v % 2 == 0 ? s : s + 1});
  return Multigraph::from_edges(n, edges);
}

// Smallest copy count N with N (r - 4) > 4r - 3.
inline std::size_t regular_gap_simple_default_copies(int r) {
  detail::require(r >= 6, "regular gap simple graph needs r >= 6");
  return static_cast<std::size_t>((4 * r - 3) / (r - 4) + 1);
}

// N copies of K_{r-3}; vertex j of copy i is i(r-3) + j. Vertex j of copy i
// is joined to vertices j and j+1 (mod r-3) of copy i+1 (mod N).
inline Multigraph regular_gap_simple(int r, std::optional<std::size_t> copies = std::nullopt) {
  detail::require(r >= 6, "regular gap simple graph needs r >= 6");
  const std::size_t n_copies = copies.value_or(regular_gap_simple_default_copies(r));
  detail::require(static_cast<long long>(n_copies) * (r - 4) > 4LL * r - 3,
                  "copy count too small: need N(r-4) > 4r-3");
  const std::size_t k = static_cast<std::size_t>(r - 3);
  auto at = [k](std::size_t i, std::size_t j) { return i * k + j; };
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n_copies; ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      labels.push_back("c" + std::to_string(i + 1) + "v" + std::to_string(a + 1));
      for (std::size_t b = a + 1; b < k; ++b) edges.push_back({at(i, a), at(i, b), 1});
      const std::size_t next = (i + 1) % n_copies;
      edges.push_back({at(i, a), at(next, a), 1});
      edges.push_back({at(i, a), at(next, (a + 1) % k), 1});
    }
  }
  return Multigraph::from_edges(n_copies * k, edges, std::move(labels));
}

// Loop of loops of genus g: a cycle through g - 1 double edges ("bananas")
// joined by single edges. Banana i joins 2i and 2i+1. 3-regular for g >= 3.
inline Multigraph loop_of_loops(int g) {
  detail::require(g >= 3, "loop of loops needs genus >= 3");
  const std::size_t n = 2 * static_cast<std::size_t>(g - 1);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, v % 2 == 0 ? 2 : 1});
  return Multigraph::from_edges(n, edges);
}

inline Multigraph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1});
    edges.push_back({i, i + 5, 1});
    edges.push_back({5 + i, 5 + (i + 2) % 5, 1});
  }
  return Multigraph::from_edges(10, edges);
}

// Divisors used as positive-rank witnesses for these families.
namespace witness {

// 3(u1)+(u2)+(u3)+(v1)+(v2)+3(v3) on the antiprism with n = 11.
inline Divisor antiprism_11() {
  Divisor d(22);
  d[0] = 3, d[1] = 1, d[2] = 1;
  d[11] = 1, d[12] = 1, d[13] = 3;
  return d;
}

// r(v) on vertex 0 for r even; s(s+1)((v1)+(v2)) across an s-fold edge for
// r = 2s+1.
inline Divisor regular_gap_multi(int r) {
  const Multigraph g = families::regular_gap_multi(r);
  Divisor d(g.vertex_count());
  if (r % 2 == 0) {
    d[0] = r;
  } else {
    const int s = (r - 1) / 2;
    d[0] = d[1] = s * (s + 1);
  }
  return d;
}

// 2(u1)+2(v1)+2(u9)+2(v9) on the augmented antiprism with n = 9.
inline Divisor augmented_antiprism_9() {
  Divisor d(18);
  d[0] = 2, d[8] = 2, d[9] = 2, d[17] = 2;
  return d;
}

// Four chips on every vertex of the first clique copy.
inline Divisor regular_gap_simple(int r, std::optional<std::size_t> copies = std::nullopt) {
  const std::size_t n_copies = copies.value_or(regular_gap_simple_default_copies(r));
  const std::size_t k = static_cast<std::size_t>(r - 3);
  Divisor d(n_copies * k);
  for (std::size_t j = 0; j < k; ++j) d[j] = 4;
  return d;
}

// Degree n on KL_{m,n}: 2(u1) + (v1) plus one chip on all but the last of the
// clique's extra vertices.
inline Divisor complete_slashed_ladder(std::size_t m, std::size_t n) {
  Divisor d(2 * m + n - 2);
  d[0] = 2;
  d[m] = 1;
  for (std::size_t i = 0; i + 1 < n - 2; ++i) d[2 * m + i] = 1;
  return d;
}

}  // namespace witness

}  // namespace families

enum class FamilyKind {
  path,
  cycle,
  tree,
  complete,
  complete_multipartite,
  multipath,
  slashed_ladder,
  complete_slashed_ladder,
  antiprism,
  augmented_antiprism,
  wheel,
  rook,
  regular_gap_multi,
  regular_gap_simple,
  cone,
  loop_of_loops,
};

inline const std::vector<std::pair<FamilyKind, std::string>>& family_names() {
  static const std::vector<std::pair<FamilyKind, std::string>> names{
      {FamilyKind::path, "path"},
      {FamilyKind::cycle, "cycle"},
      {FamilyKind::tree, "tree"},
      {FamilyKind::complete, "complete"},
      {FamilyKind::complete_multipartite, "complete_multipartite"},
      {FamilyKind::multipath, "multipath"},
      {FamilyKind::slashed_ladder, "slashed_ladder"},
      {FamilyKind::complete_slashed_ladder, "complete_slashed_ladder"},
      {FamilyKind::antiprism, "antiprism"},
      {FamilyKind::augmented_antiprism, "augmented_antiprism"},
      {FamilyKind::wheel, "wheel"},
      {FamilyKind::rook, "rook"},
      {FamilyKind::regular_gap_multi, "regular_gap_multi"},
      {FamilyKind::regular_gap_simple, "regular_gap_simple"},
      {FamilyKind::cone, "cone"},
      {FamilyKind::loop_of_loops, "loop_of_loops"},
  };
  return names;
}

inline std::string to_string(FamilyKind kind) {
  for (const auto& [k, name] : family_names())
    if (k == kind) return name;
  return "unknown";
}

inline FamilyKind family_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : family_names())
    if (n == name) return k;
  throw InvalidArgument("unknown graph family '" + name + "'");
}

// A family name with its integer parameters.
//
// Parameters per kind:
//   path n | cycle n | complete n | wheel n | slashed_ladder m
//   tree p_1 .. p_{n-1}             (parent of vertex i, each p_i < i)
//   complete_multipartite n_1 .. n_l
//   multipath j i                   (j vertices, i parallel edges)
//   complete_slashed_ladder m n
//   antiprism n | augmented_antiprism n
//   rook n_1 .. n_l
//   regular_gap_multi r | regular_gap_simple r [N]
//   cone k n u_1 v_1 u_2 v_2 ...    (k apexes over the graph on n vertices
//                                    with the listed edges)
//   loop_of_loops g
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<long long> params;
};

namespace detail {

inline void require_count(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  require(spec.params.size() >= lo && spec.params.size() <= hi,
          to_string(spec.kind) + " takes " +
              (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
              " parameter(s)");
}

inline std::size_t nonneg(long long v, const std::string& what) {
  require(v >= 0, what + " must be non-negative");
  return static_cast<std::size_t>(v);
}

inline std::vector<std::size_t> all_nonneg(const std::vector<long long>& v, const std::string& what) {
  std::vector<std::size_t> out;
  for (long long x : v) out.push_back(nonneg(x, what));
  return out;
}

// The base graph of a cone spec.
inline Multigraph cone_base(const FamilySpec& spec) {
  require(spec.params.size() >= 2 && spec.params.size() % 2 == 0,
          "cone takes k n followed by edge endpoint pairs");
  const std::size_t n = nonneg(spec.params[1], "cone base size");
  std::vector<Edge> edges;
  for (std::size_t i = 2; i < spec.params.size(); i += 2)
    edges.push_back({nonneg(spec.params[i], "vertex"), nonneg(spec.params[i + 1], "vertex"), 1});
  return Multigraph::from_edges(n, edges);
}

}  // namespace detail

inline Multigraph build(const FamilySpec& spec) {
  using detail::nonneg;
  using detail::require_count;
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::path:
      require_count(spec, 1, 1);
      return families::path(nonneg(p[0], "n"));
    case FamilyKind::cycle:
      require_count(spec, 1, 1);
      return families::cycle(nonneg(p[0], "n"));
    case FamilyKind::tree:
      return families::tree(detail::all_nonneg(p, "parent"));
    case FamilyKind::complete:
      require_count(spec, 1, 1);
      return families::complete(nonneg(p[0], "n"));
    case FamilyKind::complete_multipartite:
      return families::complete_multipartite(detail::all_nonneg(p, "part size"));
    case FamilyKind::multipath:
      require_count(spec, 2, 2);
      return families::multipath(nonneg(p[0], "j"), static_cast<int>(p[1]));
    case FamilyKind::slashed_ladder:
      require_count(spec, 1, 1);
      return families::slashed_ladder(nonneg(p[0], "m"));
    case FamilyKind::complete_slashed_ladder:
      require_count(spec, 2, 2);
      return families::complete_slashed_ladder(nonneg(p[0], "m"), nonneg(p[1], "n"));
    case FamilyKind::antiprism:
      require_count(spec, 1, 1);
      return families::antiprism(nonneg(p[0], "n"), false);
    case FamilyKind::augmented_antiprism:
      require_count(spec, 1, 1);
      return families::antiprism(nonneg(p[0], "n"), true);
    case FamilyKind::wheel:
      require_count(spec, 1, 1);
      return families::wheel(nonneg(p[0], "n"));
    case FamilyKind::rook:
      return families::rook(detail::all_nonneg(p, "factor size"));
    case FamilyKind::regular_gap_multi:
      require_count(spec, 1, 1);
      return families::regular_gap_multi(static_cast<int>(p[0]));
    case FamilyKind::regular_gap_simple:
      require_count(spec, 1, 2);
      if (p.size() == 2)
        return families::regular_gap_simple(static_cast<int>(p[0]), nonneg(p[1], "N"));
      return families::regular_gap_simple(static_cast<int>(p[0]));
    case FamilyKind::cone:
      return cone(detail::cone_base(spec), nonneg(p.at(0), "k"));
    case FamilyKind::loop_of_loops:
      require_count(spec, 1, 1);
      return families::loop_of_loops(static_cast<int>(p[0]));
  }
  throw InvalidArgument("unhandled family kind");
}

}  // namespace chipfire
