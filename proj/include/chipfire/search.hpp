#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "chipfire/combinatorics.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/graph_algorithms.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

struct SearchStats {
  std::uint64_t candidates = 0;          // divisors enumerated
  std::uint64_t not_reduced = 0;         // dropped by the reducedness filter
  std::uint64_t certificate_prunes = 0;  // refuted by a single burning pass
  std::uint64_t full_checks = 0;         // candidates given the full rank test
  std::vector<int> degrees;              // degrees examined, in order
  double seconds = 0.0;

  SearchStats& operator+=(const SearchStats& o) {
    candidates += o.candidates;
    not_reduced += o.not_reduced;
    certificate_prunes += o.certificate_prunes;
    full_checks += o.full_checks;
    return *this;
  }
};

struct SearchOptions {
  int rank = 1;
  // Trusted lower bound; the search still certifies the degree below it.
  std::optional<int> lower_bound;
  unsigned jobs = 1;
  int certificate_probes = 3;
  std::uint64_t chunk = 2048;
};

struct GonalitySearchResult {
  std::optional<int> value;  // empty means infinity
  Divisor witness;
  SearchStats stats;

  bool infinite() const noexcept { return !value.has_value(); }
};

// Outcome of searching a single degree.
struct DegreeScan {
  std::optional<Divisor> witness;
  SearchStats stats;
};

namespace detail {

// Scans candidate indices [0, total) in chunks over `jobs` threads and
// returns the smallest index accepted by `test`. `make_worker()` builds the
// per-thread state; `worker(begin, end, stats)` returns the first hit in its
// range. The result does not depend on `jobs`.
template <typename MakeWorker>
std::optional<std::uint64_t> first_hit(std::uint64_t total, const SearchOptions& opt,
                                       MakeWorker&& make_worker, SearchStats& stats) {
  if (total == 0) return std::nullopt;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  const unsigned jobs = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(opt.jobs == 0 ? 1 : opt.jobs, chunks)));

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::mutex stats_mutex;
  std::exception_ptr failure;

  auto run = [&] {
    SearchStats local;
    try {
      auto worker = make_worker();
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        const std::uint64_t begin = c * chunk;
        if (c >= chunks || begin >= best.load()) break;
        const std::uint64_t end = std::min(total, begin + chunk);
        if (auto hit = worker(begin, end, local)) {
          std::uint64_t cur = best.load();
          while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(stats_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
    std::lock_guard lock(stats_mutex);
    stats += local;
  };

  if (jobs == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  const std::uint64_t b = best.load();
  if (b == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return b;
}

// Multiplicity-free d: if one burning pass from some chipless vertex burns
// everything, d is reduced there and r(d) = 0. Probes at most `limit`
// chipless vertices (all of them when limit < 0).
inline bool burning_refutes(Burner& burner, std::span<const Chips> chips, int limit) {
  const std::size_t n = chips.size();
  int probes = 0;
  for (Vertex v = 0; v < n && (limit < 0 || probes < limit); ++v) {
    if (chips[v] != 0) continue;
    ++probes;
    if (burner.burn(chips, v) == n) return true;
  }
  return false;
}

// r(d) >= 1 for an effective d, trying cheap certificates first.
inline bool effective_has_positive_rank(Burner& burner, std::span<const Chips> chips,
                                        std::vector<Chips>& scratch, int probes, bool& pruned) {
  pruned = false;
  if (probes > 0 && burning_refutes(burner, chips, probes)) {
    pruned = true;
    return false;
  }
  for (Vertex v = 0; v < chips.size(); ++v) {
    if (chips[v] != 0) continue;
    scratch.assign(chips.begin(), chips.end());
    if (!chip_reaches(burner, scratch, v)) return false;
  }
  return true;
}

inline void revalidate(const Multigraph& g, const Divisor& witness, int r, Chips degree,
                       bool multiplicity_free) {
  bool ok = witness.degree() == degree && witness.is_effective() &&
            (!multiplicity_free || witness.is_multiplicity_free());
  if (ok) {
    if (r == 1) {
      ok = has_positive_rank(g, witness);
    } else {
      RankEngine engine(g);
      ok = engine.rank_at_least(witness, r);
    }
  }
  if (!ok) throw std::logic_error("search witness failed independent revalidation");
}

}  // namespace detail

// Searches effective 0-reduced divisors of degree d with at least r chips on
// vertex 0 for one of rank >= r. Candidates are visited in lexicographic order
// of their coefficient vectors, so the witness is the lexicographically
// smallest one.
inline DegreeScan gonality_scan_degree(const Multigraph& g, int d, const SearchOptions& opt = {}) {
  const int r = opt.rank;
  detail::require(r >= 1, "rank must be positive");
  DegreeScan scan;
  const std::size_t n = g.vertex_count();
  if (d < r) return scan;
  const std::uint64_t spare = static_cast<std::uint64_t>(d - r);
  const std::uint64_t total = compositions::count(spare, n);

  auto make_worker = [&] {
    return [&g, &opt, r, n, spare, burner = detail::Burner(g), scratch = std::vector<Chips>(),
            engine = std::optional<detail::RankEngine>()](std::uint64_t begin, std::uint64_t end,
                                                           SearchStats& st) mutable
           -> std::optional<std::uint64_t> {
      auto x = compositions::unrank(begin, spare, n);
      x[0] += r;
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i != begin) {
          x[0] -= r;
          compositions::next(x);
          x[0] += r;
        }
        ++st.candidates;
        if (burner.burn(x, 0) != n) {
          ++st.not_reduced;
          continue;
        }
        bool hit;
        if (r == 1) {
          bool pruned = false;
          hit = detail::reduced_has_positive_rank(burner, x, scratch, opt.certificate_probes, &pruned);
          if (pruned)
            ++st.certificate_prunes;
          else
            ++st.full_checks;
        } else {
          if (!engine) engine.emplace(g);
          ++st.full_checks;
          hit = engine->rank_at_least(Divisor(x), r);
        }
        if (hit) return i;
      }
      return std::nullopt;
    };
  };

  if (auto hit = detail::first_hit(total, opt, make_worker, scan.stats)) {
    auto x = compositions::unrank(*hit, spare, n);
    x[0] += r;
    scan.witness = Divisor(std::move(x));
  }
  return scan;
}

// Searches multiplicity-free divisors of degree d (d-subsets of the vertices
// in colexicographic order) for one of rank >= r.
inline DegreeScan mf_scan_degree(const Multigraph& g, int d, const SearchOptions& opt = {}) {
  const int r = opt.rank;
  detail::require(r >= 1, "rank must be positive");
  DegreeScan scan;
  const std::size_t n = g.vertex_count();
  if (d < r || d > static_cast<int>(n)) return scan;
  const std::size_t k = static_cast<std::size_t>(d);
  const std::uint64_t total = colex::count(n, k);

  auto make_worker = [&] {
    return [&g, &opt, r, n, k, burner = detail::Burner(g), scratch = std::vector<Chips>(),
            chips = std::vector<Chips>(n, 0), engine = std::optional<detail::RankEngine>()](
               std::uint64_t begin, std::uint64_t end,
               SearchStats& st) mutable -> std::optional<std::uint64_t> {
      auto c = colex::unrank(begin, n, k);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i != begin) colex::next(c, n);
        ++st.candidates;
        std::fill(chips.begin(), chips.end(), Chips{0});
        for (std::size_t v : c) chips[v] = 1;
        bool hit;
        if (r == 1) {
          bool pruned = false;
          hit = detail::effective_has_positive_rank(burner, chips, scratch, opt.certificate_probes,
                                                    pruned);
          if (pruned)
            ++st.certificate_prunes;
          else
            ++st.full_checks;
        } else {
          if (!engine) engine.emplace(g);
          ++st.full_checks;
          hit = engine->rank_at_least(Divisor(chips), r);
        }
        if (hit) return i;
      }
      return std::nullopt;
    };
  };

  if (auto hit = detail::first_hit(total, opt, make_worker, scan.stats)) {
    Divisor w(n);
    for (std::size_t v : colex::unrank(*hit, n, k)) w[v] = 1;
    scan.witness = std::move(w);
  }
  return scan;
}

namespace detail {

// Shared degree schedule. Rank >= r is monotone in added chips, so refuting
// one degree refutes every smaller one; a lower-bound start is certified by
// refuting the degree just below it.
template <typename Scan>
GonalitySearchResult ascend(const Multigraph& g, const SearchOptions& opt, int floor_degree,
                            int ceiling_degree, bool multiplicity_free, Scan&& scan) {
  const auto t0 = std::chrono::steady_clock::now();
  GonalitySearchResult result;
  auto run = [&](int d) {
    DegreeScan s = scan(d);
    result.stats += s.stats;
    result.stats.degrees.push_back(d);
    return s.witness;
  };
  const int start =
      std::min(ceiling_degree, std::max(floor_degree, opt.lower_bound.value_or(floor_degree)));
  int found_degree = -1;
  for (int d = start; d <= ceiling_degree; ++d) {
    if (auto w = run(d)) {
      found_degree = d;
      result.witness = std::move(*w);
      break;
    }
  }
  if (found_degree < 0) throw std::logic_error("degree schedule exhausted without a witness");
  if (found_degree == start) {
    for (int d = start - 1; d >= floor_degree; --d) {
      auto w = run(d);
      if (!w) break;
      found_degree = d;
      result.witness = std::move(*w);
    }
  }
  result.value = found_degree;
  revalidate(g, result.witness, opt.rank, found_degree, multiplicity_free);
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace detail

// gon_r(G): minimum degree of a divisor of rank >= r. Terminates by degree
// r + genus, where every divisor has rank >= r.
inline GonalitySearchResult gonality(const Multigraph& g, const SearchOptions& opt = {}) {
  detail::require(opt.rank >= 1, "rank must be positive");
  const int ceiling = opt.rank + static_cast<int>(genus(g));
  return detail::ascend(g, opt, opt.rank, ceiling, false,
                        [&](int d) { return gonality_scan_degree(g, d, opt); });
}

// r(D_1): the largest rank of any multiplicity-free divisor.
inline int max_mf_rank(const Multigraph& g) {
  detail::RankEngine engine(g);
  return engine.rank(Divisor::ones(g.vertex_count()));
}

// mfgon_r(G), or infinity when r exceeds r(D_1).
inline GonalitySearchResult mf_gonality(const Multigraph& g, const SearchOptions& opt = {}) {
  detail::require(opt.rank >= 1, "rank must be positive");
  const int n = static_cast<int>(g.vertex_count());
  if (opt.rank > 1) {
    detail::RankEngine engine(g);
    if (!engine.rank_at_least(Divisor::ones(g.vertex_count()), opt.rank)) return {};
  }
  return detail::ascend(g, opt, opt.rank, n, true,
                        [&](int d) { return mf_scan_degree(g, d, opt); });
}

// True when a single burning pass from some chipless vertex burns the whole
// graph, certifying r(d) = 0 for the effective divisor d.
inline bool burning_certificate_refutes(const Multigraph& g, const Divisor& d) {
  detail::require_same_graph(g, d);
  detail::require(d.is_effective(), "burning certificate needs an effective divisor");
  detail::Burner burner(g);
  return detail::burning_refutes(burner, d.chips(), -1);
}

}  // namespace chipfire
