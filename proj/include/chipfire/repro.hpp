#pragma once

// Reproduction harness: regenerates the published numbers for every family
// and property this library covers and reports pass/fail per claim.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chipfire/enumerate.hpp"
#include "chipfire/families.hpp"
#include "chipfire/formulas.hpp"
#include "chipfire/io.hpp"
#include "chipfire/oracles.hpp"
#include "chipfire/random.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"
#include "chipfire/search.hpp"

namespace chipfire::repro {

enum class Status { pass, fail, skipped_long, gated };
enum class Scale { quick, full };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped_long: return "skipped-long";
    case Status::gated: return "gated";
  }
  return "?";
}

struct ReproOptions {
  Scale scale = Scale::quick;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

struct Outcome {
  bool ok = false;
  std::string expected;
  std::string computed;
};

struct Criterion {
  std::string id;
  std::string citation;
  double budget_seconds = 0;
  bool long_running = false;
  std::function<Outcome(const ReproOptions&)> run;
};

struct ReproRow {
  std::string id;
  std::string citation;
  std::string expected;
  std::string computed;
  Status status = Status::fail;
};

struct ReproReport {
  std::vector<ReproRow> rows;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const ReproRow& r) { return r.status == s; }));
  }
  bool ok() const { return count(Status::fail) == 0; }
};

namespace detail {

// Collects per-instance checks into one outcome.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 4) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += s;
  }
  Outcome outcome(std::string expected) const {
    std::ostringstream out;
    out << notes_;
    if (!notes_.empty()) out << "; ";
    out << (checks_ - failed_) << "/" << checks_ << " checks agree";
    for (const auto& f : failures_) out << "; MISMATCH " << f;
    return {failed_ == 0 && checks_ > 0, std::move(expected), out.str()};
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

inline SearchOptions search_options(const ReproOptions& o) {
  SearchOptions s;
  s.jobs = o.jobs;
  return s;
}

inline int gon(const Multigraph& g, const ReproOptions& o) { return *gonality(g, search_options(o)).value; }

inline int mfgon(const Multigraph& g, const ReproOptions& o) { return *mf_gonality(g, search_options(o)).value; }

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

inline std::string eq(const std::string& what, long long got, long long want) {
  return what + "=" + std::to_string(got) + " (want " + std::to_string(want) + ")";
}

inline Outcome complete_graphs(const ReproOptions& o) {
  Tally t;
  std::vector<int> values;
  for (std::size_t n = 3; n <= 7; ++n) {
    const Multigraph g = families::complete(n);
    const int v = gon(g, o);
    values.push_back(v);
    t.check(v == static_cast<int>(n) - 1, eq("gon(K_" + std::to_string(n) + ")", v, n - 1));
    std::size_t single = 0, spread = 0, other = 0;
    oracle::for_each_effective(n, static_cast<Chips>(n - 1), [&](const Divisor& d) {
      if (!has_positive_rank(g, d)) return true;
      const Chips top = *std::max_element(d.chips().begin(), d.chips().end());
      if (top == static_cast<Chips>(n - 1)) ++single;
      else if (top == 1) ++spread;
      else ++other;
      return true;
    });
    t.check(single == n && spread == n && other == 0,
            "K_" + std::to_string(n) + " positive-rank shapes " + std::to_string(single) + "/" +
                std::to_string(spread) + "/" + std::to_string(other));
  }
  t.note("gon(K_3..K_7)=" + join(values));
  return t.outcome("gon(K_n)=n-1 for n=3..7; positive rank at degree n-1 only for (n-1)(v) and n-1 single chips");
}

inline Outcome slashed_ladders(const ReproOptions& o) {
  Tally t;
  std::vector<std::string> vals;
  for (std::size_t m = 3; m <= 6; ++m) {
    const Multigraph g = families::slashed_ladder(m);
    const int a = gon(g, o), b = mfgon(g, o);
    vals.push_back(std::to_string(a) + "/" + std::to_string(b));
    t.check(a == 3, eq("gon(m=" + std::to_string(m) + ")", a, 3));
    t.check(b == static_cast<int>(m), eq("mfgon(m=" + std::to_string(m) + ")", b, m));
  }
  t.note("gon/mfgon for m=3..6: " + join(vals, " "));
  return t.outcome("gon=3 and mfgon=m for m=3..6");
}

inline void check_kl(Tally& t, std::size_t m, std::size_t n, long long want_gon, long long want_mf,
                     const ReproOptions& o, std::vector<std::string>& vals) {
  const Multigraph g = families::complete_slashed_ladder(m, n);
  const int a = gon(g, o), b = mfgon(g, o);
  const std::string name = "KL_{" + std::to_string(m) + "," + std::to_string(n) + "}";
  vals.push_back(name + "=" + std::to_string(a) + "/" + std::to_string(b));
  t.check(a == want_gon, eq("gon(" + name + ")", a, want_gon));
  t.check(b == want_mf, eq("mfgon(" + name + ")", b, want_mf));
}

inline Outcome complete_slashed_ladders(const ReproOptions& o) {
  Tally t;
  std::vector<std::string> vals;
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{2, 3}, {3, 3}, {3, 4}, {4, 4}, {6, 5}};
  for (auto [m, n] : pairs) check_kl(t, m, n, static_cast<long long>(n), static_cast<long long>(n + m - 2), o, vals);
  t.note(join(vals, " "));
  return t.outcome("gon(KL_{m,n})=n and mfgon=n+m-2; KL_{6,5}: 5 and 9");
}

inline Outcome gap_realization(const ReproOptions& o) {
  Tally t;
  std::vector<std::string> vals;
  for (int i = 3; i <= 6; ++i)
    for (int j = i; j <= 6; ++j)
      check_kl(t, static_cast<std::size_t>(j - i + 2), static_cast<std::size_t>(i), i, j, o, vals);
  t.note(join(vals, " "));
  return t.outcome("KL_{j-i+2,i} has gon=i and mfgon=j for 3<=i<=j<=6");
}

inline Outcome wheels(const ReproOptions& o) {
  Tally t;
  std::vector<std::string> vals;
  for (int n = 3; n <= 12; ++n) {
    const Multigraph g = families::wheel(static_cast<std::size_t>(n));
    const int a = gon(g, o), b = mfgon(g, o);
    vals.push_back(std::to_string(a) + "/" + std::to_string(b));
    t.check(a == wheel_gon(n), eq("gon(W_" + std::to_string(n) + ")", a, wheel_gon(n)));
    t.check(b == (n + 1) / 2 + 1, eq("mfgon(W_" + std::to_string(n) + ")", b, (n + 1) / 2 + 1));
    t.check((a == b) == (n <= 8), "equality at n=" + std::to_string(n));
  }
  t.note("gon/mfgon for n=3..12: " + join(vals, " "));
  return t.outcome("gon(W_n)=ceil(sqrt n)-1+ceil(n/ceil(sqrt n)), mfgon=ceil(n/2)+1, equal iff n<=8");
}

// Every vertex outside the first layer of the first factor.
inline Divisor rook_layer_divisor(const std::vector<std::size_t>& sizes) {
  std::size_t total = 1;
  for (std::size_t s : sizes) total *= s;
  const std::size_t layer = total / sizes[0];
  Divisor d(total);
  for (std::size_t v = layer; v < total; ++v) d[v] = 1;
  return d;
}

inline Outcome rooks(const ReproOptions& o) {
  Tally t;
  std::vector<std::string> vals;
  const std::vector<std::vector<std::size_t>> cases{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {3, 4}};
  for (const auto& sizes : cases) {
    const Multigraph g = families::rook(sizes);
    const int b = mfgon(g, o);
    const auto want = rook_mfgon(std::vector<std::int64_t>(sizes.begin(), sizes.end()));
    vals.push_back("(" + join(sizes) + ")=" + std::to_string(b));
    t.check(b == want, eq("mfgon(rook " + join(sizes) + ")", b, want));
  }
  const std::vector<std::size_t> big{2, 3, 4};
  const Multigraph g = families::rook(big);
  const Divisor w = rook_layer_divisor(big);
  const bool positive = has_positive_rank(g, w);
  t.check(positive && w.degree() == 12, "rook 2,3,4 degree-12 witness");
  t.note("mfgon " + join(vals, " ") + "; (2,3,4) layer witness degree " + std::to_string(w.degree()) +
         (positive ? " has positive rank" : " fails"));
  return t.outcome("mfgon=(n_1-1)n_2...n_l on (2,2),(2,3),(3,3),(2,2,2),(3,4); gon(K_2xK_3xK_4)<=12 by witness");
}

inline Outcome rook_234_exhaustive(const ReproOptions& o) {
  Tally t;
  const std::vector<std::size_t> sizes{2, 3, 4};
  const Multigraph g = families::rook(sizes);
  const DegreeScan scan = mf_scan_degree(g, 11, search_options(o));
  t.check(!scan.witness.has_value(), "degree-11 multiplicity-free divisor of positive rank found");
  t.check(has_positive_rank(g, rook_layer_divisor(sizes)), "degree-12 witness");
  t.note("degree 11 candidates " + std::to_string(scan.stats.candidates) + (scan.witness ? " (witness found)" : " all refuted"));
  return t.outcome("mfgon(K_2xK_3xK_4)=12");
}

inline Outcome mf_exhaustion(const Multigraph& g, const Divisor& witness, int degree, std::uint64_t expected_count,
                             const std::string& name, const ReproOptions& o) {
  Tally t;
  const bool positive = has_positive_rank(g, witness);
  t.check(positive && witness.degree() == degree, name + " witness");
  const DegreeScan scan = mf_scan_degree(g, degree, search_options(o));
  t.check(!scan.witness.has_value(), "multiplicity-free witness of degree " + std::to_string(degree) + " exists");
  t.check(scan.stats.candidates == expected_count, eq("candidates", static_cast<long long>(scan.stats.candidates),
                                                     static_cast<long long>(expected_count)));
  t.note("witness degree " + std::to_string(witness.degree()) + (positive ? " positive rank" : " rank 0") + "; " +
         std::to_string(scan.stats.candidates) + " degree-" + std::to_string(degree) + " mf divisors, " +
         (scan.witness ? "a witness exists" : "none of positive rank") + " (" +
         std::to_string(scan.stats.certificate_prunes) + " refuted by one burn)");
  return t.outcome("");
}

inline Outcome antiprism_11(const ReproOptions& o) {
  Outcome r = mf_exhaustion(families::antiprism(11), families::witness::antiprism_11(), 10, 646646, "A_11", o);
  r.expected = "3(u1)+(u2)+(u3)+(v1)+(v2)+3(v3) has positive rank; all 646646 degree-10 mf divisors have rank 0";
  return r;
}

inline Outcome augmented_antiprism_9(const ReproOptions& o) {
  Outcome r = mf_exhaustion(families::antiprism(9, true), families::witness::augmented_antiprism_9(), 8, 43758,
                            "augmented A_9", o);
  r.expected = "degree-8 divisor has positive rank; all 43758 degree-8 mf divisors have rank 0";
  return r;
}

inline Outcome regular_gap_multi(const ReproOptions& o) {
  Tally t;
  std::vector<std::string> vals;
  for (int r = 4; r <= 6; ++r) {
    const Multigraph g = families::regular_gap_multi(r);
    const Divisor w = families::witness::regular_gap_multi(r);
    const int n = static_cast<int>(g.vertex_count());
    const std::string name = "r=" + std::to_string(r);
    t.check(is_regular(g, r), name + " regular");
    t.check(has_positive_rank(g, w), name + " witness positive rank");
    t.check(w.degree() < n, name + " witness degree below |V|");
    t.check(all_edges_multiple(g), name + " all edges multiple");
    const DegreeScan scan = mf_scan_degree(g, n - 1, search_options(o));
    t.check(!scan.witness.has_value(), name + " mf divisor of degree |V|-1 has positive rank");
    t.check(has_positive_rank(g, Divisor::ones(g.vertex_count())), name + " all-ones positive rank");
    vals.push_back(name + ": gon<=" + std::to_string(w.degree()) + " mfgon=" + std::to_string(n));
  }
  t.note(join(vals, "; "));
  return t.outcome("gon<mfgon=|V| for the r-regular multigraphs, r=4,5,6");
}

inline Outcome regular_gap_simple(const ReproOptions& o) {
  Tally t;
  const Multigraph g = families::regular_gap_simple(7, 9);
  const Divisor w = families::witness::regular_gap_simple(7, 9);
  const bool positive = has_positive_rank(g, w);
  t.check(g.vertex_count() == 36 && g.is_simple() && is_regular(g, 7), "36 vertices, simple, 7-regular");
  t.check(positive && w.degree() == 16, "degree-16 witness positive rank");
  random::Rng rng(o.seed);
  std::size_t refuted = 0;
  const std::size_t samples = 100000;
  for (std::size_t i = 0; i < samples; ++i)
    if (burning_certificate_refutes(g, random::multiplicity_free_divisor(rng, 36, 16))) ++refuted;
  t.check(refuted == samples, eq("refuted samples", static_cast<long long>(refuted), samples));
  t.note("witness degree 16 " + std::string(positive ? "positive rank" : "rank 0") + "; " + std::to_string(refuted) +
         "/" + std::to_string(samples) + " sampled degree-16 mf divisors refuted by one burn");
  return t.outcome("4 chips on each vertex of one K_4 copy has positive rank; sampled degree-16 mf divisors have rank 0");
}

inline Outcome multipaths(const ReproOptions& o) {
  Tally t;
  std::vector<std::string> vals;
  for (int i = 2; i <= 5; ++i)
    for (int j = 2; j <= 5; ++j) {
      const Multigraph g = families::multipath(static_cast<std::size_t>(j), i);
      const int a = gon(g, o), b = mfgon(g, o);
      vals.push_back(std::to_string(a) + "/" + std::to_string(b));
      const std::string name = "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
      t.check(a == std::min(i, j), eq("gon" + name, a, std::min(i, j)));
      t.check(b == j, eq("mfgon" + name, b, j));
    }
  t.note("gon/mfgon over i,j=2..5: " + join(vals, " "));
  return t.outcome("gon=min(i,j) and mfgon=j for 2<=i,j<=5");
}

inline Outcome riemann_roch(const ReproOptions& o) {
  Tally t;
  random::Rng rng(o.seed + 12);
  for (int gi = 0; gi < 20; ++gi) {
    const std::size_t n = random::uniform(rng, 3, 10);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 4), 2);
    const Chips genus_g = genus(g);
    for (int di = 0; di < 10; ++di) {
      const Chips deg = random::uniform_int(rng, -3, 3 * genus_g);
      const Divisor d = random::divisor(rng, n, deg);
      const RiemannRochSides s = riemann_roch_sides(g, d);
      t.check(s.holds(), "graph " + std::to_string(gi) + " divisor " + emit_divisor(d));
    }
  }
  t.note("20 random multigraphs x 10 divisors");
  return t.outcome("r(D)-r(K-D)=deg(D)+1-g on 200 random instances");
}

inline Outcome all_ones_rank(const ReproOptions& o) {
  Tally t;
  std::vector<std::string> notes;
  for (std::size_t n = 2; n <= 8; ++n) {
    t.check(max_mf_rank(families::path(n)) == static_cast<int>(n), "path " + std::to_string(n));
    t.check(max_mf_rank(families::star(n - 1)) == static_cast<int>(n), "star " + std::to_string(n));
  }
  for (std::size_t n = 3; n <= 10; ++n)
    t.check(max_mf_rank(families::cycle(n)) == static_cast<int>(n) - 1, "cycle " + std::to_string(n));
  random::Rng rng(o.seed + 13);
  int min_simple = 1 << 30;
  for (int i = 0; i < 30; ++i) {
    const Multigraph g = random::connected_simple(rng, random::uniform(rng, 4, 8), 0.4);
    const int r = max_mf_rank(g);
    min_simple = std::min(min_simple, r);
    t.check(r >= 2, "random simple graph " + std::to_string(i) + " r=" + std::to_string(r));
  }
  for (int i = 0; i < 10; ++i) {
    const Multigraph g = random::all_multiedge(rng, random::uniform(rng, 3, 7), 0.4);
    t.check(max_mf_rank(g) == 1, "random all-multiedge graph " + std::to_string(i));
  }
  std::vector<std::string> cubic;
  const std::vector<std::pair<std::string, Multigraph>> graphs{
      {"K_4", families::complete(4)},
      {"K_3,3", families::complete_multipartite({3, 3})},
      {"prism", families::rook({2, 3})},
      {"cube", families::rook({2, 2, 2})},
      {"Petersen", families::petersen()}};
  for (const auto& [name, g] : graphs) {
    const int r = max_mf_rank(g);
    const auto gg = genus(g);
    cubic.push_back(name + " r=" + std::to_string(r) + " 2g-2=" + std::to_string(2 * gg - 2));
    t.check(r == 2 * gg - 2, eq("r(D_1) on " + name, r, 2 * gg - 2));
  }
  t.note("trees |V|, cycles |V|-1; min over random simple " + std::to_string(min_simple) + "; 3-regular: " +
         join(cubic, ", "));
  return t.outcome("r(D_1)=|V| on trees, |V|-1 on cycles, >=2 on simple graphs, 1 on all-multiedge graphs, 2g-2 on 3-regular graphs");
}

inline bool gon_is_two(const Multigraph& g) {
  return !gonality_scan_degree(g, 1).witness && gonality_scan_degree(g, 2).witness.has_value();
}

inline bool mfgon_is_two(const Multigraph& g) {
  return !mf_scan_degree(g, 1).witness && mf_scan_degree(g, 2).witness.has_value();
}

inline Outcome propositions(const ReproOptions& o) {
  Tally t;
  std::size_t graphs = 0, twos = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Multigraph& g : enumerate::connected_graphs(n)) {
      ++graphs;
      const bool a = gon_is_two(g), b = mfgon_is_two(g);
      twos += a;
      t.check(a == b, "gon=2 vs mfgon=2 on " + std::to_string(n) + "-vertex graph");
    }
  std::size_t kappa_cases = 0;
  std::vector<std::vector<std::size_t>> parts_list;
  auto gen = [&](auto&& self, std::vector<std::size_t> parts, std::size_t left, std::size_t max_part) -> void {
    if (parts.size() >= 2) parts_list.push_back(parts);
    for (std::size_t s = 1; s <= std::min(left, max_part); ++s) {
      parts.push_back(s);
      self(self, parts, left - s, s);
      parts.pop_back();
    }
  };
  gen(gen, {}, 8, 8);
  for (const auto& parts : parts_list) {
    const Multigraph g = families::complete_multipartite(parts);
    const int a = gon(g, o), kappa = vertex_connectivity(g);
    if (a != kappa) continue;
    ++kappa_cases;
    t.check(mfgon(g, o) == a, "multipartite " + join(parts));
  }
  std::size_t cones = 0;
  for (int m = 2; m <= 4; ++m)
    for (const Multigraph& h : enumerate::connected_graphs(m)) {
      const Multigraph g = cone(h, h.vertex_count());
      const int n = static_cast<int>(g.vertex_count());
      ++cones;
      t.check(min_valence(g) >= n / 2 + 1, "cone min valence");
      const int alpha = independence_number(g);
      t.check(gon(g, o) == n - alpha && mfgon(g, o) == n - alpha, "cone over " + std::to_string(m) + "-vertex graph");
    }
  t.note(std::to_string(graphs) + " connected simple graphs on 2..7 vertices (" + std::to_string(twos) +
         " with gon 2); " + std::to_string(kappa_cases) + " multipartite graphs with gon=kappa; " +
         std::to_string(cones) + " cones");
  return t.outcome("gon=2 iff mfgon=2 on simple graphs; gon=kappa implies gon=mfgon; high min valence gives gon=mfgon=n-alpha");
}

inline Outcome cone_reduction(const ReproOptions& o) {
  Tally t;
  random::Rng rng(o.seed + 15);
  std::vector<std::string> vals;
  for (int i = 0; i < 10; ++i) {
    const std::size_t m = random::uniform(rng, 4, 6);
    const Multigraph h = random::connected_simple(rng, m, 0.35);
    const Multigraph g = cone(h, m);
    const int b = mfgon(g, o), want = static_cast<int>(2 * m) - independence_number(h);
    vals.push_back(std::to_string(b));
    t.check(b == want, eq("mfgon(cone " + std::to_string(i) + ")", b, want));
  }
  t.note("mfgon values " + join(vals));
  return t.outcome("mfgon(cone(H,|V(H)|))=2|V(H)|-alpha(H) on 10 random H");
}

inline Outcome closed_form_arithmetic(const ReproOptions&) {
  Tally t;
  std::uint64_t identity_failures = 0;
  for (std::uint64_t n = 1; n <= 1000000; ++n)
    if (!floor_ceil_identity(n)) ++identity_failures;
  t.check(identity_failures == 0, "floor/ceiling identity failures " + std::to_string(identity_failures));
  std::vector<std::int64_t> predicate_failures;
  for (std::int64_t n = 3; n <= 10000; ++n)
    if (wheel_equality_predicate(n) != (n <= 8)) predicate_failures.push_back(n);
  t.check(predicate_failures.empty(), "wheel formulas disagree with n<=8 at n=" + join(predicate_failures));
  t.note("identity checked for n<=10^6, equality predicate for 3<=n<=10^4");
  return t.outcome("floor/ceiling identity for all n<=10^6; wheel gon=mfgon iff n<=8");
}

inline Outcome engine_properties(const ReproOptions& o) {
  Tally t;
  random::Rng rng(o.seed + 17);
  std::size_t rank_cases = 0, burn_cases = 0, thread_cases = 0;
  for (int inst = 0; inst < 1000; ++inst) {
    const std::size_t n = random::uniform(rng, 2, 6);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 4), 2);
    const std::string tag = "instance " + std::to_string(inst);
    const Vertex q = random::uniform(rng, 0, n - 1);
    const Divisor d = random::divisor(rng, n, random::uniform_int(rng, -2, 5));

    const ReductionResult red = q_reduce(g, d, q);
    Divisor moved = d;
    for (int k = 0; k < 4; ++k) moved = fire_set(g, moved, random::proper_subset(rng, n));
    t.check(q_reduce(g, moved, q).reduced == red.reduced, tag + " reduction uniqueness");
    t.check(replay(g, d, red.script) == red.reduced, tag + " script replay");
    t.check(equivalent(g, d, moved) && oracle::equivalent_by_smith(g, d, moved), tag + " equivalence");
    Divisor shifted = d;
    ++shifted[random::uniform(rng, 0, n - 1)];
    --shifted[random::uniform(rng, 0, n - 1)];
    t.check(equivalent(g, d, shifted) == oracle::equivalent_by_smith(g, d, shifted), tag + " equivalence oracle");

    const Divisor e = random::effective_divisor(rng, n, random::uniform_int(rng, 0, 6));
    const BurnReport burn = dhar(g, e, q);
    if (!burn.all_burned()) {
      ++burn_cases;
      t.check(!burn.unburned.contains(q) && is_legal_firing(g, e, burn.unburned), tag + " unburned set legal");
    }

    const RankResult rr = rank(g, d);
    ++rank_cases;
    t.check(rr.value == oracle::rank_by_definition(g, d), tag + " rank vs definition");
    if (rr.value >= 0)
      t.check(rr.witness.is_effective() && rr.witness.degree() == rr.value + 1 &&
                  !is_effective_equivalent(g, d - rr.witness),
              tag + " rank witness");

    if (inst % 25 == 0) {
      ++thread_cases;
      SearchOptions one = search_options(o), many = one;
      one.jobs = 1;
      many.jobs = 4;
      many.chunk = 3;
      const auto a = gonality(g, one), b = gonality(g, many);
      const auto c = mf_gonality(g, one), dd = mf_gonality(g, many);
      t.check(a.value == b.value && a.witness == b.witness && c.value == dd.value && c.witness == dd.witness,
              tag + " thread identity");
      t.check(has_positive_rank(g, a.witness) && oracle::rank_by_definition(g, a.witness) >= 1 &&
                  has_positive_rank(g, c.witness) && c.witness.is_multiplicity_free(),
              tag + " witness revalidation");
      if (n <= 5) t.check(*a.value == oracle::gonality_brute_force(g), tag + " gonality vs brute force");
    }
  }
  t.note(std::to_string(rank_cases) + " sampled multigraphs, " + std::to_string(burn_cases) +
         " partial burns, " + std::to_string(thread_cases) + " thread comparisons");
  return t.outcome("reduction unique, unburned sets legal, rank recursion matches definition, witnesses valid, results independent of threads");
}

inline Outcome loop_of_loops_5(const ReproOptions& o) {
  Tally t;
  const Multigraph g = families::loop_of_loops(5);
  t.check(is_regular(g, 3) && genus(g) == 5, "3-regular of genus 5");
  const int a = gon(g, o);
  t.check(a == 4, eq("gon", a, 4));
  // Group the effective degree-4 divisors by class.
  std::vector<std::pair<Divisor, Divisor>> reps;
  oracle::for_each_effective(g.vertex_count(), 4, [&](const Divisor& d) {
    reps.emplace_back(q_reduce(g, d, 0).reduced, d);
    return true;
  });
  std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t six_none_mf = 0;
  for (std::size_t i = 0; i < reps.size();) {
    std::size_t j = i;
    bool any_mf = false;
    while (j < reps.size() && reps[j].first == reps[i].first) any_mf |= reps[j++].second.is_multiplicity_free();
    if (j - i == 6 && !any_mf && has_positive_rank(g, reps[i].second)) ++six_none_mf;
    i = j;
  }
  t.check(six_none_mf > 0, "positive-rank degree-4 class with six effective members, none multiplicity-free");
  t.note("gon " + std::to_string(a) + "; " + std::to_string(six_none_mf) +
         " positive-rank degree-4 classes with exactly six effective members, none multiplicity-free");
  return t.outcome("3-regular genus 5, gon 4, a positive-rank degree-4 class with six effective members and no mf member");
}

}  // namespace detail

inline const std::vector<Criterion>& criteria() {
  using namespace detail;
  static const std::vector<Criterion> list{
      {"1", "complete graph gonality lemma", 10, false, complete_graphs},
      {"2", "slashed ladder example", 30, false, slashed_ladders},
      {"3", "complete slashed ladder lemmas", 300, false, complete_slashed_ladders},
      {"4", "gap realization theorem", 600, false, gap_realization},
      {"5", "wheel gonality theorem and corollary", 120, false, wheels},
      {"6", "rook's graph mfgon proposition", 300, false, rooks},
      {"6-long", "rook's graph K_2xK_3xK_4", 0, true, rook_234_exhaustive},
      {"7", "antiprism example", 600, false, antiprism_11},
      {"8", "augmented antiprism example", 60, false, augmented_antiprism_9},
      {"9", "regular multigraph gap proposition", 300, false, regular_gap_multi},
      {"10", "regular simple gap construction", 300, false, regular_gap_simple},
      {"11", "multipath proposition", 60, false, multipaths},
      {"12", "Riemann-Roch for graphs", 120, false, riemann_roch},
      {"13", "rank of the all-ones divisor", 120, false, all_ones_rank},
      {"14", "gonality two, connectivity and min-valence propositions", 600, false, propositions},
      {"15", "cone construction", 300, false, cone_reduction},
      {"16", "floor/ceiling identity and wheel equality", 5, false, closed_form_arithmetic},
      {"17", "engine self-consistency", 600, false, engine_properties},
      {"L5", "loop of loops example", 60, false, loop_of_loops_5},
  };
  return list;
}

inline ReproRow run_criterion(const Criterion& c, const ReproOptions& o) {
  ReproRow row{c.id, c.citation, "", "", Status::fail};
  if (c.long_running && o.scale == Scale::quick) {
    row.status = Status::skipped_long;
    row.computed = "not run in quick mode";
    return row;
  }
  try {
    Outcome out = c.run(o);
    row.expected = std::move(out.expected);
    row.computed = std::move(out.computed);
    row.status = out.ok ? Status::pass : Status::fail;
  } catch (const std::exception& e) {
    row.computed = std::string("error: ") + e.what();
  }
  return row;
}

inline ReproReport run_all(const ReproOptions& o) {
  ReproReport report;
  for (const Criterion& c : criteria()) report.rows.push_back(run_criterion(c, o));
  return report;
}

inline std::string format_report(const ReproReport& report) {
  std::ostringstream out;
  for (const ReproRow& r : report.rows) {
    out << r.id << "\t" << to_string(r.status) << "\t" << r.citation << "\n";
    if (!r.expected.empty()) out << "\texpected: " << r.expected << "\n";
    out << "\tcomputed: " << r.computed << "\n";
  }
  out << "summary: pass=" << report.count(Status::pass) << " fail=" << report.count(Status::fail)
      << " skipped-long=" << report.count(Status::skipped_long) << " gated=" << report.count(Status::gated) << "\n";
  return out.str();
}

}  // namespace chipfire::repro
