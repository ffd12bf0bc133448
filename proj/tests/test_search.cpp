#include <gtest/gtest.h>

#include "chipfire/combinatorics.hpp"
#include "chipfire/families.hpp"
#include "chipfire/oracles.hpp"
#include "chipfire/random.hpp"
#include "chipfire/search.hpp"

using namespace chipfire;

namespace {

int gon(const Multigraph& g, int r = 1) {
  SearchOptions o;
  o.rank = r;
  return *gonality(g, o).value;
}

int mfgon(const Multigraph& g) { return *mf_gonality(g).value; }

}  // namespace

TEST(Gonality, Cycles) {
  for (std::size_t n = 3; n <= 10; ++n) EXPECT_EQ(gon(families::cycle(n)), 2);
}

TEST(Gonality, CompleteGraphs) {
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(gon(families::complete(n)), static_cast<int>(n) - 1);
}

TEST(Gonality, SlashedLadder) {
  EXPECT_EQ(gon(families::slashed_ladder(4)), 3);
  for (std::size_t m = 2; m <= 6; ++m) EXPECT_EQ(mfgon(families::slashed_ladder(m)), static_cast<int>(m));
}

TEST(Gonality, TreesAndSingleVertex) {
  EXPECT_EQ(gon(families::path(1)), 1);
  EXPECT_EQ(gon(families::star(5)), 1);
  EXPECT_EQ(mfgon(families::path(6)), 1);
}

TEST(MfGonality, Examples) {
  for (std::size_t j = 2; j <= 6; ++j)
    for (int i = 2; i <= 4; ++i) EXPECT_EQ(mfgon(families::multipath(j, i)), static_cast<int>(j));
  EXPECT_EQ(mfgon(families::wheel(9)), 6);
}

TEST(MaxMfRank, Examples) {
  EXPECT_EQ(max_mf_rank(families::path(5)), 5);
  EXPECT_EQ(max_mf_rank(families::multipath(5, 2)), 1);
  EXPECT_EQ(max_mf_rank(families::regular_gap_multi(4)), 1);
  random::Rng rng(41);
  for (int i = 0; i < 30; ++i) EXPECT_GE(max_mf_rank(random::connected_simple(rng, random::uniform(rng, 2, 8), 0.3)), 2);
}

TEST(MfGonality, InfiniteAboveAllOnesRank) {
  const Multigraph g = families::multipath(4, 2);
  SearchOptions o;
  o.rank = 2;
  EXPECT_TRUE(mf_gonality(g, o).infinite());
  o.rank = 1;
  EXPECT_EQ(*mf_gonality(g, o).value, 4);
  const Multigraph c = families::cycle(5);
  o.rank = 4;
  EXPECT_EQ(*mf_gonality(c, o).value, 5);
  o.rank = 5;
  EXPECT_TRUE(mf_gonality(c, o).infinite());
}

TEST(Gonality, MatchesBruteForce) {
  random::Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = random::uniform(rng, 1, 6);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 4), 3);
    EXPECT_EQ(gon(g), oracle::gonality_brute_force(g));
    EXPECT_EQ(mfgon(g), *oracle::mf_gonality_brute_force(g));
    EXPECT_LE(gon(g), mfgon(g));
  }
}

TEST(Gonality, HigherRankMatchesBruteForce) {
  random::Rng rng(43);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = random::uniform(rng, 2, 5);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 3), 2);
    for (int r = 2; r <= 3; ++r) {
      EXPECT_EQ(gon(g, r), oracle::gonality_brute_force(g, r));
      SearchOptions o;
      o.rank = r;
      const auto mf = mf_gonality(g, o);
      const auto want = oracle::mf_gonality_brute_force(g, r);
      EXPECT_EQ(mf.value, want);
    }
  }
}

// The gonality witness is the lexicographically smallest 0-reduced effective
// divisor of the optimal degree with a chip on vertex 0 and positive rank.
TEST(Gonality, WitnessIsLexicographicallySmallestCandidate) {
  random::Rng rng(44);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = random::uniform(rng, 2, 6);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 4), 2);
    const GonalitySearchResult res = gonality(g);
    std::optional<Divisor> best;
    oracle::for_each_effective(n, *res.value, [&](const Divisor& d) {
      if (d[0] >= 1 && is_q_reduced(g, d, 0) && has_positive_rank(g, d) && (!best || d < *best)) best = d;
      return true;
    });
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(res.witness, *best);
  }
}

// The multiplicity-free witness is the first positive-rank subset in colex
// order, i.e. the lexicographically smallest when read from the last vertex.
TEST(MfGonality, WitnessIsFirstInColexOrder) {
  random::Rng rng(45);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = random::uniform(rng, 2, 7);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 4), 2);
    const GonalitySearchResult res = mf_gonality(g);
    std::vector<std::size_t> s = colex::first(static_cast<std::size_t>(*res.value));
    do {
      Divisor d(n);
      for (std::size_t v : s) d[v] = 1;
      if (has_positive_rank(g, d)) {
        EXPECT_EQ(res.witness, d);
        break;
      }
    } while (colex::next(s, n));
  }
}

TEST(Search, IndependentOfThreadCount) {
  const std::vector<Multigraph> graphs{families::wheel(9), families::complete_slashed_ladder(4, 4),
                                       families::antiprism(6), families::rook({3, 3})};
  for (const Multigraph& g : graphs) {
    SearchOptions one, many;
    many.jobs = 4;
    many.chunk = 7;
    const auto a = gonality(g, one), b = gonality(g, many);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.stats.degrees, b.stats.degrees);
    const auto c = mf_gonality(g, one), d = mf_gonality(g, many);
    EXPECT_EQ(c.value, d.value);
    EXPECT_EQ(c.witness, d.witness);
  }
}

TEST(Search, ExhaustiveScanCountsEveryCandidate) {
  SearchOptions o;
  o.jobs = 3;
  o.chunk = 100;
  const DegreeScan s = mf_scan_degree(families::antiprism(9, true), 8, o);
  EXPECT_FALSE(s.witness.has_value());
  EXPECT_EQ(s.stats.candidates, 43758u);
  EXPECT_EQ(s.stats.certificate_prunes + s.stats.full_checks, s.stats.candidates);
}

TEST(Search, LowerBoundHintIsCertified) {
  const Multigraph g = families::wheel(12);
  SearchOptions o;
  o.lower_bound = 6;
  const auto hinted = gonality(g, o);
  EXPECT_EQ(*hinted.value, 6);
  EXPECT_EQ(hinted.stats.degrees, (std::vector<int>{6, 5}));
  o.lower_bound = 3;
  EXPECT_EQ(*gonality(g, o).value, 6);
  // A hint above the true value is walked back down.
  o.lower_bound = 8;
  EXPECT_EQ(*gonality(g, o).value, 6);
}

TEST(Search, WitnessesPassIndependentCheck) {
  random::Rng rng(46);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = random::uniform(rng, 2, 7);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 5), 2);
    const auto a = gonality(g);
    EXPECT_EQ(a.witness.degree(), *a.value);
    EXPECT_GE(oracle::rank_by_definition(g, a.witness), 1);
    const auto b = mf_gonality(g);
    EXPECT_TRUE(b.witness.is_multiplicity_free());
    EXPECT_EQ(b.witness.degree(), *b.value);
    EXPECT_GE(oracle::rank_by_definition(g, b.witness), 1);
  }
}

TEST(BurningCertificate, SoundOnRandomDivisors) {
  random::Rng rng(47);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = random::uniform(rng, 2, 8);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 6), 2);
    const Divisor d = random::effective_divisor(rng, n, random::uniform_int(rng, 1, 6));
    if (burning_certificate_refutes(g, d)) {
      EXPECT_FALSE(has_positive_rank(g, d));
    }
  }
}
