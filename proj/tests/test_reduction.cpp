#include <gtest/gtest.h>

#include "chipfire/combinatorics.hpp"
#include "chipfire/families.hpp"
#include "chipfire/random.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"
#include "chipfire/search.hpp"

using namespace chipfire;

TEST(Dhar, CompleteGraphSurvivesWithOneChipEach) {
  const BurnReport r = dhar(families::complete(4), Divisor{1, 1, 1, 0}, 3);
  EXPECT_EQ(r.source, 3u);
  EXPECT_EQ(r.burned_order, std::vector<Vertex>{3});
  EXPECT_EQ(r.unburned, VertexSet(4, {0, 1, 2}));
}

TEST(Dhar, ZeroDivisorBurnsEverything) {
  random::Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = random::uniform(rng, 1, 9);
    const Multigraph g = random::connected_multigraph(rng, n, 5, 3);
    const Vertex q = random::uniform(rng, 0, n - 1);
    const BurnReport r = dhar(g, Divisor(n), q);
    EXPECT_TRUE(r.all_burned());
    EXPECT_EQ(r.burned_order.size(), n);
    EXPECT_EQ(r.burned_order.front(), q);
  }
}

TEST(Dhar, RejectsDebtAwayFromSource) {
  EXPECT_THROW(dhar(families::cycle(3), Divisor{0, -1, 1}, 0), InvalidArgument);
  EXPECT_NO_THROW(dhar(families::cycle(3), Divisor{-4, 1, 1}, 0));
}

TEST(Dhar, AntiprismFireFromChiplessPair) {
  const Multigraph g = families::antiprism(11);
  random::Rng rng(22);
  for (int i = 0; i < 2000; ++i) {
    const Divisor d = random::multiplicity_free_divisor(rng, 22, 10);
    Vertex start = 22;
    for (Vertex k = 0; k < 11 && start == 22; ++k)
      if (d[k] == 0 && d[11 + k] == 0) start = k;
    ASSERT_LT(start, 22u);
    EXPECT_TRUE(dhar(g, d, start).all_burned());
  }
}

TEST(Dhar, UnburnedSetIsLegalAndPartitions) {
  random::Rng rng(23);
  int partial = 0;
  for (int i = 0; i < 1500; ++i) {
    const std::size_t n = random::uniform(rng, 2, 9);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 8), 3);
    const Vertex q = random::uniform(rng, 0, n - 1);
    Divisor d = random::effective_divisor(rng, n, random::uniform_int(rng, 0, 12));
    d[q] -= random::uniform_int(rng, 0, 3);
    const BurnReport r = dhar(g, d, q);
    EXPECT_EQ(r.burned_order.front(), q);
    EXPECT_EQ(r.burned_order.size() + r.unburned.size(), n);
    for (Vertex v : r.burned_order) EXPECT_FALSE(r.unburned.contains(v));
    if (!r.all_burned()) {
      ++partial;
      EXPECT_FALSE(r.unburned.contains(q));
      const Divisor fired = fire_set(g, d, r.unburned);
      for (Vertex v = 0; v < n; ++v)
        if (v != q) {
          EXPECT_GE(fired[v], 0);
        }
    }
  }
  EXPECT_GT(partial, 100);
}

TEST(QReduce, CycleOfFour) {
  const ReductionResult r = q_reduce(families::cycle(4), Divisor::point(4, 2, 2), 0);
  EXPECT_EQ(r.reduced, Divisor::point(4, 0, 2));
  EXPECT_EQ(replay(families::cycle(4), Divisor::point(4, 2, 2), r.script), r.reduced);
}

// On a tree every divisor reaches its base vertex; checked against a
// breadth-first search over legal firings on small paths.
TEST(QReduce, TreesConcentrateOnBase) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Multigraph g = families::path(n);
    for (Chips deg = 0; deg <= 3; ++deg) {
      std::vector<Chips> x(n, 0);
      x[n - 1] = deg;
      do {
        const Divisor d(x);
        for (Vertex q = 0; q < n; ++q) EXPECT_EQ(q_reduce(g, d, q).reduced, Divisor::point(n, q, deg));
      } while (compositions::next(x));
    }
  }
  random::Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = random::uniform(rng, 2, 10);
    std::vector<std::size_t> parents;
    for (std::size_t v = 1; v < n; ++v) parents.push_back(random::uniform(rng, 0, v - 1));
    const Multigraph g = families::tree(parents);
    const Divisor d = random::effective_divisor(rng, n, 5);
    const Vertex q = random::uniform(rng, 0, n - 1);
    EXPECT_EQ(q_reduce(g, d, q).reduced, Divisor::point(n, q, 5));
  }
}

// Exhaustive check for paths: the effective divisors reachable by legal
// firings from (deg) chips on one end include deg chips on every vertex.
TEST(QReduce, TreeConcentrationByLegalFirings) {
  const Multigraph g = families::path(5);
  for (Vertex target = 0; target < 5; ++target) {
    Divisor d = Divisor::point(5, 4, 3);
    // Walk the chips down the path one vertex at a time with legal moves.
    for (Vertex v = 4; v > target; --v) {
      VertexSet tail(5);
      for (Vertex w = v; w < 5; ++w) tail.insert(w);
      for (int k = 0; k < 3; ++k) {
        ASSERT_TRUE(is_legal_firing(g, d, tail));
        d = fire_set(g, d, tail);
      }
    }
    EXPECT_EQ(d, Divisor::point(5, target, 3));
    EXPECT_EQ(q_reduce(g, Divisor::point(5, 4, 3), target).reduced, d);
  }
}

TEST(QReduce, ReducedInputIsFixed) {
  const Multigraph g = families::slashed_ladder(4);
  const ReductionResult first = q_reduce(g, Divisor{2, 0, 0, 0, 1, 0, 0, -1}, 0);
  const ReductionResult again = q_reduce(g, first.reduced, 0);
  EXPECT_EQ(again.reduced, first.reduced);
  EXPECT_TRUE(again.script.empty());
}

TEST(QReduce, InvariantsOnRandomInputs) {
  random::Rng rng(25);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = random::uniform(rng, 1, 9);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 8), 3);
    const Vertex q = random::uniform(rng, 0, n - 1);
    const Divisor d = random::divisor(rng, n, random::uniform_int(rng, -6, 12), 4);
    const ReductionResult r = q_reduce(g, d, q);
    EXPECT_TRUE(is_q_reduced(g, r.reduced, q));
    EXPECT_EQ(replay(g, d, r.script), r.reduced);
    EXPECT_LE(r.layer_firings, r.script.size());
    EXPECT_EQ(q_reduce(g, r.reduced, q).reduced, r.reduced);
    // Any firing applied first does not change the result.
    if (n > 1) {
      Divisor moved = d;
      for (int k = 0; k < 5; ++k) moved = fire_set(g, moved, random::proper_subset(rng, n));
      EXPECT_EQ(q_reduce(g, moved, q).reduced, r.reduced);
    }
    // Effective-equivalence is read off the base vertex, for any base.
    const Vertex q2 = random::uniform(rng, 0, n - 1);
    EXPECT_EQ(r.reduced[q] >= 0, q_reduce(g, d, q2).reduced[q2] >= 0);
    EXPECT_EQ(is_effective_equivalent(g, d), r.reduced[q] >= 0);
  }
}

TEST(RankZeroCertificate, CompleteGraphs) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const Multigraph g = families::complete(n);
    const Vertex q = 0;
    for (Chips deg = 1; deg < static_cast<Chips>(n); ++deg) {
      std::vector<Chips> x(n, 0);
      x[n - 1] = deg;
      do {
        const Divisor d(x);
        if (!is_q_reduced(g, d, q)) continue;
        const Chips top = *std::max_element(x.begin(), x.end());
        const bool winning = deg == static_cast<Chips>(n - 1) && (top == deg || top == 1);
        bool certified = false;
        for (Vertex v = 1; v < n; ++v)
          if (d[v] == 0 && rank_zero_certificate(g, d, q, v)) certified = true;
        EXPECT_EQ(certified, !winning) << n << " " << deg;
      } while (compositions::next(x));
    }
  }
}

TEST(RankZeroCertificate, SlashedLadderMultiplicityFree) {
  const Multigraph g = families::slashed_ladder(4);
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<std::size_t> s = colex::first(k);
    do {
      Divisor d(8);
      for (std::size_t v : s) d[v] = 1;
      bool burns = false;
      for (Vertex i = 0; i < 4; ++i)
        if (d[i] == 0 && d[4 + i] == 0) {
          Divisor probe = d;
          probe[i] -= 1;
          burns |= dhar(g, probe, i).all_burned();
        }
      EXPECT_TRUE(burns);
      EXPECT_TRUE(burning_certificate_refutes(g, d));
    } while (colex::next(s, 8));
  }
}

TEST(RankZeroCertificate, SoundAgainstRank) {
  random::Rng rng(26);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = random::uniform(rng, 2, 7);
    const Multigraph g = random::connected_multigraph(rng, n, random::uniform(rng, 0, 5), 2);
    const Divisor d = q_reduce(g, random::effective_divisor(rng, n, random::uniform_int(rng, 1, 6)), 0).reduced;
    const bool positive = has_positive_rank(g, d);
    for (Vertex v = 1; v < n; ++v)
      if (d[v] == 0 && rank_zero_certificate(g, d, 0, v)) {
        EXPECT_FALSE(positive);
      }
  }
}

TEST(RankZeroCertificate, RejectsBadPreconditions) {
  const Multigraph g = families::cycle(4);
  EXPECT_THROW(rank_zero_certificate(g, Divisor{1, 0, 0, 0}, 0, 0), InvalidArgument);
  EXPECT_THROW(rank_zero_certificate(g, Divisor{1, 1, 0, 0}, 0, 1), InvalidArgument);
  EXPECT_THROW(rank_zero_certificate(g, Divisor{0, 1, 1, 0}, 0, 3), InvalidArgument);
}
