#include <gtest/gtest.h>

#include "chipfire/families.hpp"
#include "chipfire/oracles.hpp"
#include "chipfire/random.hpp"
#include "chipfire/reduction.hpp"

using namespace chipfire;

namespace {

// Slashed ladder 2x4 indexing: u_i = i-1, v_i = 3+i.
constexpr Vertex u1 = 0, u2 = 1, v1 = 4, v2 = 5;

Divisor ladder_divisor(std::initializer_list<std::pair<Vertex, Chips>> terms) {
  Divisor d(8);
  for (auto [v, c] : terms) d[v] += c;
  return d;
}

}  // namespace

TEST(Divisor, BasicPredicates) {
  const Divisor ones = Divisor::ones(5);
  EXPECT_TRUE(ones.is_effective());
  EXPECT_TRUE(ones.is_multiplicity_free());
  EXPECT_EQ(ones.degree(), 5);
  const Divisor two = Divisor::point(5, 2, 2);
  EXPECT_TRUE(two.is_effective());
  EXPECT_FALSE(two.is_multiplicity_free());
  EXPECT_FALSE((ones - two).is_effective());
  EXPECT_EQ((ones - two).degree(), 3);
}

TEST(FireSet, ThreeEquivalentDivisorsOnTheSlashedLadder) {
  const Multigraph g = families::slashed_ladder(4);
  const Divisor a = ladder_divisor({{u1, 2}, {v1, 1}});
  const Divisor b = fire_set(g, a, VertexSet(8, {v1}));
  EXPECT_EQ(b, ladder_divisor({{u1, 3}, {v1, -1}, {v2, 1}}));
  const Divisor c = fire_set(g, b, VertexSet(8, {u1}));
  EXPECT_EQ(c, ladder_divisor({{u2, 1}, {v2, 2}}));
  EXPECT_TRUE(equivalent(g, a, b));
  EXPECT_TRUE(equivalent(g, b, c));
  EXPECT_TRUE(equivalent(g, a, c));
}

TEST(FireSet, RejectsEmptyAndFullSets) {
  const Multigraph g = families::cycle(4);
  EXPECT_THROW(fire_set(g, Divisor(4), VertexSet(4)), InvalidArgument);
  EXPECT_THROW(fire_set(g, Divisor(4), VertexSet::full(4)), InvalidArgument);
  EXPECT_THROW(fire_set(g, Divisor(3), VertexSet(4, {0})), InvalidArgument);
}

TEST(FireSet, ComplementUndoesAndDegreeIsConserved) {
  random::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = random::uniform(rng, 2, 9);
    const Multigraph g = random::connected_multigraph(rng, n, 6, 3);
    const Divisor d = random::divisor(rng, n, random::uniform_int(rng, -5, 10), 3);
    const VertexSet s = random::proper_subset(rng, n);
    const Divisor fired = fire_set(g, d, s);
    EXPECT_EQ(fired.degree(), d.degree());
    EXPECT_EQ(fire_set(g, fired, s.complement()), d);
    // Firing a set is firing its vertices one at a time, in any order.
    std::vector<Vertex> order = s.members();
    std::shuffle(order.begin(), order.end(), rng);
    Divisor step = d;
    for (Vertex v : order) step = fire_vertex(g, step, v);
    EXPECT_EQ(step, fired);
  }
}

TEST(LegalFiring, Examples) {
  const Multigraph k3 = families::complete(3);
  EXPECT_TRUE(is_legal_firing(k3, Divisor::point(3, 0, 2), VertexSet(3, {0})));
  EXPECT_FALSE(is_legal_firing(k3, Divisor::point(3, 0, 1), VertexSet(3, {0})));
  EXPECT_THROW(is_legal_firing(k3, Divisor{-1, 1, 0}, VertexSet(3, {1})), InvalidArgument);
}

// On C_4, firing {v1, v2, v3} from (v1)+(v3) sends one chip from each of v1
// and v3 to v0; v2 has no edge leaving the set. Nothing goes negative.
TEST(LegalFiring, CycleOfFour) {
  const Multigraph c4 = families::cycle(4);
  const Divisor d{0, 1, 0, 1};
  const VertexSet s(4, {1, 2, 3});
  const Divisor fired = fire_set(c4, d, s);
  EXPECT_EQ(fired, (Divisor{2, 0, 0, 0}));
  EXPECT_TRUE(is_legal_firing(c4, d, s));
}

TEST(LegalFiring, MatchesFiringResult) {
  random::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = random::uniform(rng, 2, 8);
    const Multigraph g = random::connected_multigraph(rng, n, 5, 2);
    const Divisor d = random::effective_divisor(rng, n, random::uniform_int(rng, 0, 10));
    const VertexSet s = random::proper_subset(rng, n);
    EXPECT_EQ(is_legal_firing(g, d, s), fire_set(g, d, s).is_effective());
  }
}

TEST(Equivalence, Examples) {
  const Multigraph c4 = families::cycle(4);
  EXPECT_TRUE(equivalent(c4, Divisor::point(4, 2, 2), Divisor::point(4, 0, 2)));
  EXPECT_TRUE(oracle::equivalent_by_smith(c4, Divisor::point(4, 2, 2), Divisor::point(4, 0, 2)));
  EXPECT_FALSE(equivalent(c4, Divisor::point(4, 2, 1), Divisor::point(4, 0, 2)));
  EXPECT_FALSE(equivalent(c4, Divisor::point(4, 1, 1), Divisor::point(4, 0, 1)));
}

TEST(Equivalence, AgreesWithLaplacianImage) {
  random::Rng rng(13);
  int equal = 0;
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = random::uniform(rng, 1, 8);
    const Multigraph g = random::connected_multigraph(rng, n, 5, 3);
    const Divisor a = random::divisor(rng, n, random::uniform_int(rng, -4, 6), 3);
    Divisor b = a;
    if (i % 2 == 0 && n > 1) {
      for (int k = 0; k < 3; ++k) b = fire_set(g, b, random::proper_subset(rng, n));
    } else {
      ++b[random::uniform(rng, 0, n - 1)];
      --b[random::uniform(rng, 0, n - 1)];
    }
    const bool fast = equivalent(g, a, b);
    EXPECT_EQ(fast, oracle::equivalent_by_smith(g, a, b));
    EXPECT_TRUE(equivalent(g, a, a));
    EXPECT_EQ(fast, equivalent(g, b, a));
    equal += fast;
  }
  EXPECT_GT(equal, 300);
}

TEST(Equivalence, DegreeMismatchIsFalse) {
  EXPECT_FALSE(equivalent(families::complete(3), Divisor{1, 0, 0}, Divisor{1, 1, 0}));
}
