#include <gtest/gtest.h>

#include "chipfire/families.hpp"
#include "chipfire/graph_algorithms.hpp"
#include "chipfire/rank.hpp"

using namespace chipfire;

TEST(Families, SlashedLadderShape) {
  const Multigraph g = families::slashed_ladder(4);
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 13);
  EXPECT_EQ(g.valence(4), 2);  // v_1
  EXPECT_EQ(g.valence(0), 3);  // u_1
  EXPECT_EQ(g.label(4), "v1");
  EXPECT_THROW(families::slashed_ladder(1), InvalidArgument);
}

// 2(u1)+(v1) ~ (u2)+2(v2) ~ 2(u3)+(v3) ~ (u4)+2(v4), by firing the first
// k columns.
TEST(Families, SlashedLadderColumnChain) {
  const Multigraph g = families::slashed_ladder(4);
  auto col = [](std::size_t i, Chips top, Chips bottom) {
    Divisor d(8);
    d[i - 1] = top;
    d[3 + i] = bottom;
    return d;
  };
  Divisor d = col(1, 2, 1);
  const std::vector<Divisor> want{col(2, 1, 2), col(3, 2, 1), col(4, 1, 2)};
  for (std::size_t k = 1; k <= 3; ++k) {
    VertexSet s(8);
    for (std::size_t i = 1; i <= k; ++i) s.insert(i - 1), s.insert(3 + i);
    ASSERT_TRUE(is_legal_firing(g, d, s));
    d = fire_set(g, d, s);
    EXPECT_EQ(d, want[k - 1]);
  }
}

TEST(Families, CompleteSlashedLadder) {
  const Multigraph g = families::complete_slashed_ladder(6, 5);
  EXPECT_EQ(g.vertex_count(), 15u);
  EXPECT_TRUE(g.is_simple());
  EXPECT_TRUE(has_positive_rank(g, families::witness::complete_slashed_ladder(6, 5)));
  EXPECT_EQ(families::witness::complete_slashed_ladder(6, 5).degree(), 5);
  EXPECT_THROW(families::complete_slashed_ladder(2, 2), InvalidArgument);
  EXPECT_THROW(families::complete_slashed_ladder(1, 3), InvalidArgument);
}

TEST(Families, Antiprisms) {
  const Multigraph a11 = families::antiprism(11);
  EXPECT_EQ(a11.vertex_count(), 22u);
  EXPECT_TRUE(is_regular(a11, 4));
  const Multigraph aug = families::antiprism(9, true);
  EXPECT_EQ(aug.vertex_count(), 18u);
  EXPECT_TRUE(is_regular(aug, 5));
  const Multigraph a4 = families::antiprism(4);
  EXPECT_EQ(a4.vertex_count(), 8u);
  EXPECT_EQ(a4.edge_count(), 16);
  EXPECT_TRUE(has_positive_rank(aug, families::witness::augmented_antiprism_9()));
}

TEST(Families, Wheels) {
  EXPECT_EQ(families::wheel(3), families::complete(4));
  EXPECT_EQ(families::wheel(12).vertex_count(), 13u);
  for (std::size_t n = 4; n <= 12; ++n) {
    const Multigraph w = families::wheel(n);
    EXPECT_EQ(vertex_connectivity(w), 3);
    EXPECT_EQ(w.valence(0), static_cast<int>(n));
    for (Vertex v = 1; v <= n; ++v) EXPECT_EQ(w.valence(v), 3);
  }
  EXPECT_THROW(families::wheel(2), InvalidArgument);
}

TEST(Families, Rooks) {
  EXPECT_TRUE(is_regular(families::rook({2, 2}), 2));
  EXPECT_EQ(families::rook({2, 2}).vertex_count(), 4u);
  const Multigraph r33 = families::rook({3, 3});
  EXPECT_EQ(r33.vertex_count(), 9u);
  EXPECT_TRUE(is_regular(r33, 4));
  EXPECT_EQ(families::rook({2, 3, 4}).vertex_count(), 24u);
}

TEST(Families, RegularGapMultigraphs) {
  const Multigraph r4 = families::regular_gap_multi(4);
  EXPECT_EQ(r4.vertex_count(), 5u);
  for (const Edge& e : r4.edges()) EXPECT_EQ(e.multiplicity, 2);
  const Multigraph r5 = families::regular_gap_multi(5);
  EXPECT_EQ(r5.vertex_count(), 14u);
  for (Vertex v = 0; v < 14; ++v) {
    const Vertex next = (v + 1) % 14;
    EXPECT_EQ(r5.multiplicity(v, next), v % 2 == 0 ? 2 : 3);
  }
  for (int r = 4; r <= 9; ++r) {
    const Multigraph g = families::regular_gap_multi(r);
    EXPECT_TRUE(is_regular(g, r));
    EXPECT_TRUE(all_edges_multiple(g));
    const Divisor w = families::witness::regular_gap_multi(r);
    EXPECT_LT(w.degree(), static_cast<Chips>(g.vertex_count()));
    EXPECT_TRUE(has_positive_rank(g, w));
  }
  EXPECT_THROW(families::regular_gap_multi(3), InvalidArgument);
}

TEST(Families, RegularGapSimple) {
  EXPECT_EQ(families::regular_gap_simple_default_copies(7), 9u);
  const Multigraph g = families::regular_gap_simple(7);
  EXPECT_EQ(g.vertex_count(), 36u);
  EXPECT_TRUE(g.is_simple());
  EXPECT_TRUE(is_regular(g, 7));
  EXPECT_TRUE(has_positive_rank(g, families::witness::regular_gap_simple(7)));
  for (int r = 6; r <= 9; ++r) {
    const Multigraph h = families::regular_gap_simple(r);
    EXPECT_TRUE(is_regular(h, r));
    EXPECT_TRUE(h.is_simple());
  }
  EXPECT_THROW(families::regular_gap_simple(7, 5), InvalidArgument);
  EXPECT_THROW(families::regular_gap_simple(5), InvalidArgument);
}

TEST(Families, LoopOfLoopsAndPetersen) {
  const Multigraph l5 = families::loop_of_loops(5);
  EXPECT_TRUE(is_regular(l5, 3));
  EXPECT_EQ(genus(l5), 5);
  const Multigraph p = families::petersen();
  EXPECT_TRUE(is_regular(p, 3));
  EXPECT_EQ(p.edge_count(), 15);
  EXPECT_EQ(independence_number(p), 4);
}

TEST(Families, BuildFromSpec) {
  EXPECT_EQ(build({FamilyKind::wheel, {5}}), families::wheel(5));
  EXPECT_EQ(build({FamilyKind::multipath, {4, 2}}), families::multipath(4, 2));
  EXPECT_EQ(build({FamilyKind::regular_gap_simple, {7, 9}}), families::regular_gap_simple(7, 9));
  EXPECT_EQ(build({FamilyKind::cone, {1, 4, 0, 1, 1, 2, 2, 3, 3, 0}}).vertex_count(), 5u);
  EXPECT_THROW(build({FamilyKind::wheel, {}}), InvalidArgument);
  EXPECT_THROW(build({FamilyKind::path, {-2}}), InvalidArgument);
  for (const auto& [kind, name] : family_names()) EXPECT_EQ(family_kind_from_string(name), kind);
  EXPECT_THROW(family_kind_from_string("dodecahedron"), InvalidArgument);
}
