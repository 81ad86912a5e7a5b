#include <gtest/gtest.h>

#include <unordered_set>

#include "wtc/vertex_set.hpp"

using wtc::VertexSet;

TEST(VertexSet, InsertEraseContains) {
  VertexSet s(70);
  EXPECT_TRUE(s.empty());
  s.insert(0);
  s.insert(63);
  s.insert(64);
  s.insert(69);
  EXPECT_EQ(s.count(), 4u);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(65));
  s.erase(64);
  EXPECT_FALSE(s.contains(64));
  EXPECT_EQ(s.members(), (std::vector<wtc::Vertex>{0, 63, 69}));
}

TEST(VertexSet, Algebra) {
  VertexSet a(10, {1, 2, 3}), b(10, {3, 4});
  EXPECT_EQ(a | b, VertexSet(10, {1, 2, 3, 4}));
  EXPECT_EQ(a & b, VertexSet(10, {3}));
  EXPECT_EQ(a - b, VertexSet(10, {1, 2}));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE(VertexSet(10, {1, 3}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_EQ(a.complement().count(), 7u);
  EXPECT_EQ(VertexSet::full(10).count(), 10u);
}

TEST(VertexSet, FullDoesNotSpillPastUniverse) {
  for (std::size_t n : {1u, 63u, 64u, 65u, 128u, 130u}) {
    auto f = VertexSet::full(n);
    EXPECT_EQ(f.count(), n);
    EXPECT_TRUE(f.complement().empty());
  }
}

TEST(VertexSet, IterationOrderAndFirst) {
  VertexSet s(200, {150, 7, 64, 199});
  std::vector<wtc::Vertex> seen(s.begin(), s.end());
  EXPECT_EQ(seen, (std::vector<wtc::Vertex>{7, 64, 150, 199}));
  EXPECT_EQ(s.first(), 7u);
  EXPECT_EQ(VertexSet(5).first(), 5u);
}

TEST(VertexSet, SizeLexOrder) {
  VertexSet a(6, {0, 5}), b(6, {1, 2}), c(6, {0, 1, 2});
  EXPECT_TRUE(size_lex_less(a, b));
  EXPECT_TRUE(size_lex_less(b, c));
  EXPECT_FALSE(size_lex_less(c, a));
}

TEST(VertexSet, MaskRoundTripAndHash) {
  std::unordered_set<VertexSet, wtc::VertexSetHash> seen;
  for (std::uint64_t m = 0; m < 256; ++m) {
    auto s = wtc::from_mask(8, m);
    EXPECT_EQ(s.low_word(), m);
    seen.insert(s);
  }
  EXPECT_EQ(seen.size(), 256u);
}
