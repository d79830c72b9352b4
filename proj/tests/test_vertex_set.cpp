#include <gtest/gtest.h>

#include <set>

#include "adimlab/vertex_set.hpp"
#include "test_util.hpp"

using namespace adimlab;

TEST(VertexSet, InsertEraseContains) {
  VertexSet s(10);
  EXPECT_TRUE(s.empty());
  s.insert(3);
  s.insert(9);
  s.insert(3);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  s.erase(3);
  EXPECT_EQ(s.to_vector(), std::vector<Vertex>{9});
}

TEST(VertexSet, RejectsOutOfUniverse) {
  VertexSet s(5);
  EXPECT_THROW(s.insert(5), Error);
  EXPECT_FALSE(s.contains(7));
  EXPECT_THROW(static_cast<void>(VertexSet(3) | VertexSet(4)), Error);
}

TEST(VertexSet, AlgebraAcrossWordBoundary) {
  const std::size_t n = 130;
  VertexSet a(n), b(n);
  for (Vertex v : {0u, 63u, 64u, 65u, 127u, 128u, 129u}) a.insert(v);
  for (Vertex v : {63u, 64u, 100u, 129u}) b.insert(v);
  EXPECT_EQ((a & b).to_vector(), (std::vector<Vertex>{63, 64, 129}));
  EXPECT_EQ((a | b).size(), 8u);
  EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{0, 65, 127, 128}));
  EXPECT_EQ((a ^ b).size(), 5u);
  EXPECT_EQ(a.intersection_size(b), 3u);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  const VertexSet c = a.complement();
  EXPECT_EQ(c.size(), n - a.size());
  EXPECT_FALSE(c.intersects(a));
  EXPECT_EQ(VertexSet::full(n).size(), n);
}

TEST(VertexSet, MatchesStdSetOnRandomOps) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 7u, 64u, 65u, 200u}) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    VertexSet s(n);
    std::set<Vertex> ref;
    for (int i = 0; i < 500; ++i) {
      const Vertex v = pick(rng);
      if (rng() % 3 == 0) {
        s.erase(v);
        ref.erase(v);
      } else {
        s.insert(v);
        ref.insert(v);
      }
      ASSERT_EQ(s.size(), ref.size());
    }
    EXPECT_EQ(s.to_vector(), std::vector<Vertex>(ref.begin(), ref.end()));
  }
}

TEST(VertexSet, OrderingAndText) {
  const VertexSet a = VertexSet::of(6, {0, 2});
  const VertexSet b = VertexSet::of(6, {0, 3});
  EXPECT_EQ(a, VertexSet::of(6, {2, 0}));
  EXPECT_NE(a, b);
  EXPECT_TRUE(a < b);
  EXPECT_EQ(a.to_string(), "{0,2}");
  EXPECT_EQ(a.to_string(true), "{1,3}");
}

TEST(VertexSet, WordAndWideSetsAgree) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    VertexSet x(64), y(64);
    for (Vertex v = 0; v < 64; ++v) {
      if (rng() & 1) x.insert(v);
      if (rng() & 1) y.insert(v);
    }
    const WordSet wx = WordSet::from(x), wy = WordSet::from(y);
    const WideSet vx = WideSet::from(x), vy = WideSet::from(y);
    EXPECT_EQ(wx.intersection_size(wy), vx.intersection_size(vy));
    EXPECT_EQ((wx - wy).to_vertex_set(64), (vx - vy).to_vertex_set(64));
    EXPECT_EQ((wx | wy).size(), (x | y).size());
  }
}
