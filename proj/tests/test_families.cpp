#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace adimlab;

TEST(Families, Counts) {
  const Graph f3 = fig3_graph();
  const FamilySpec spec(f3, VertexSet::of(9, {1, 2, 3, 4}));
  EXPECT_EQ(spec.free_vertices().size(), 5u);
  EXPECT_EQ(spec.free_pair_count(), 10u);
  EXPECT_EQ(spec.family_size(), 1024u);
  EXPECT_EQ(enumerate_family(f3, VertexSet::of(9, {1, 2, 3, 4})).size(), 1024u);
  EXPECT_EQ(enumerate_family(path(4), VertexSet::full(4)).size(), 1u);
  EXPECT_EQ(enumerate_family(path(4), VertexSet::of(4, {0, 1})).size(), 2u);
  EXPECT_EQ(enumerate_family(f3, VertexSet::of(9, {1, 2, 3, 4}), 5).size(), 5u);
}

TEST(Families, MembersAgreeOnBasisNeighbourhoods) {
  const Graph g = petersen();
  const VertexSet b = VertexSet::of(10, {0, 2, 8});
  const FamilySpec spec(g, b);
  EXPECT_EQ(spec.member(spec.mask_of_base()).edges(), g.edges());
  for_each_family_member(spec, [&](std::uint64_t, const Graph& m) {
    for (Vertex v : b) EXPECT_EQ(m.neighbors(v), g.neighbors(v));
    return true;
  }, 300);
  EXPECT_THROW(spec.member(std::uint64_t{1} << 40), Error);
}

TEST(Families, MaskWindowAndEarlyStop) {
  const FamilySpec spec(fig3_graph(), VertexSet::of(9, {1, 2, 3, 4}));
  std::vector<std::uint64_t> seen;
  for_each_family_member(spec, [&](std::uint64_t m, const Graph&) {
    seen.push_back(m);
    return seen.size() < 3;
  }, std::nullopt, 100, 200);
  EXPECT_EQ(seen, (std::vector<std::uint64_t>{100, 101, 102}));
  std::size_t count = 0;
  for_each_family_member(spec, [&](std::uint64_t, const Graph&) { return ++count, true; }, std::nullopt, 1000);
  EXPECT_EQ(count, 24u);
}

TEST(Families, LargeFamiliesNeedALimit) {
  const Graph g = path(12);
  const FamilySpec spec(g, VertexSet::of(12, {0}));
  EXPECT_EQ(spec.free_pair_count(), 55u);
  EXPECT_EQ(spec.family_size(), std::uint64_t{1} << 55);
  try {
    for_each_family_member(spec, [](std::uint64_t, const Graph&) { return true; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LimitRequired);
  }
  std::size_t count = 0;
  for_each_family_member(spec, [&](std::uint64_t, const Graph&) { return ++count, true; }, 10);
  EXPECT_EQ(count, 10u);
}

TEST(Families, TheoremOnFig3) {
  FamilyCheckOptions o;
  o.basis = VertexSet::of(9, {1, 2, 3, 4});
  const FamilyReport r = verify_family_theorem(fig3_graph(), 2, o);
  EXPECT_EQ(r.members, 1024u);
  EXPECT_EQ(r.min_dimension, 4u);
  EXPECT_EQ(r.max_dimension, 4u);
  EXPECT_TRUE(r.passed());
}

TEST(Families, TheoremOnRandomGraphs) {
  std::mt19937_64 rng(307);
  for (int round = 0; round < 40; ++round) {
    const Graph g = adimlab::testing::random_graph(rng, 3, 7);
    for (std::size_t k = 1; k <= std::min<std::size_t>(dimensionality(g), 3); ++k) {
      const FamilyReport r = verify_family_theorem(g, k);
      ASSERT_TRUE(r.passed()) << to_graph6(g) << " k=" << k << ": " << r.violations.front().what;
      ASSERT_LE(r.max_dimension, r.basis.size());
      ASSERT_EQ(r.base_dimension, r.basis.size());
    }
  }
}

TEST(Families, RejectsNonBasis) {
  FamilyCheckOptions o;
  o.basis = VertexSet::of(9, {1, 2});
  EXPECT_THROW(verify_family_theorem(fig3_graph(), 2, o), Error);
}
