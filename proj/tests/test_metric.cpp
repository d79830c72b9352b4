#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace adimlab;
using adimlab::testing::floyd_distances;
using adimlab::testing::random_graph;

namespace {

VertexSet oracle_set(const std::vector<std::vector<std::size_t>>& d, std::size_t t, Vertex x, Vertex y) {
  const std::size_t n = d.size();
  VertexSet s(n);
  for (Vertex z = 0; z < n; ++z)
    if (std::min(d[x][z], t) != std::min(d[y][z], t)) s.insert(z);
  return s;
}

}  // namespace

TEST(Metric, DistinguishingSetsMatchDefinition) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    const Graph g = random_graph(rng, 2, 11);
    const auto d = floyd_distances(g);
    for (std::size_t t : {1u, 2u, 3u, 5u}) {
      const DistinguishTable table = build_table(g, t);
      ASSERT_EQ(table.pair_count(), g.order() * (g.order() - 1) / 2);
      for (std::size_t r = 0; r < table.pair_count(); ++r) {
        const auto p = table.pair(r);
        ASSERT_EQ(table.set(r), oracle_set(d, t, p.x, p.y)) << to_graph6(g) << " t=" << t;
        ASSERT_EQ(distinguishing_set(g, t, p.x, p.y), table.set(r));
        ASSERT_EQ(table.set_size(r), table.set(r).size());
        ASSERT_EQ(&table.set(p.y, p.x), &table.set(r));
      }
    }
  }
}

TEST(Metric, AdjacencyLevelIsNeighbourhoodDifference) {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_graph(rng, 2, 30);
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = x + 1; y < g.order(); ++y) {
        VertexSet expect = g.neighbors(x) ^ g.neighbors(y);
        expect.insert(x);
        expect.insert(y);
        ASSERT_EQ(distinguishing_set(g, 2, x, y), expect);
      }
  }
}

TEST(Metric, TruncatedDistance) {
  const Graph p = path(6);
  EXPECT_EQ(truncated_distance(p, 2, 0, 5), 2u);
  EXPECT_EQ(truncated_distance(p, 10, 0, 5), 5u);
  EXPECT_EQ(truncated_distance(empty_graph(3), 2, 0, 1), 2u);
  EXPECT_THROW(truncated_distance(p, 0, 0, 1), Error);
  EXPECT_THROW(distinguishing_set(p, 2, 1, 1), Error);
  EXPECT_THROW(distinguishing_set(p, 2, 1, 9), Error);
}

TEST(Metric, Dimensionality) {
  EXPECT_EQ(dimensionality(petersen()), 6u);
  EXPECT_EQ(dimensionality(complete(5)), 2u);
  EXPECT_EQ(dimensionality(path(7)), 3u);
  EXPECT_EQ(dimensionality(cycle(5)), 4u);
  EXPECT_EQ(dimensionality(path(4)), 3u);
  EXPECT_EQ(dimensionality(cycle(7)), 4u);
  EXPECT_THROW(dimensionality(complete(1)), Error);
}

TEST(Metric, ForcedSet) {
  // Every pair of K_n has distinguishing set {x, y}; all vertices are forced for k = 2.
  EXPECT_EQ(forced_set(build_table(complete(5)), 2), VertexSet::full(5));
  EXPECT_THROW(forced_set(build_table(complete(5)), 3), Error);
  std::mt19937_64 rng(23);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_graph(rng, 2, 9);
    const DistinguishTable t = build_table(g);
    const std::size_t c = dimensionality(t);
    VertexSet expect(g.order());
    for (std::size_t r = 0; r < t.pair_count(); ++r)
      if (t.set(r).size() == c) expect |= t.set(r);
    EXPECT_EQ(forced_set(t, c), expect);
    EXPECT_FALSE(expect.empty());
  }
}

TEST(Metric, AdjacencyTableContainedInMetricTable) {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_graph(rng, 2, 10);
    const auto diam = diameter(g);
    if (!diam) continue;
    const DistinguishTable t2 = build_table(g, 2);
    const DistinguishTable td = build_table(g, std::max<std::size_t>(*diam, 1));
    for (std::size_t r = 0; r < t2.pair_count(); ++r) ASSERT_TRUE(t2.set(r).is_subset_of(td.set(r)));
    if (*diam <= 2) {
      EXPECT_EQ(dimensionality(t2), dimensionality(td));
    }
  }
}

TEST(Metric, ConeAndJoinDimensionalityClosedForms) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_graph(rng, 2, 6);
    const Graph h = random_graph(rng, 2, 6);
    EXPECT_EQ(dimensionality(cone(h)), cone_dimensionality(h)) << to_graph6(h);
    EXPECT_EQ(dimensionality(join(g, h)), join_dimensionality(g, h)) << to_graph6(g) << " " << to_graph6(h);
  }
}
