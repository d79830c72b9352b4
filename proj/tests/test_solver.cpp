#include <gtest/gtest.h>

#include <bit>

#include "test_util.hpp"

using namespace adimlab;
using adimlab::testing::definition_adim;
using adimlab::testing::random_graph;

namespace {

/// Every minimum k-generator, by subset enumeration.
std::vector<VertexSet> all_minimum_generators(const DistinguishTable& t, std::size_t k) {
  const std::size_t n = t.order();
  std::vector<VertexSet> best;
  std::size_t best_size = n + 1;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > best_size) continue;
    const VertexSet s = VertexSet::from_word(n, mask);
    if (!is_k_generator(t, k, s)) continue;
    if (size < best_size) {
      best.clear();
      best_size = size;
    }
    best.push_back(s);
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::size_t code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<std::size_t>(e.code());
  }
  return 1000;
}

}  // namespace

TEST(Solver, MatchesDefinitionOracle) {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 150; ++round) {
    const Graph g = random_graph(rng, 2, 9);
    const std::size_t c = dimensionality(g);
    for (std::size_t k = 1; k <= c; ++k)
      ASSERT_EQ(solve_adim(g, k).dimension, definition_adim(g, k)) << to_graph6(g) << " k=" << k;
  }
}

TEST(Solver, MetricDimensionMatchesDefinitionOracle) {
  std::mt19937_64 rng(103);
  for (int round = 0; round < 80; ++round) {
    const Graph g = random_graph(rng, 2, 9);
    const auto d = diameter(g);
    if (!d) {
      EXPECT_THROW(solve_dim(g, 1), Error);
      continue;
    }
    const std::size_t c = dimensionality(build_table(g, *d));
    for (std::size_t k = 1; k <= c; ++k)
      ASSERT_EQ(solve_dim(g, k).dimension, definition_adim(g, k, *d)) << to_graph6(g) << " k=" << k;
  }
}

TEST(Solver, WitnessIsLexicographicallySmallestBasis) {
  std::mt19937_64 rng(107);
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_graph(rng, 2, 10);
    const DistinguishTable t = build_table(g);
    const std::size_t c = dimensionality(t);
    for (std::size_t k = 1; k <= c; ++k) {
      const SolveResult r = solve(t, k);
      const SolveResult b = brute_force_adim(t, k, g.order());
      ASSERT_EQ(r.dimension, b.dimension);
      ASSERT_EQ(r.witness, b.witness) << to_graph6(g) << " k=" << k;
      ASSERT_TRUE(is_k_generator(t, k, r.witness));
      ASSERT_TRUE(forced_set(t, k).is_subset_of(r.witness));
    }
  }
}

TEST(Solver, EnumerationAndUniqueness) {
  std::mt19937_64 rng(109);
  for (int round = 0; round < 120; ++round) {
    const Graph g = random_graph(rng, 2, 9);
    const DistinguishTable t = build_table(g);
    const std::size_t c = dimensionality(t);
    for (std::size_t k = 1; k <= c; ++k) {
      const auto expect = all_minimum_generators(t, k);
      ASSERT_EQ(enumerate_bases(t, k), expect) << to_graph6(g) << " k=" << k;
      SolveOptions o;
      o.check_unique = true;
      ASSERT_EQ(solve(t, k, o).unique, expect.size() == 1);
      // Every basis contains the forced set.
      for (const auto& b : expect) ASSERT_TRUE(forced_set(t, k).is_subset_of(b));
    }
  }
}

TEST(Solver, BasisCap) {
  // C6 has several 1-bases.
  const auto all = enumerate_bases(cycle(6), 1);
  ASSERT_GT(all.size(), 2u);
  EXPECT_EQ(enumerate_bases(build_table(cycle(6)), 1, all.size()).size(), all.size());
  EXPECT_EQ(code_of([&] { enumerate_bases(build_table(cycle(6)), 1, all.size() - 1); }),
            static_cast<std::size_t>(ErrorCode::CapExceeded));
}

TEST(Solver, ProfileIsStrictlyIncreasing) {
  std::mt19937_64 rng(113);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_graph(rng, 2, 10);
    const auto p = dimension_profile(build_table(g));
    ASSERT_EQ(p.size(), dimensionality(g));
    for (std::size_t i = 1; i < p.size(); ++i) ASSERT_LT(p[i - 1], p[i]);
    for (std::size_t i = 0; i < p.size(); ++i) ASSERT_GE(p[i], i + 1);
  }
}

TEST(Solver, GreedyBoundIsAGenerator) {
  std::mt19937_64 rng(127);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_graph(rng, 2, 20);
    const DistinguishTable t = build_table(g);
    for (std::size_t k = 1; k <= dimensionality(t); ++k) {
      const VertexSet gb = greedy_bound(t, k);
      ASSERT_TRUE(is_k_generator(t, k, gb));
      ASSERT_LE(solve(t, k).dimension, gb.size());
    }
  }
}

TEST(Solver, Errors) {
  EXPECT_EQ(code_of([] { solve_adim(complete(1), 1); }), static_cast<std::size_t>(ErrorCode::TooSmall));
  EXPECT_EQ(code_of([] { solve_adim(path(5), 0); }), static_cast<std::size_t>(ErrorCode::BadParameter));
  EXPECT_EQ(code_of([] { solve_adim(path(7), 4); }), static_cast<std::size_t>(ErrorCode::KExceedsDimensionality));
  EXPECT_EQ(code_of([] { solve_dim(empty_graph(3), 1); }), static_cast<std::size_t>(ErrorCode::Disconnected));
  EXPECT_EQ(code_of([] { brute_force_adim(petersen(), 3, 5); }), static_cast<std::size_t>(ErrorCode::CapExceeded));
}

TEST(Solver, NodeBudget) {
  SolveOptions o;
  o.node_budget = 3;
  EXPECT_EQ(code_of([&] { solve_adim(hypercube(5), 1, o); }), static_cast<std::size_t>(ErrorCode::BudgetExhausted));
  o.node_budget = 0;
  EXPECT_EQ(solve_adim(path(10), 1, o).dimension, 4u);
}

TEST(Solver, DisconnectedGraphsUseTruncation) {
  // N3: every pair distinguished only by itself.
  EXPECT_EQ(solve_adim(empty_graph(3), 1).dimension, 2u);
  EXPECT_EQ(solve_adim(empty_graph(3), 2).dimension, 3u);
  const Graph two_paths = disjoint_union(path(3), path(3));
  EXPECT_EQ(solve_adim(two_paths, 1).dimension, definition_adim(two_paths, 1));
}

TEST(Solver, WideSetAgreesWithWordSet) {
  std::mt19937_64 rng(131);
  for (int round = 0; round < 150; ++round) {
    const Graph g = random_graph(rng, 2, 10);
    const DistinguishTable t = build_table(g);
    SolveOptions o;
    o.collect_all = true;
    for (std::size_t k = 1; k <= dimensionality(t); ++k) {
      const SolveResult a = detail::solve_with<WordSet>(t, k, o);
      const SolveResult b = detail::solve_with<WideSet>(t, k, o);
      ASSERT_EQ(a.dimension, b.dimension);
      ASSERT_EQ(a.witness, b.witness);
      ASSERT_EQ(*a.all_bases, *b.all_bases);
    }
  }
}

TEST(Solver, WideGraphs) {
  // More than 64 vertices goes through the multi-word sets.
  EXPECT_EQ(solve_adim(complete(66), 1).dimension, 65u);
  EXPECT_EQ(solve_adim(complete_bipartite(33, 33), 2).dimension, 66u);
  const Graph big = cycle(70);
  const SolveResult r = solve_adim(big, 4);
  EXPECT_EQ(r.dimension, 70u);
  EXPECT_TRUE(is_k_generator(big, 4, r.witness));
  const Graph two = disjoint_union(petersen(), complete_bipartite(30, 30));
  EXPECT_EQ(solve_adim(two, 2).dimension, solve_adim(petersen(), 2).dimension + 60);
}

TEST(Solver, Petersen) {
  const DistinguishTable t = build_table(petersen());
  EXPECT_EQ(dimension_profile(t), (std::vector<std::size_t>{3, 4, 7, 8, 9, 10}));
  SolveOptions o;
  o.check_unique = true;
  EXPECT_EQ(solve(t, 6, o).unique, true);
  EXPECT_EQ(solve(t, 1, o).unique, false);
}
