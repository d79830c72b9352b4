#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>

#include "test_util.hpp"

using namespace adimlab;

TEST(Enumeration, LabeledCounts) {
  EXPECT_EQ(labeled_graph_count(3), 8u);
  EXPECT_EQ(labeled_graph_count(4), 64u);
  EXPECT_EQ(labeled_graph_count(7), 2097152u);
  EXPECT_THROW(labeled_graph_count(8), Error);
  std::set<std::string> seen;
  for (const Graph& g : enumerate_all_graphs(4)) seen.insert(to_graph6(g));
  EXPECT_EQ(seen.size(), 64u);
}

TEST(Enumeration, MinDegreeFilterRecount) {
  // Recount by hand against the corpus filter.
  std::uint64_t by_hand = 0;
  for (const Graph& g : enumerate_all_graphs(5))
    if (g.min_degree() >= 2) ++by_hand;
  Corpus c = Corpus::labeled(5, 5);
  CorpusFilter f;
  f.min_degree = 2;
  c.with_filter(f);
  std::uint64_t accepted = 0;
  for (std::uint64_t i = 0; i < c.size(); ++i) accepted += c.at(i).has_value();
  EXPECT_EQ(accepted, by_hand);
  EXPECT_GT(by_hand, 0u);
  EXPECT_LT(by_hand, 1024u);
}

TEST(Enumeration, ConnectedLabeledCounts) {
  // Connected labeled graphs: 1, 1, 4, 38, 728, 26704.
  const std::vector<std::uint64_t> expect{1, 1, 4, 38, 728, 26704};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::uint64_t c = 0;
    for (const Graph& g : enumerate_all_graphs(n)) c += is_connected(g);
    EXPECT_EQ(c, expect[n - 1]) << n;
  }
}

TEST(Trees, UnlabeledCounts) {
  const std::vector<std::size_t> expect{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
  for (std::size_t n = 1; n <= expect.size(); ++n) EXPECT_EQ(all_trees(n).size(), expect[n - 1]) << n;
}

TEST(Trees, CodesAreIsomorphismInvariant) {
  const Graph t = spider({1, 2, 3});
  // Relabel by reversing vertex numbers.
  std::vector<Edge> e;
  for (auto [u, v] : t.edges()) e.emplace_back(t.order() - 1 - u, t.order() - 1 - v);
  EXPECT_EQ(tree_code(Graph::from_edge_list(t.order(), e)), tree_code(t));
  EXPECT_NE(tree_code(path(7)), tree_code(t));
  EXPECT_THROW(tree_code(cycle(4)), Error);
  EXPECT_EQ(tree_code(spider({1, 1, 1, 3})), tree_code(spider({3, 1, 1, 1})));
}

TEST(Trees, ExceptionalFamiliesMatchSolver) {
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto exceptional = cone_exceptional_trees(k, n);
      for (const Graph& t : all_trees(n)) {
        if (k > cone_dimensionality(t)) continue;
        const bool grows = solve_adim(cone(t), k).dimension > solve_adim(t, k).dimension;
        EXPECT_EQ(grows, exceptional.count(tree_code(t)) == 1) << to_graph6(t) << " k=" << k;
      }
    }
}

TEST(Recognizers, PathsAndCycles) {
  EXPECT_TRUE(is_path_graph(path(1)));
  EXPECT_TRUE(is_path_graph(path(6)));
  EXPECT_FALSE(is_path_graph(star(3)));
  EXPECT_FALSE(is_path_graph(disjoint_union(path(2), path(2))));
  EXPECT_TRUE(is_cycle_graph(cycle(5)));
  EXPECT_FALSE(is_cycle_graph(disjoint_union(cycle(3), cycle(3))));
}

TEST(Corpus, Sources) {
  const Corpus l = Corpus::labeled(2, 4);
  EXPECT_EQ(l.size(), 2u + 8u + 64u);
  const Corpus t = Corpus::trees(4, 6);
  EXPECT_EQ(t.size(), 2u + 3u + 6u);
  const Corpus g = Corpus::graph6_lines({"A_", "", "Bw"});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.at(1)->size(), 3u);
  EXPECT_THROW(Corpus::graph6_lines({"A_", "D"}), Error);
  EXPECT_THROW(g.at(5), Error);
  const std::string file = ::testing::TempDir() + "corpus.g6";
  {
    std::ofstream out(file);
    out << "A_\nDQc\n";
  }
  EXPECT_EQ(Corpus::graph6_file(file).size(), 2u);
  EXPECT_THROW(Corpus::graph6_file(file + ".missing"), Error);
}

TEST(Sweep, UnknownTheorem) {
  try {
    sweep_theorem(Corpus::labeled(2, 3), "no-such-statement");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownTheorem);
  }
  EXPECT_THROW(check_graph(path(4), "nope"), Error);
}

TEST(Sweep, EveryStatementHoldsUpToFiveVertices) {
  for (const std::string& id : theorem_ids()) {
    const Corpus c = id == "K1T-trees" ? Corpus::trees(2, 9) : Corpus::labeled(1, 5);
    const SweepReport r = sweep_theorem(c, id);
    EXPECT_TRUE(r.passed()) << id << ": " << r.violations.size() << " violations, first "
                            << (r.violations.empty() ? "" : r.violations.front().graph6);
    EXPECT_EQ(r.graphs, c.size());
  }
}

TEST(Sweep, CharacterizationMatchCounts) {
  // Labeled copies: P4 has 12, C5 has 12.
  EXPECT_EQ(sweep_theorem(Corpus::labeled(4, 5), "adim3-eq-4").matched, 24u);
  EXPECT_EQ(sweep_theorem(Corpus::labeled(4, 5), "adim4-eq-5").matched, 12u);
  EXPECT_EQ(check_graph(cycle(5), "adim4-eq-5").matched, 1u);
  EXPECT_EQ(check_graph(path(5), "adim4-eq-5").matched, 0u);
}

TEST(Sweep, DeterministicAcrossJobCounts) {
  const Corpus c = Corpus::labeled(2, 5);
  for (const std::string id : {"monotony", "cone-equality", "join-lower"}) {
    SweepOptions one;
    SweepOptions three;
    three.jobs = 3;
    const SweepReport a = sweep_theorem(c, id, one);
    const SweepReport b = sweep_theorem(c, id, three);
    EXPECT_EQ(a.graphs, b.graphs);
    EXPECT_EQ(a.matched, b.matched);
    EXPECT_EQ(a.violations.size(), b.violations.size());
  }
}

TEST(Sweep, FilteredCorpora) {
  Corpus c = Corpus::labeled(2, 5);
  CorpusFilter f;
  f.connected = true;
  c.with_filter(f);
  const SweepReport r = sweep_theorem(c, "dim-le-adim");
  EXPECT_EQ(r.graphs, 1u + 4u + 38u + 728u);
  EXPECT_TRUE(r.passed());
}

TEST(Sweep, ConeConjectureTightCases) {
  // Tight for the fixture of order 9 at k = 3.
  const SweepReport r = check_cone_conjecture(Corpus::graphs({fig5_graph()}), 3, 3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.matched, 1u);
  EXPECT_TRUE(check_cone_conjecture(Corpus::labeled(2, 5), 1, 4).passed());
}

TEST(Sweep, CallbackMatchesReport) {
  std::size_t calls = 0;
  SweepOptions o;
  o.on_violation = [&](const std::string&, const Violation&) { ++calls; };
  const SweepReport r = sweep_theorem(Corpus::labeled(2, 4), "complement", o);
  EXPECT_EQ(calls, r.violations.size());
  EXPECT_TRUE(r.passed());
}
