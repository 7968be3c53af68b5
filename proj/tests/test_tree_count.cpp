#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ferrers/enumeration.hpp"
#include "ferrers/tree_count.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {

BipartiteGraph c6() { return BipartiteGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
BipartiteGraph k22() { return BipartiteGraph(2, {{0, 1}, {0, 1}}); }
BipartiteGraph k11() { return BipartiteGraph(1, {{0}}); }
BipartiteGraph k23() { return BipartiteGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

BipartiteGraph complete(std::size_t m, std::size_t n) {
  return BipartiteGraph(m, std::vector<VertexSet>(n, VertexSet::initial_segment(m)));
}

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(TauMatrixTree, Examples) {
  EXPECT_EQ(tau_matrix_tree(k11()), 1);
  EXPECT_EQ(tau_matrix_tree(c6(), true), 6);
  ASSERT_EQ(oracle::spanning_trees_by_subsets(k23()), 12U);
  EXPECT_EQ(tau_matrix_tree(k23(), true), 12);
  EXPECT_EQ(tau_matrix_tree(BipartiteGraph(2, {{0}, {1}})), 0);  // disconnected
}

TEST(TauBruteForce, Examples) {
  const auto one = tau_brute_force(k11());
  EXPECT_EQ(one.count, 1);
  ASSERT_EQ(one.trees.size(), 1U);
  EXPECT_EQ(one.trees[0].edges, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}}));

  const auto path = tau_brute_force(BipartiteGraph(2, {{0, 1}, {1}}));
  EXPECT_EQ(path.count, 1);
  EXPECT_EQ(path.trees[0].edges.size(), 3U);

  const auto square = tau_brute_force(k22());
  EXPECT_EQ(square.count, 4);
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> distinct;
  for (const auto& t : square.trees) {
    EXPECT_EQ(t.edges.size(), 3U);
    distinct.insert(t.edges);
  }
  EXPECT_EQ(distinct.size(), 4U);

  EXPECT_EQ(tau_brute_force(BipartiteGraph(2, {{0}, {1}})).count, 0);
  EXPECT_THROW(tau_brute_force(complete(5, 5), 20), cap_exceeded);
}

TEST(TauBruteForce, TreesSpanAndAreAcyclic) {
  const auto g = BipartiteGraph(3, {{0, 1, 2}, {0, 1}, {1, 2}});
  const auto r = tau_brute_force(g);
  for (const auto& t : r.trees) {
    oracle::DisjointSets ds(g.m() + g.n());
    for (auto [x, y] : t.edges) {
      EXPECT_TRUE(g.adjacent(x, y));
      EXPECT_TRUE(ds.unite(x, g.m() + y));
    }
  }
  EXPECT_EQ(r.count, Integer(static_cast<unsigned long>(oracle::spanning_trees_by_subsets(g))));
}

TEST(TauOracle, MatrixTreeEqualsBruteForceAndSubsetOracle) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 3}, {2, 5}, {4, 3}}) {
    for_each_connected(m, n, [&](const BipartiteGraph& g) {
      const Integer mt = tau_matrix_tree(g, true);
      EXPECT_EQ(mt, tau_brute_force(g, 20, false).count);
      if (g.edge_count() <= 10) {
        EXPECT_EQ(mt, Integer(static_cast<unsigned long>(oracle::spanning_trees_by_subsets(g))));
      }
    });
  }
}

TEST(TauOracle, CompleteBipartiteFormula) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto g = complete(m, n);
      Integer expected = 1;
      for (std::size_t k = 1; k < n; ++k) expected *= static_cast<unsigned long>(m);
      for (std::size_t k = 1; k < m; ++k) expected *= static_cast<unsigned long>(n);
      EXPECT_EQ(tau_matrix_tree(g), expected);
      EXPECT_EQ(ferrers_invariant(g), Rational(expected));
      EXPECT_TRUE(is_ferrers(g));
    }
}

TEST(FerrersInvariant, Examples) {
  EXPECT_EQ(ferrers_invariant(k11()), 1);
  EXPECT_EQ(ferrers_invariant(c6()), q(64, 9));
  EXPECT_EQ(ferrers_invariant(k23()), 12);
  EXPECT_THROW(ferrers_invariant(BipartiteGraph(2, {{0}})), degree_zero);
}

TEST(Reduction, Examples) {
  EXPECT_TRUE(check_reduction(k11()));
  const auto s = reduction_sides(c6(), tau_matrix_tree(c6()));
  EXPECT_EQ(s.lhs, 54);
  EXPECT_EQ(s.rhs, 54);
  EXPECT_EQ(det_exact(matrix_M(c6())), q(27, 4));
  EXPECT_TRUE(check_reduction(k22()));
  EXPECT_EQ(det_exact(matrix_M(k22())), 4);
  EXPECT_THROW(check_reduction(BipartiteGraph(2, {{0}, {1}})), disconnected_graph);
  EXPECT_FALSE(reduction_sides(c6(), 7).holds());
}

TEST(Reduction, HoldsOnEnumeratedGraphs) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}, {3, 3}, {4, 3}, {2, 6}})
    for_each_connected(m, n, [](const BipartiteGraph& g) { EXPECT_TRUE(check_reduction(g)); });
}

TEST(Bozkurt, Examples) {
  const auto sq = bozkurt_bound(k22());
  EXPECT_EQ(sq.bound, 4);
  EXPECT_EQ(Rational(tau_matrix_tree(k22())), sq.bound);
  const auto cyc = bozkurt_bound(c6());
  EXPECT_EQ(cyc.bound, q(32, 3));
  EXPECT_TRUE(cyc.holds);
  EXPECT_TRUE(cyc.dominates_ferrers);
  const auto edge = bozkurt_bound(k11());
  EXPECT_EQ(edge.bound, 1);
  EXPECT_TRUE(edge.holds);
}

TEST(Bozkurt, DominatesTauAndFerrersOnEnumeratedGraphs) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {3, 3}, {4, 3}}) {
    for_each_connected(m, n, [](const BipartiteGraph& g) {
      const auto b = bozkurt_bound(g);
      EXPECT_TRUE(b.holds);
      EXPECT_TRUE(b.dominates_ferrers);
      // Tight exactly on complete bipartite graphs.
      const bool complete = g.edge_count() == g.m() * g.n();
      EXPECT_EQ(Rational(tau_matrix_tree(g)) == b.bound, complete);
    });
  }
}
