#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace linarr;
using support::house_order;

namespace {
const Graph kHouse = fixtures::house_with_chord();

std::set<std::vector<int>> up_to_reversal(const std::vector<std::vector<int>>& orders) {
  std::set<std::vector<int>> out;
  for (auto o : orders) {
    auto r = o;
    std::reverse(r.begin(), r.end());
    out.insert(std::min(oracle::positions_of(o), oracle::positions_of(r)));
  }
  return out;
}

std::set<std::vector<int>> as_position_set(const std::vector<Arrangement>& arrs) {
  std::set<std::vector<int>> out;
  for (const auto& a : arrs) out.insert(std::vector<int>(a.positions().begin(), a.positions().end()));
  return out;
}
}  // namespace

TEST(Exhaustive, HouseOptimumIsNine) {
  const auto brute = oracle::brute_force(5, support::to_edges(kHouse));
  ASSERT_EQ(brute.minla, 9);
  const auto r = solve_minla_exhaustive(kHouse);
  EXPECT_EQ(r.optimal_cost, 9u);
  EXPECT_EQ(r.solver, "exhaustive");
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), house_order("aebdc")), r.witnesses.end());
  // All eight optimal orders, and only those.
  EXPECT_EQ(r.witnesses.size(), brute.minla_orders.size());
  EXPECT_EQ(r.witnesses.size(), 8u);
  // 1 + 5 + 20 + 60 + 120 + 120 nodes in the full prefix tree.
  EXPECT_EQ(r.explored, 326u);
}

TEST(Exhaustive, CollapsesReversals) {
  const auto r = solve_minla_exhaustive(kHouse, {.all_optima = true, .collapse_reversals = true});
  EXPECT_EQ(r.witnesses.size(), 4u);
  for (const auto& w : r.witnesses) EXPECT_FALSE(reverse(w) < w);
  EXPECT_TRUE(r.reversals_collapsed);
}

TEST(Exhaustive, SmallCases) {
  EXPECT_EQ(solve_minla_exhaustive(fixtures::complete(2)).optimal_cost, 1u);
  const auto p3 = solve_minla_exhaustive(fixtures::path(3));
  EXPECT_EQ(p3.optimal_cost, 2u);
  for (const auto& w : p3.witnesses) EXPECT_EQ(w.position(1), 2u);
}

TEST(Exhaustive, OrderZeroAndOne) {
  const auto r0 = solve_minla_exhaustive(make_graph(0, {}));
  EXPECT_EQ(r0.optimal_cost, 0u);
  ASSERT_EQ(r0.witnesses.size(), 1u);
  EXPECT_EQ(r0.best().size(), 0u);
  const auto r1 = solve_minla_bnb(make_graph(1, {}));
  EXPECT_EQ(r1.optimal_cost, 0u);
  EXPECT_EQ(r1.best(), Arrangement::identity(1));
  const auto p1 = solve_planar_minla(make_graph(1, {}));
  ASSERT_TRUE(p1);
  EXPECT_EQ(p1->optimal_cost, 0u);
}

TEST(BranchAndBound, HouseAgreesWithExhaustive) {
  const auto ex = solve_minla_exhaustive(kHouse);
  const auto bb = solve_minla_bnb(kHouse);
  EXPECT_EQ(bb.optimal_cost, 9u);
  EXPECT_EQ(bb.witnesses, ex.witnesses);
  EXPECT_LE(bb.explored, ex.explored);
  const auto single = solve_minla_bnb(kHouse, {.all_optima = false});
  EXPECT_EQ(single.optimal_cost, 9u);
  EXPECT_EQ(single.witnesses.size(), 1u);
  EXPECT_LE(single.explored, bb.explored);
  EXPECT_EQ(cost(kHouse, single.best()), 9u);
}

TEST(BranchAndBound, AgreesOnEveryConnectedGraphUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const auto ex = solve_minla_exhaustive(g);
      const auto bb = solve_minla_bnb(g);
      ASSERT_EQ(bb.optimal_cost, ex.optimal_cost);
      EXPECT_EQ(bb.witnesses, ex.witnesses);
      EXPECT_LE(bb.explored, ex.explored);
    }
  }
}

TEST(BranchAndBound, AgreesWithOracleOnRandomGraphs) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const auto es = oracle::random_connected(n, 0.35, rng);
    const auto brute = oracle::brute_force(n, es);
    const Graph g = support::to_graph(n, es);
    EXPECT_EQ(static_cast<long>(solve_minla_bnb(g, {.all_optima = false}).optimal_cost), brute.minla);
    const auto planar = solve_planar_minla(g, {.all_optima = false});
    EXPECT_EQ(planar.has_value(), brute.planar_min >= 0);
    if (planar) {
      EXPECT_EQ(static_cast<long>(planar->optimal_cost), brute.planar_min);
    }
  }
}

TEST(BranchAndBound, NineVerticesFinishes) {
  // Cycle with two chords on nine vertices.
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 0; i < 9; ++i) es.emplace_back(i, (i + 1) % 9);
  es.emplace_back(0, 4);
  es.emplace_back(4, 7);
  const Graph g = make_graph(9, es);
  const auto bb = solve_minla_bnb(g, {.all_optima = false});
  EXPECT_GE(bb.optimal_cost, g.size());
  EXPECT_EQ(cost(g, bb.best()), bb.optimal_cost);
}

TEST(PlanarMinla, HouseOptimumIsTen) {
  const auto r = solve_planar_minla(kHouse);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->optimal_cost, 10u);
  for (const auto& w : r->witnesses) {
    EXPECT_TRUE(is_planar_arrangement(kHouse, w));
    EXPECT_EQ(cost(kHouse, w), 10u);
  }
  EXPECT_GT(r->optimal_cost, solve_minla_bnb(kHouse).optimal_cost);
}

TEST(PlanarMinla, K4HasNoPlanarArrangement) {
  const auto brute = oracle::brute_force(4, support::to_edges(fixtures::complete(4)));
  ASSERT_EQ(brute.planar_min, -1);
  EXPECT_FALSE(solve_planar_minla(fixtures::complete(4)));
  EXPECT_FALSE(enumerate_planar_optima(fixtures::complete(4)));
  EXPECT_TRUE(enumerate_planar_arrangements(fixtures::complete(4)).empty());
}

TEST(PlanarMinla, TriangleCostFour) {
  const Graph c3 = fixtures::cycle(3);
  const auto r = solve_planar_minla(c3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->optimal_cost, 4u);
  EXPECT_EQ(r->witnesses.size(), 6u);
  EXPECT_EQ(enumerate_planar_arrangements(c3).size(), 6u);
}

TEST(PlanarOptima, HouseMatchesFigureLayouts) {
  const auto optima = enumerate_planar_optima(kHouse);
  ASSERT_TRUE(optima);
  std::set<std::vector<int>> expected;
  for (const char* s : {"aedcb", "dcbae", "abcde"}) {
    const auto a = canonical_orientation(house_order(s));
    expected.insert(std::vector<int>(a.positions().begin(), a.positions().end()));
  }
  EXPECT_EQ(as_position_set(*optima), expected);

  // Independent confirmation from the brute-force sweep.
  const auto brute = oracle::brute_force(5, support::to_edges(kHouse));
  std::vector<std::vector<int>> cheapest;
  for (const auto& o : brute.planar_orders)
    if (oracle::cost(support::to_edges(kHouse), oracle::positions_of(o)) == brute.planar_min)
      cheapest.push_back(o);
  EXPECT_EQ(as_position_set(*optima), up_to_reversal(cheapest));
}

TEST(PlanarOptima, SingleEdge) {
  const auto optima = enumerate_planar_optima(fixtures::complete(2));
  ASSERT_TRUE(optima);
  ASSERT_EQ(optima->size(), 1u);
  EXPECT_EQ(optima->front(), Arrangement::identity(2));
}

TEST(PlanarOptima, FourCycleIsNested) {
  const Graph c4 = fixtures::cycle(4);
  const auto optima = enumerate_planar_optima(c4);
  ASSERT_TRUE(optima);
  // Eight optimal orders in the brute-force sweep, four up to reversal.
  EXPECT_EQ(optima->size(), 4u);
  for (const auto& arr : *optima) {
    EXPECT_EQ(cost(c4, arr), 6u);
    int spanning = 0;
    for (const Edge& e : c4.edges()) {
      const Span s = span_of(arr, e);
      spanning += s.left == 1 && s.right == 4;
    }
    EXPECT_EQ(spanning, 1);
  }
}

TEST(PlanarSearch, PruningMatchesUnprunedEnumeration) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const auto brute = oracle::brute_force(static_cast<int>(n), support::to_edges(g));
      const auto pruned = enumerate_planar_arrangements(g);
      ASSERT_EQ(pruned.size(), brute.planar_orders.size());
      for (std::size_t i = 0; i < pruned.size(); ++i)
        EXPECT_TRUE(is_planar_arrangement(g, pruned[i]));
    }
  }
}

TEST(Claims, HouseCycle) {
  const auto r = check_dominating_edge_claims(kHouse, fixtures::house_cycle());
  EXPECT_EQ(r.arrangement_count, 10u);
  EXPECT_TRUE(r.claim1.holds);
  EXPECT_TRUE(r.claim2.holds);
  EXPECT_FALSE(r.claim1.counterexample);
  EXPECT_FALSE(r.claim2.counterexample);
}

TEST(Claims, Triangle) {
  const Graph c3 = fixtures::cycle(3);
  EdgeSubset all{c3.edges()};
  const auto r = check_dominating_edge_claims(c3, all);
  EXPECT_EQ(r.arrangement_count, 6u);
  EXPECT_TRUE(r.claim1.holds);
  EXPECT_TRUE(r.claim2.holds);
}

TEST(Claims, RejectsNonCycle) {
  EdgeSubset path{{support::house_edge('a', 'b'), support::house_edge('b', 'c')}};
  EXPECT_THROW(check_dominating_edge_claims(kHouse, path), ValidationError);
}

TEST(Claims, FailureCarriesWitness) {
  // C4 with pendant vertex 4 on vertex 0: the pendant edge can sit outside the
  // spanning cycle edge, so claim 2 fails somewhere.
  const Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  EdgeSubset cyc{{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 0)}};
  const auto r = check_dominating_edge_claims(g, cyc);
  EXPECT_FALSE(r.claim2.holds);
  ASSERT_TRUE(r.claim2.counterexample);
  EXPECT_TRUE(is_planar_arrangement(g, r.claim2.counterexample->arrangement));
  EXPECT_TRUE(g.has_edge(r.claim2.counterexample->edge));
}
