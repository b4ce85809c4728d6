// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "pcount/corpus.h"
#include "pcount/counters.h"
#include "pcount/graph.h"
#include "pcount/poly.h"

namespace pcount {
namespace {

// Plain subset enumeration, independent of the library's enumerators.
template <typename Pred>
Count CountSubsets(const Multigraph& g, int k, Pred pred) {
  const int m = g.num_edges();
  Count total = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) s.push_back(e);
    }
    if (pred(s)) ++total;
  }
  return total;
}

bool IsMatching(const Multigraph& g, const std::vector<int>& s) {
  std::vector<bool> used(g.num_vertices());
  for (int e : s) {
    const Edge& edge = g.edge(e);
    if (used[edge.u] || used[edge.v]) return false;
    used[edge.u] = used[edge.v] = true;
  }
  return true;
}

Multigraph RandomMultigraph(std::mt19937_64& rng, int n, int m) {
  Multigraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.num_edges() < m) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u != v) g.AddEdge(u, v);
  }
  return g;
}

ApexWeightedGraph ApexOverEdge() { return AddApex(Multigraph(2, {{0, 1}})); }

TEST(CountersTest, Matchings) {
  EXPECT_EQ(CountKMatchings(PathGraph(4), 2), 1);
  EXPECT_EQ(CountKMatchings(CompleteGraph(5), 0), 1);
  EXPECT_EQ(CountKMatchings(Multigraph(0), 0), 1);
  EXPECT_EQ(CountKMatchings(CompleteGraph(3), 2), 0);
  EXPECT_EQ(CountKMatchings(CompleteGraph(4), 2), 3);
}

TEST(CountersTest, Trees) {
  EXPECT_EQ(CountKTrees(CompleteGraph(3), 2), 3);
  EXPECT_EQ(CountKTrees(CompleteGraph(4), 3), 16);
  EXPECT_EQ(CountKTrees(CompleteGraph(5), 4), 125);
  EXPECT_EQ(CountKTrees(CompleteGraph(5), 1), 10);
  EXPECT_THROW(CountKTrees(CompleteGraph(3), 0), std::invalid_argument);
}

TEST(CountersTest, Forests) {
  EXPECT_EQ(CountKForests(CompleteGraph(3), 2), 3);
  EXPECT_EQ(CountKForests(CompleteGraph(3), 0), 1);
  EXPECT_EQ(CountKForests(CompleteGraph(4), 3), 16);
  EXPECT_EQ(CountKForests(CompleteGraph(3), 3), 0);
}

TEST(CountersTest, AgreeWithSubsetEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Multigraph g = RandomMultigraph(rng, 2 + trial % 5, trial % 11);
    for (int k = 0; k <= g.num_edges(); ++k) {
      EXPECT_EQ(CountKMatchings(g, k),
                CountSubsets(g, k, [&](auto& s) { return IsMatching(g, s); }));
      EXPECT_EQ(CountKForests(g, k), CountSubsets(g, k, [&](auto& s) {
                  return SubsetIsAcyclic(g, s);
                }));
      if (k >= 1) {
        EXPECT_EQ(CountKTrees(g, k), CountSubsets(g, k, [&](auto& s) {
                    return SubsetIsTree(g, s);
                  }));
      }
    }
  }
}

TEST(WeightedTreeSumTest, Examples) {
  EXPECT_EQ(WeightedTreeSum(ApexOverEdge(), 2, 2), 8);
  EXPECT_EQ(WeightedTreeSum(ApexOverEdge(), 2, 0), 0);
  EXPECT_EQ(WeightedTreeSum(ApexOverEdge(), 1, 1), 3);
  EXPECT_THROW(WeightedTreeSum(ApexOverEdge(), 1, 2), std::invalid_argument);
  const std::vector<Count> profile = ApexTreeProfile(ApexOverEdge(), 2);
  EXPECT_EQ(profile, (std::vector<Count>{0, 2, 1}));
}

TEST(WeightedTreeSumTest, UnitWeightCountsTrees) {
  for (const Multigraph& g : ConnectedGraphsUpTo(4)) {
    const ApexWeightedGraph a = AddApex(g);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(WeightedTreeSum(a, k, 1), CountKTrees(a.graph, k));
    }
  }
}

TEST(MatrixTreeTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Multigraph g = RandomMultigraph(rng, 2 + trial % 6, trial % 14);
    for (int k = 1; k <= g.num_vertices(); ++k) {
      EXPECT_EQ(CountKTreesByMatrixTree(g, k), CountKTrees(g, k));
    }
  }
  for (const Multigraph& g : ConnectedGraphsUpTo(5)) {
    const ApexWeightedGraph a = AddApex(g);
    for (int k = 1; k <= 4; ++k) {
      for (int z = 0; z <= k; ++z) {
        EXPECT_EQ(WeightedTreeSumByMatrixTree(a, k, z),
                  WeightedTreeSum(a, k, z));
      }
    }
  }
  EXPECT_EQ(CountKTreesByMatrixTree(CompleteGraph(6), 5), 1296);
  // Past 128-bit intermediates.
  EXPECT_EQ(CountKTreesByMatrixTree(CompleteGraph(30), 29),
            Pow(BigInt(30), 28));
  EXPECT_EQ(WeightedTreeSumByMatrixTree(ApexOverEdge(), 2, 2), 8);
  EXPECT_THROW(CountKTreesByMatrixTree(CompleteGraph(3), 0),
               std::invalid_argument);
}

TEST(ForestPolynomialTest, Examples) {
  EXPECT_EQ(ForestPolynomial(CompleteGraph(3)), (IntPoly{1, 3, 3}));
  EXPECT_EQ(ForestPolynomial(Multigraph(2, {{0, 1}})), (IntPoly{1, 1}));
  EXPECT_EQ(ForestPolynomial(Multigraph(2, {{0, 1}, {0, 1}})),
            (IntPoly{1, 2}));
  EXPECT_EQ(ForestPolynomial(CompleteGraph(3), 1), (IntPoly{1, 3}));
}

TEST(ForestPolynomialTest, StrategiesAgree) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = RandomMultigraph(rng, 2 + trial % 5, trial % 13);
    const IntPoly subsets = ForestPolynomialBySubsets(g);
    EXPECT_EQ(subsets, ForestPolynomialByDeletionContraction(g));
    for (int k = 0; k <= g.num_edges(); ++k) {
      EXPECT_EQ(subsets.coeff(k), CountKForests(g, k));
    }
    EXPECT_EQ(subsets.Truncated(2), ForestPolynomialByDeletionContraction(g, 2));
  }
}

TEST(ForestPolynomialTest, DeletionContractionOnLargeMultigraph) {
  // K_4 with every edge doubled: 12 edges, within subset range.
  const Multigraph k4 = CompleteGraph(4);
  Multigraph g(4);
  for (const Edge& e : k4.edges()) {
    g.AddEdge(e.u, e.v);
    g.AddEdge(e.u, e.v);
  }
  EXPECT_EQ(ForestPolynomialBySubsets(g),
            ForestPolynomialByDeletionContraction(g));
  // Spanning forests of K_4 doubled: 16 * 2^3.
  EXPECT_EQ(ForestPolynomial(g).coeff(3), 128);
}

TEST(BivariateApexCoeffsTest, SingleEdge) {
  const BivarApexCoeffs c = BivariateApexCoeffs(Multigraph(2, {{0, 1}}));
  EXPECT_EQ(c.at(0, 0), 1);
  EXPECT_EQ(c.at(0, 1), 2);
  EXPECT_EQ(c.at(0, 2), 1);
  EXPECT_EQ(c.at(1, 0), 1);
  EXPECT_EQ(c.at(1, 1), 2);
  EXPECT_EQ(c.at(1, 2), 0);
  EXPECT_EQ(c.at(5, 5), 0);
}

TEST(BivariateApexCoeffsTest, EmptyForestRowIsBinomial) {
  const Multigraph g = CompleteGraph(5);
  const BivarApexCoeffs c = BivariateApexCoeffs(g);
  for (int j = 0; j <= 5; ++j) EXPECT_EQ(c.at(0, j), Binomial(5, j));
}

TEST(BivariateApexCoeffsTest, MatchesForestPolynomialOfApexGraph) {
  // Summing c(i, j) over i + j = t gives the forest count of G + apex.
  for (const Multigraph& g : ConnectedGraphsUpTo(4)) {
    const BivarApexCoeffs c = BivariateApexCoeffs(g);
    const IntPoly f = ForestPolynomial(AddApex(g).graph);
    for (int t = 0; t <= g.num_vertices(); ++t) {
      BigInt sum = 0;
      for (int i = 0; i <= t; ++i) sum += c.at(i, t - i);
      EXPECT_EQ(sum, f.coeff(t));
    }
  }
}

TEST(CoefficientPolyCkTest, Examples) {
  EXPECT_EQ(CoefficientPolyCk(CompleteGraph(3), 1), (IntPoly{3, 9, 6}));
  EXPECT_EQ(CoefficientPolyCk(CompleteGraph(3), 0), IntPoly::OnePlusZPower(3));
  EXPECT_TRUE(CoefficientPolyCk(CompleteGraph(3), 3).is_zero());
  EXPECT_EQ(BivariateApexCoeffs(CompleteGraph(3)).Row(1), (IntPoly{3, 9, 6}));
}

TEST(CoefficientPolyCkTest, RowsDivisibilityAndMatchingIdentity) {
  for (const Multigraph& g : ConnectedGraphsUpTo(5)) {
    const int n = g.num_vertices();
    const BivarApexCoeffs c = BivariateApexCoeffs(g);
    for (int k = 0; k <= n - 1; ++k) {
      const IntPoly ck = CoefficientPolyCk(g, k);
      EXPECT_EQ(ck, c.Row(k));
      if (n < 2 * k || ck.is_zero()) continue;
      EXPECT_NO_THROW(DivideByOnePlusZPower(ck, n - 2 * k));
      const IntPoly q = DivideByPower(ShiftSub(ck), n - 2 * k);
      const BigInt sign = k % 2 == 0 ? 1 : -1;
      EXPECT_EQ(sign * Evaluate(q, 0), CountKMatchings(g, k));
    }
  }
}

}  // namespace
}  // namespace pcount
