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

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "pcount/errors.h"
#include "pcount/graph.h"

namespace pcount {
namespace {

using EdgeSet = std::multiset<std::pair<int, int>>;

EdgeSet Edges(const Multigraph& g) {
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    out.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  return out;
}

Multigraph SingleEdge() { return Multigraph(2, {{0, 1}}); }

TEST(MultigraphTest, RejectsLoopsAndBadEndpoints) {
  Multigraph g(3);
  EXPECT_THROW(g.AddEdge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.AddEdge(0, 3), std::invalid_argument);
  EXPECT_THROW(g.AddEdge(-1, 0), std::invalid_argument);
  EXPECT_EQ(g.AddEdge(0, 1), 0);
  EXPECT_EQ(g.AddEdge(0, 1), 1);  // parallel copy
}

TEST(AddApexTest, Triangle) {
  const ApexWeightedGraph a = AddApex(CompleteGraph(3));
  EXPECT_EQ(a.graph.num_vertices(), 4);
  EXPECT_EQ(a.graph.num_edges(), 6);
  EXPECT_EQ(a.apex, 3);
  for (int e = 0; e < 3; ++e) EXPECT_FALSE(a.IsApexEdge(e));
  for (int e = 3; e < 6; ++e) EXPECT_TRUE(a.IsApexEdge(e));
  EXPECT_NO_THROW(ValidateApex(a.graph, a.apex));
}

TEST(AddApexTest, EdgelessAndPath) {
  const ApexWeightedGraph empty = AddApex(Multigraph(2));
  EXPECT_EQ(empty.graph.num_vertices(), 3);
  EXPECT_EQ(empty.graph.num_edges(), 2);
  const ApexWeightedGraph path = AddApex(PathGraph(3));
  EXPECT_EQ(path.graph.num_vertices(), 4);
  EXPECT_EQ(path.graph.num_edges(), 5);
  EXPECT_THROW(ValidateApex(PathGraph(3), 0), std::invalid_argument);
}

TEST(BuildGxzTest, Examples) {
  const ApexWeightedGraph plain = BuildGxz(CompleteGraph(3), 0, 1);
  const ApexWeightedGraph apex = AddApex(CompleteGraph(3));
  EXPECT_EQ(plain.graph, apex.graph);
  EXPECT_EQ(plain.apex, apex.apex);
  EXPECT_EQ(plain.z, 1u);

  const ApexWeightedGraph g = BuildGxz(CompleteGraph(3), 2, 3);
  EXPECT_EQ(g.graph.num_vertices(), 6);
  EXPECT_EQ(g.graph.num_edges(), 3 + 5);
  EXPECT_EQ(g.z, 3u);

  const ApexWeightedGraph e = BuildGxz(SingleEdge(), 1, 0);
  EXPECT_EQ(e.graph.num_vertices(), 4);
  EXPECT_EQ(e.graph.num_edges(), 1 + 3);
  EXPECT_EQ(e.z, 0u);
}

TEST(BuildGPowZTest, SingleBaseVertex) {
  ApexWeightedGraph g = AddApex(Multigraph(1));
  g.z = 2;
  const HubGraph h = BuildGPowZ(g);
  EXPECT_EQ(h.graph.num_vertices(), 4);
  EXPECT_EQ(Edges(h.graph), (EdgeSet{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  ASSERT_EQ(h.hub_edges.size(), 2u);
  for (int e : h.hub_edges) EXPECT_TRUE(h.graph.edge(e).Touches(3));
}

TEST(BuildGPowZTest, BaseEdgeAndZeroWeight) {
  ApexWeightedGraph g = AddApex(SingleEdge());
  g.z = 1;
  const HubGraph h = BuildGPowZ(g);
  EXPECT_EQ(h.graph.num_vertices(), 4);
  EXPECT_EQ(Edges(h.graph), (EdgeSet{{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
  EXPECT_EQ(h.hub_edges.size(), 1u);
  g.z = 0;
  EXPECT_THROW(BuildGPowZ(g), std::invalid_argument);
}

TEST(ThickenTest, Examples) {
  const std::vector<EdgeClass> x = {EdgeClass::kX};
  const Transformed t = Thicken(SingleEdge(), x, 3, 1);
  EXPECT_EQ(t.graph.num_edges(), 3);
  EXPECT_EQ(t.origin, (std::vector<int>{0, 0, 0}));

  const ApexWeightedGraph k3 = AddApex(CompleteGraph(3));
  std::vector<EdgeClass> classes(6, EdgeClass::kX);
  const Transformed same = Thicken(k3.graph, classes, 1, 1);
  EXPECT_EQ(Edges(same.graph), Edges(k3.graph));

  Multigraph two(3, {{0, 1}, {1, 2}});
  const std::vector<EdgeClass> mixed = {EdgeClass::kX, EdgeClass::kZ};
  EXPECT_EQ(Thicken(two, mixed, 2, 2).graph.num_edges(), 4);
}

TEST(DeleteEdgesTest, Examples) {
  const Multigraph k3 = CompleteGraph(3);
  const std::vector<int> first = {0};
  const Transformed one = DeleteEdges(k3, first);
  EXPECT_EQ(one.graph.num_vertices(), 3);
  EXPECT_EQ(one.graph.num_edges(), 2);
  EXPECT_EQ(one.origin, (std::vector<int>{1, 2}));
  EXPECT_EQ(DeleteEdges(k3, std::vector<int>{}).graph, k3);
  const std::vector<int> all = {0, 1, 2};
  EXPECT_EQ(DeleteEdges(k3, all).graph, Multigraph(3));
}

TEST(DeleteVertexTest, Examples) {
  const Transformed t = DeleteVertex(CompleteGraph(3), 0);
  EXPECT_EQ(t.graph.num_vertices(), 2);
  EXPECT_EQ(Edges(t.graph), (EdgeSet{{0, 1}}));
  const Transformed p = DeleteVertex(PathGraph(3), 1);
  EXPECT_EQ(p.graph, Multigraph(2));
  EXPECT_EQ(DeleteVertex(Multigraph(1), 0).graph, Multigraph(0));
  EXPECT_THROW(DeleteVertex(Multigraph(1), 1), std::invalid_argument);
}

TEST(ContractEdgeTest, Examples) {
  for (int e = 0; e < 3; ++e) {
    const Transformed t = ContractEdge(CompleteGraph(3), e);
    EXPECT_EQ(t.graph.num_vertices(), 2);
    EXPECT_EQ(Edges(t.graph), (EdgeSet{{0, 1}, {0, 1}}));
  }
  EXPECT_EQ(ContractEdge(SingleEdge(), 0).graph, Multigraph(1));
  const Multigraph parallel(2, {{0, 1}, {0, 1}});
  const Transformed t = ContractEdge(parallel, 1);
  EXPECT_EQ(t.graph, Multigraph(1));
  EXPECT_TRUE(t.origin.empty());
}

TEST(SubsetTest, AcyclicAndTree) {
  const Multigraph k3 = CompleteGraph(3);
  const std::vector<int> two = {0, 1};
  const std::vector<int> three = {0, 1, 2};
  EXPECT_TRUE(SubsetIsAcyclic(k3, two));
  EXPECT_TRUE(SubsetIsTree(k3, two));
  EXPECT_FALSE(SubsetIsAcyclic(k3, three));
  EXPECT_FALSE(SubsetIsTree(k3, three));

  const Multigraph p4 = PathGraph(4);  // 0-1, 1-2, 2-3
  const std::vector<int> split = {0, 2};
  EXPECT_TRUE(SubsetIsAcyclic(p4, split));
  EXPECT_FALSE(SubsetIsTree(p4, split));
  EXPECT_FALSE(SubsetIsTree(p4, std::vector<int>{}));
  EXPECT_TRUE(SubsetIsAcyclic(p4, std::vector<int>{}));
}

TEST(DisjointSetsTest, UnionAndUndo) {
  DisjointSets d(4);
  EXPECT_TRUE(d.Union(0, 1));
  EXPECT_TRUE(d.Union(2, 3));
  EXPECT_FALSE(d.Union(1, 0));
  EXPECT_TRUE(d.Union(1, 3));
  EXPECT_EQ(d.SizeOf(2), 4);
  d.Undo();
  EXPECT_EQ(d.SizeOf(0), 2);
  EXPECT_NE(d.Find(0), d.Find(2));
}

TEST(GraphFormatTest, RoundTripWithApex) {
  ApexWeightedGraph g = AddApex(CompleteGraph(3));
  g.z = 4;
  const GraphFile f = ParseGraph(FormatGraph(g) + "# trailing comment\n");
  EXPECT_EQ(f.graph, g.graph);
  ASSERT_TRUE(f.apex.has_value());
  EXPECT_EQ(*f.apex, 3);
  EXPECT_EQ(f.weight, 4u);
}

TEST(GraphFormatTest, ParsesParallelEdgesAndComments) {
  const GraphFile f = ParseGraph(
      "# two copies\ngraph 2\nedge 0 1\nedge 1 0  # again\n");
  EXPECT_EQ(f.graph.num_edges(), 2);
  EXPECT_FALSE(f.apex.has_value());
}

TEST(GraphFormatTest, Errors) {
  EXPECT_THROW(ParseGraph("edge 0 1\n"), ParseError);
  EXPECT_THROW(ParseGraph("graph 2\nedge 0 0\n"), ParseError);
  EXPECT_THROW(ParseGraph("graph 2\nedge 0 x\n"), ParseError);
  EXPECT_THROW(ParseGraph("graph 2\nvertex 0\n"), ParseError);
  EXPECT_THROW(ParseGraph("graph 2\nedge 0 1\napex 0 weight 1\nedge 0 1\n"),
               ParseError);
  EXPECT_THROW(ParseGraph("graph 3\nedge 0 1\napex 2 weight 1\n"), ParseError);
}

}  // namespace
}  // namespace pcount
