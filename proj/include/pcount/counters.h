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

#ifndef PCOUNT_COUNTERS_H_
#define PCOUNT_COUNTERS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pcount/bigint.h"
#include "pcount/graph.h"
#include "pcount/poly.h"

namespace pcount {

// Ground-truth counters. Everything here enumerates edge subsets directly
// and is meant for desk-scale graphs; the reduction pipelines are checked
// against these values.

// Number of k-edge subsets with pairwise disjoint endpoints. k = 0 gives 1.
Count CountKMatchings(const Multigraph& g, int k);

// Number of k-edge subsets forming a tree. Throws std::invalid_argument for
// k < 1: single-vertex trees are not counted.
Count CountKTrees(const Multigraph& g, int k);

// Number of acyclic k-edge subsets. k = 0 gives 1.
Count CountKForests(const Multigraph& g, int k);

// profile[j] is the number of k-edge trees using exactly j apex edges.
std::vector<Count> ApexTreeProfile(const ApexWeightedGraph& g, int k);

// Sum over k-edge trees t of z^(number of apex edges in t). Requires
// 1 <= k and z <= k.
Count WeightedTreeSum(const ApexWeightedGraph& g, int k, std::uint64_t z);
inline Count WeightedTreeSum(const ApexWeightedGraph& g, int k) {
  return WeightedTreeSum(g, k, g.z);
}

// The same two quantities by the matrix-tree theorem: over all (k+1)-vertex
// subsets S, the determinant of a Laplacian minor of G[S], with apex edges
// weighted z. Polynomial per subset instead of per tree.
Count CountKTreesByMatrixTree(const Multigraph& g, int k);
Count WeightedTreeSumByMatrixTree(const ApexWeightedGraph& g, int k,
                                  std::uint64_t z);

// Graphs with at most this many edges use subset enumeration for the forest
// polynomial; larger ones use deletion-contraction.
inline constexpr int kSubsetEnumerationMaxEdges = 20;

// Generating polynomial of acyclic edge subsets, optionally truncated to
// degree max_degree.
IntPoly ForestPolynomial(const Multigraph& g,
                         std::optional<int> max_degree = std::nullopt);
IntPoly ForestPolynomialBySubsets(const Multigraph& g,
                                  std::optional<int> max_degree = std::nullopt);
// F(G) = F(G - e) + x F(G / e) over parallel classes, loops dropped.
IntPoly ForestPolynomialByDeletionContraction(
    const Multigraph& g, std::optional<int> max_degree = std::nullopt);

// Coefficients c(i, j) of x^i z^j in the forest polynomial of the graph with
// an apex added, base edges marked x and apex edges marked z. Only entries
// with i + j <= cap are stored.
class BivarApexCoeffs {
 public:
  explicit BivarApexCoeffs(int cap);

  int cap() const { return cap_; }
  // Zero outside the stored triangle.
  BigInt at(int i, int j) const;
  BigInt& mutable_at(int i, int j);
  // Row i as a polynomial in z (truncated to degree cap - i).
  IntPoly Row(int i) const;

 private:
  int cap_;
  std::vector<std::vector<BigInt>> rows_;
};

// Enumerates the forests A of g with |A| <= cap and accumulates
// x^|A| * prod over components T of (V, A) of (1 + |T| z), singleton
// components included. cap defaults to n, which loses nothing.
BivarApexCoeffs BivariateApexCoeffs(const Multigraph& g,
                                    std::optional<int> cap = std::nullopt);

// C_k(z): the sum over k-forests A of prod over components of (1 + |T| z).
// The zero polynomial when g has no k-forest.
IntPoly CoefficientPolyCk(const Multigraph& g, int k);

}  // namespace pcount

#endif  // PCOUNT_COUNTERS_H_
