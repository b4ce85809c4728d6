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

#include "pcount/counters.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pcount {
namespace {

void RequireNonNegative(int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
}

class MatchingCounter {
 public:
  MatchingCounter(const Multigraph& g, int k)
      : g_(g), k_(k), used_(g.num_vertices(), false) {}

  std::uint64_t Run() {
    Extend(0, 0);
    return count_;
  }

 private:
  void Extend(int start, int depth) {
    if (depth == k_) {
      ++count_;
      return;
    }
    for (int e = start; e + (k_ - depth) <= g_.num_edges(); ++e) {
      const Edge& edge = g_.edge(e);
      if (used_[edge.u] || used_[edge.v]) continue;
      used_[edge.u] = used_[edge.v] = true;
      Extend(e + 1, depth + 1);
      used_[edge.u] = used_[edge.v] = false;
    }
  }

  const Multigraph& g_;
  const int k_;
  std::vector<bool> used_;
  std::uint64_t count_ = 0;
};

// Enumerates every k-edge tree exactly once, rooted at its smallest edge and
// grown through a frontier of edges leaving the current vertex set. Edges
// skipped at one level are never offered again below it, which makes the
// generation path of each tree unique. Trees are binned by the number of
// marked edges they contain.
class TreeEnumerator {
 public:
  TreeEnumerator(const Multigraph& g, int k, std::vector<bool> marked)
      : g_(g),
        k_(k),
        marked_(std::move(marked)),
        incident_(g.num_vertices()),
        in_tree_(g.num_vertices(), false),
        histogram_(k + 1, 0) {
    for (int e = 0; e < g.num_edges(); ++e) {
      incident_[g.edge(e).u].push_back(e);
      incident_[g.edge(e).v].push_back(e);
    }
  }

  std::vector<std::uint64_t> Run() {
    for (root_ = 0; root_ < g_.num_edges(); ++root_) {
      const Edge& edge = g_.edge(root_);
      in_tree_[edge.u] = in_tree_[edge.v] = true;
      std::vector<int> frontier;
      AppendLeaving(edge.u, frontier);
      AppendLeaving(edge.v, frontier);
      Grow(frontier, 1, marked_[root_] ? 1 : 0);
      in_tree_[edge.u] = in_tree_[edge.v] = false;
    }
    return histogram_;
  }

 private:
  void AppendLeaving(int w, std::vector<int>& frontier) const {
    for (int e : incident_[w]) {
      if (e > root_ && !in_tree_[g_.edge(e).Other(w)]) frontier.push_back(e);
    }
  }

  void Grow(const std::vector<int>& frontier, int size, int marks) {
    if (size == k_) {
      ++histogram_[marks];
      return;
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const Edge& edge = g_.edge(frontier[i]);
      const bool u_in = in_tree_[edge.u];
      const bool v_in = in_tree_[edge.v];
      if (u_in && v_in) continue;
      const int w = u_in ? edge.v : edge.u;
      in_tree_[w] = true;
      std::vector<int> next(frontier.begin() + i + 1, frontier.end());
      AppendLeaving(w, next);
      Grow(next, size + 1, marks + (marked_[frontier[i]] ? 1 : 0));
      in_tree_[w] = false;
    }
  }

  const Multigraph& g_;
  const int k_;
  const std::vector<bool> marked_;
  std::vector<std::vector<int>> incident_;
  std::vector<bool> in_tree_;
  std::vector<std::uint64_t> histogram_;
  int root_ = 0;
};

// Depth-first walk over acyclic edge subsets in increasing index order, with
// a rollback union-find. `visit(depth)` is called once per forest of size at
// most max_depth, including the empty forest.
template <typename Visit>
void WalkForests(const Multigraph& g, int max_depth, DisjointSets& sets,
                 Visit&& visit, int start = 0, int depth = 0) {
  visit(depth);
  if (depth == max_depth) return;
  for (int e = start; e < g.num_edges(); ++e) {
    if (!sets.Union(g.edge(e).u, g.edge(e).v)) continue;
    WalkForests(g, max_depth, sets, visit, e + 1, depth + 1);
    sets.Undo();
  }
}

}  // namespace

Count CountKMatchings(const Multigraph& g, int k) {
  RequireNonNegative(k);
  if (k == 0) return 1;
  return MatchingCounter(g, k).Run();
}

Count CountKTrees(const Multigraph& g, int k) {
  if (k < 1) {
    throw std::invalid_argument("k-trees need k >= 1, got " +
                                std::to_string(k));
  }
  const auto histogram =
      TreeEnumerator(g, k, std::vector<bool>(g.num_edges(), false)).Run();
  return histogram[0];
}

Count CountKForests(const Multigraph& g, int k) {
  RequireNonNegative(k);
  if (k > g.num_vertices()) return 0;
  std::uint64_t count = 0;
  DisjointSets sets(g.num_vertices());
  WalkForests(g, k, sets, [&](int depth) {
    if (depth == k) ++count;
  });
  return count;
}

std::vector<Count> ApexTreeProfile(const ApexWeightedGraph& g, int k) {
  if (k < 1) {
    throw std::invalid_argument("k-trees need k >= 1, got " +
                                std::to_string(k));
  }
  std::vector<bool> marked(g.graph.num_edges());
  for (int e = 0; e < g.graph.num_edges(); ++e) marked[e] = g.IsApexEdge(e);
  const auto histogram = TreeEnumerator(g.graph, k, std::move(marked)).Run();
  return {histogram.begin(), histogram.end()};
}

Count WeightedTreeSum(const ApexWeightedGraph& g, int k, std::uint64_t z) {
  if (k >= 1 && z > static_cast<std::uint64_t>(k)) {
    throw std::invalid_argument("apex weight z = " + std::to_string(z) +
                                " exceeds k = " + std::to_string(k));
  }
  const auto profile = ApexTreeProfile(g, k);
  Count total = 0;
  BigInt power = 1;
  for (const Count& bin : profile) {
    total += bin * power;
    power *= z;
  }
  return total;
}

namespace {

// Fraction-free (Bareiss) determinant.
BigInt Determinant(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  BigInt sign = 1;
  BigInt prev = 1;
  for (int i = 0; i < n; ++i) {
    int p = i;
    while (p < n && m[p][i] == 0) ++p;
    if (p == n) return 0;
    if (p != i) {
      std::swap(m[p], m[i]);
      sign = -sign;
    }
    for (int r = i + 1; r < n; ++r) {
      for (int c = i + 1; c < n; ++c) {
        m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
      }
    }
    prev = m[i][i];
  }
  return n == 0 ? BigInt(1) : sign * m[n - 1][n - 1];
}

// Same elimination in 128-bit integers; nullopt on overflow.
std::optional<__int128> DeterminantNarrow(std::vector<std::vector<__int128>> m) {
  const int n = static_cast<int>(m.size());
  __int128 sign = 1;
  __int128 prev = 1;
  for (int i = 0; i < n; ++i) {
    int p = i;
    while (p < n && m[p][i] == 0) ++p;
    if (p == n) return 0;
    if (p != i) {
      std::swap(m[p], m[i]);
      sign = -sign;
    }
    for (int r = i + 1; r < n; ++r) {
      for (int c = i + 1; c < n; ++c) {
        __int128 x, y;
        if (__builtin_mul_overflow(m[r][c], m[i][i], &x) ||
            __builtin_mul_overflow(m[r][i], m[i][c], &y) ||
            __builtin_sub_overflow(x, y, &x)) {
          return std::nullopt;
        }
        m[r][c] = x / prev;
      }
    }
    prev = m[i][i];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

BigInt FromNarrow(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : v;
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-out) : out;
}

// Sum over (k+1)-subsets S of the weighted spanning-tree count of G[S].
Count TreeSumByMinors(const Multigraph& g, int k,
                      const std::vector<BigInt>& weight) {
  const int n = g.num_vertices();
  if (k + 1 > n) return 0;
  std::vector<std::vector<BigInt>> w(n, std::vector<BigInt>(n, 0));
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    w[edge.u][edge.v] += weight[e];
    w[edge.v][edge.u] += weight[e];
  }
  std::vector<int> subset(k + 1);
  std::iota(subset.begin(), subset.end(), 0);
  Count total = 0;
  while (true) {
    // Laplacian of G[S] without its last row and column.
    std::vector<std::vector<BigInt>> lap(k, std::vector<BigInt>(k, 0));
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b <= k; ++b) {
        if (a == b) continue;
        const BigInt& x = w[subset[a]][subset[b]];
        lap[a][a] += x;
        if (b < k) lap[a][b] -= x;
      }
    }
    std::vector<std::vector<__int128>> narrow(k, std::vector<__int128>(k));
    bool fits = true;
    for (int a = 0; a < k && fits; ++a) {
      for (int b = 0; b < k; ++b) {
        if (boost::multiprecision::abs(lap[a][b]) >
            std::numeric_limits<std::int64_t>::max()) {
          fits = false;
          break;
        }
        narrow[a][b] = static_cast<std::int64_t>(lap[a][b]);
      }
    }
    const std::optional<__int128> det =
        fits ? DeterminantNarrow(std::move(narrow)) : std::nullopt;
    total += det ? FromNarrow(*det) : Determinant(std::move(lap));
    int i = k;
    while (i >= 0 && subset[i] == n - (k + 1) + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j <= k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return total;
}

}  // namespace

Count CountKTreesByMatrixTree(const Multigraph& g, int k) {
  if (k < 1) {
    throw std::invalid_argument("k-trees need k >= 1, got " +
                                std::to_string(k));
  }
  return TreeSumByMinors(g, k, std::vector<BigInt>(g.num_edges(), 1));
}

Count WeightedTreeSumByMatrixTree(const ApexWeightedGraph& g, int k,
                                  std::uint64_t z) {
  if (k < 1) {
    throw std::invalid_argument("k-trees need k >= 1, got " +
                                std::to_string(k));
  }
  if (z > static_cast<std::uint64_t>(k)) {
    throw std::invalid_argument("apex weight z = " + std::to_string(z) +
                                " exceeds k = " + std::to_string(k));
  }
  std::vector<BigInt> weight(g.graph.num_edges(), 1);
  for (int e = 0; e < g.graph.num_edges(); ++e) {
    if (g.IsApexEdge(e)) weight[e] = z;
  }
  return TreeSumByMinors(g.graph, k, weight);
}

IntPoly ForestPolynomial(const Multigraph& g, std::optional<int> max_degree) {
  if (g.num_edges() <= kSubsetEnumerationMaxEdges) {
    return ForestPolynomialBySubsets(g, max_degree);
  }
  return ForestPolynomialByDeletionContraction(g, max_degree);
}

IntPoly ForestPolynomialBySubsets(const Multigraph& g,
                                  std::optional<int> max_degree) {
  const int top = std::min(max_degree.value_or(g.num_vertices()),
                           std::max(g.num_vertices() - 1, 0));
  if (top < 0) return {};
  std::vector<std::uint64_t> counts(top + 1, 0);
  DisjointSets sets(g.num_vertices());
  WalkForests(g, top, sets, [&](int depth) { ++counts[depth]; });
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return IntPoly(std::move(coeffs));
}

namespace {

// Simple graph with edge multiplicities; vertices are merged by contraction.
using MultiplicityMatrix = std::vector<std::vector<std::uint64_t>>;

IntPoly DeletionContraction(MultiplicityMatrix adj, int degree) {
  const int n = static_cast<int>(adj.size());
  IntPoly factor = IntPoly{1};
  // Peel pendant edge classes: a leaf class contributes (1 + mu x).
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (int v = 0; v < n; ++v) {
      int neighbours = 0;
      int other = -1;
      for (int w = 0; w < n; ++w) {
        if (adj[v][w] != 0) {
          ++neighbours;
          other = w;
        }
      }
      if (neighbours != 1) continue;
      const std::uint64_t mu = adj[v][other];
      factor = MultiplyTruncated(factor, IntPoly({1, static_cast<long long>(mu)}),
                                 degree);
      adj[v][other] = adj[other][v] = 0;
      peeled = true;
    }
  }
  int u = -1;
  int v = -1;
  for (int a = 0; a < n && u < 0; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (adj[a][b] != 0) {
        u = a;
        v = b;
        break;
      }
    }
  }
  if (u < 0 || degree == 0) return factor;

  const std::uint64_t mu = adj[u][v];
  MultiplicityMatrix deleted = adj;
  deleted[u][v] = deleted[v][u] = 0;

  // Contract: fold v into u, dropping the class itself (it becomes loops).
  MultiplicityMatrix contracted(n - 1, std::vector<std::uint64_t>(n - 1, 0));
  auto relabel = [v](int w) { return w > v ? w - 1 : w; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ra = relabel(a == v ? u : a);
      const int rb = relabel(b == v ? u : b);
      if (ra != rb) contracted[ra][rb] += adj[a][b];
    }
  }

  IntPoly result = DeletionContraction(std::move(deleted), degree);
  IntPoly through =
      DeletionContraction(std::move(contracted), degree - 1) *
      BigInt(mu);
  result += MultiplyTruncated(IntPoly::Monomial(1, 1), through, degree);
  return MultiplyTruncated(factor, result, degree);
}

}  // namespace

IntPoly ForestPolynomialByDeletionContraction(const Multigraph& g,
                                              std::optional<int> max_degree) {
  const int top = std::min(max_degree.value_or(g.num_vertices()),
                           std::max(g.num_vertices() - 1, 0));
  if (top < 0) return {};
  MultiplicityMatrix adj(g.num_vertices(),
                         std::vector<std::uint64_t>(g.num_vertices(), 0));
  for (const Edge& e : g.edges()) {
    ++adj[e.u][e.v];
    ++adj[e.v][e.u];
  }
  return DeletionContraction(std::move(adj), top);
}

BivarApexCoeffs::BivarApexCoeffs(int cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  for (int i = 0; i <= cap; ++i) rows_.emplace_back(cap - i + 1, 0);
}

BigInt BivarApexCoeffs::at(int i, int j) const {
  if (i < 0 || j < 0 || i + j > cap_) return 0;
  return rows_[i][j];
}

BigInt& BivarApexCoeffs::mutable_at(int i, int j) {
  if (i < 0 || j < 0 || i + j > cap_) {
    throw std::out_of_range("coefficient outside the degree cap");
  }
  return rows_[i][j];
}

IntPoly BivarApexCoeffs::Row(int i) const {
  if (i < 0 || i > cap_) return {};
  return IntPoly(rows_[i]);
}

BivarApexCoeffs BivariateApexCoeffs(const Multigraph& g,
                                    std::optional<int> cap) {
  const int n = g.num_vertices();
  BivarApexCoeffs table(cap.value_or(n));
  const int max_forest = std::min(table.cap(), std::max(n - 1, 0));
  DisjointSets sets(n);
  WalkForests(g, max_forest, sets, [&](int depth) {
    const int z_budget = table.cap() - depth;
    IntPoly product{1};
    for (int v = 0; v < n; ++v) {
      if (sets.Find(v) != v) continue;
      product = MultiplyTruncated(
          product, IntPoly({1, static_cast<long long>(sets.SizeOf(v))}),
          z_budget);
    }
    for (int j = 0; j <= product.degree(); ++j) {
      table.mutable_at(depth, j) += product.coeff(j);
    }
  });
  return table;
}

IntPoly CoefficientPolyCk(const Multigraph& g, int k) {
  RequireNonNegative(k);
  const int m = g.num_edges();
  const int n = g.num_vertices();
  if (k > m) return {};
  // Plain lexicographic walk over all k-subsets; each one is tested from
  // scratch, independently of the pruned forest walk above.
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  IntPoly total;
  while (true) {
    if (SubsetIsAcyclic(g, subset)) {
      DisjointSets sets(n);
      for (int e : subset) sets.Union(g.edge(e).u, g.edge(e).v);
      IntPoly product{1};
      for (int v = 0; v < n; ++v) {
        if (sets.Find(v) == v) {
          product = product * IntPoly({1, static_cast<long long>(sets.SizeOf(v))});
        }
      }
      total += product;
    }
    int i = k - 1;
    while (i >= 0 && subset[i] == m - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return total;
}

}  // namespace pcount
