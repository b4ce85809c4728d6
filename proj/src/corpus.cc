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

#include "pcount/corpus.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace pcount {
namespace {

// Bit i of a pattern is pair i in lexicographic (u, v) order.
std::vector<std::pair<int, int>> Pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

bool Connected(int n, const std::vector<std::pair<int, int>>& pairs,
               std::uint32_t pattern) {
  DisjointSets sets(n);
  int components = n;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((pattern >> i) & 1) {
      if (sets.Union(pairs[i].first, pairs[i].second)) --components;
    }
  }
  return components <= 1;
}

}  // namespace

std::vector<Multigraph> ConnectedGraphs(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("corpus supports 1 <= n <= 6");
  const auto pairs = Pairs(n);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
    index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> canonical;
  const std::uint32_t patterns = std::uint32_t{1} << pairs.size();
  for (std::uint32_t pattern = 0; pattern < patterns; ++pattern) {
    if (!Connected(n, pairs, pattern)) continue;
    std::uint32_t best = pattern;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((pattern >> i) & 1) {
          image |= std::uint32_t{1} << index[p[pairs[i].first]][p[pairs[i].second]];
        }
      }
      best = std::min(best, image);
      if (best < pattern) break;
    }
    if (best == pattern) canonical.insert(pattern);
  }

  std::vector<Multigraph> graphs;
  for (std::uint32_t pattern : canonical) {
    Multigraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((pattern >> i) & 1) g.AddEdge(pairs[i].first, pairs[i].second);
    }
    graphs.push_back(std::move(g));
  }
  return graphs;
}

std::vector<Multigraph> ConnectedGraphsUpTo(int max_n) {
  std::vector<Multigraph> all;
  for (int n = 1; n <= max_n; ++n) {
    auto graphs = ConnectedGraphs(n);
    all.insert(all.end(), graphs.begin(), graphs.end());
  }
  return all;
}

}  // namespace pcount
