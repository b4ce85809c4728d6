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

#ifndef PCOUNT_CORPUS_H_
#define PCOUNT_CORPUS_H_

#include <vector>

#include "pcount/graph.h"

namespace pcount {

// One representative of every isomorphism class of connected simple graphs
// on exactly n vertices (1 <= n <= 6), each the lexicographically smallest
// adjacency pattern of its class. Edges are listed as (u, v), u < v, in
// lexicographic order.
std::vector<Multigraph> ConnectedGraphs(int n);

// ConnectedGraphs(1) .. ConnectedGraphs(max_n), concatenated.
std::vector<Multigraph> ConnectedGraphsUpTo(int max_n);

}  // namespace pcount

#endif  // PCOUNT_CORPUS_H_
