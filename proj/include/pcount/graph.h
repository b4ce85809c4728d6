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

#ifndef PCOUNT_GRAPH_H_
#define PCOUNT_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pcount {

struct Edge {
  int u = 0;
  int v = 0;

  bool Touches(int w) const { return u == w || v == w; }
  int Other(int w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loop-free multigraph on vertices 0..n-1. Edge identity is list position,
// so parallel edges are distinguished by index.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int num_vertices);
  Multigraph(int num_vertices, std::vector<Edge> edges);

  // Throws std::invalid_argument for self-loops or out-of-range endpoints.
  int AddEdge(int u, int v);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Marks edges created by a transformation (no counterpart in the source).
inline constexpr int kNewEdge = -1;

// A transformed graph together with origin[i], the source index of edge i
// (kNewEdge for edges the transformation introduced).
struct Transformed {
  Multigraph graph;
  std::vector<int> origin;
};

// A multigraph with a vertex adjacent to every other vertex. Apex edges carry
// weight z, all other edges weight 1.
struct ApexWeightedGraph {
  Multigraph graph;
  int apex = 0;
  std::uint64_t z = 1;

  bool IsApexEdge(int e) const { return graph.edge(e).Touches(apex); }
  ApexWeightedGraph WithWeight(std::uint64_t weight) const;
};

// Throws std::invalid_argument unless `apex` is adjacent to all other vertices.
void ValidateApex(const Multigraph& g, int apex);

// Appends vertex n adjacent to all of 0..n-1. Original edges keep their
// indices; apex edges follow in vertex order. Weight defaults to 1.
ApexWeightedGraph AddApex(const Multigraph& g);

// G plus x isolated vertices, then an apex over all n + x vertices, apex
// edges weighted z.
ApexWeightedGraph BuildGxz(const Multigraph& g, int x, std::uint64_t z);

struct HubGraph {
  Multigraph graph;
  std::vector<int> hub_edges;  // the z edges {a, a_i}
};

// Replaces the apex by z copies a_1..a_z adjacent to every base vertex and a
// fresh vertex a adjacent exactly to a_1..a_z. Layout: base vertices keep
// their relative order, then a_1..a_z, then a. Requires g.z >= 1.
HubGraph BuildGPowZ(const ApexWeightedGraph& g);

enum class EdgeClass { kX, kZ };

// Replaces every X edge by `a` parallel copies and every Z edge by `b`.
// Copies of one source edge are consecutive.
Transformed Thicken(const Multigraph& g, std::span<const EdgeClass> classes,
                    int a, int b);

Transformed DeleteEdges(const Multigraph& g, std::span<const int> edges);

// Removes v and its edges; vertices above v shift down by one.
Transformed DeleteVertex(const Multigraph& g, int v);

// Merges the endpoints of e into the smaller one; the larger id disappears
// and later vertices shift down. Edges that would become loops are dropped.
Transformed ContractEdge(const Multigraph& g, int e);

bool SubsetIsAcyclic(const Multigraph& g, std::span<const int> edges);

// Acyclic and spanning exactly |edges| + 1 vertices. False for the empty set.
bool SubsetIsTree(const Multigraph& g, std::span<const int> edges);

// Union-find with rollback, used by the enumerators.
class DisjointSets {
 public:
  explicit DisjointSets(int n);

  int Find(int x) const;
  // Returns false (and records nothing) when x and y are already joined.
  bool Union(int x, int y);
  // Undoes the most recent successful Union.
  void Undo();
  int SizeOf(int x) const { return size_[Find(x)]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

// Text format:
//   graph <n>
//   edge <u> <v>          (repeat for parallel edges)
//   apex <v> weight <z>   (optional, last)
// '#' starts a comment.
struct GraphFile {
  Multigraph graph;
  std::optional<int> apex;
  std::uint64_t weight = 1;
};

GraphFile ParseGraph(std::istream& in);
GraphFile ParseGraph(const std::string& text);
std::string FormatGraph(const Multigraph& g);
std::string FormatGraph(const ApexWeightedGraph& g);

// Small named graphs used throughout tests and examples.
Multigraph CompleteGraph(int n);
Multigraph PathGraph(int num_vertices);

}  // namespace pcount

#endif  // PCOUNT_GRAPH_H_
