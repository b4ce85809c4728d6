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

#include "pcount/graph.h"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pcount/errors.h"

namespace pcount {

Multigraph::Multigraph(int num_vertices) : n_(num_vertices) {
  if (num_vertices < 0) {
    throw std::invalid_argument("negative vertex count");
  }
}

Multigraph::Multigraph(int num_vertices, std::vector<Edge> edges)
    : Multigraph(num_vertices) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) AddEdge(e.u, e.v);
}

int Multigraph::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  edges_.push_back({u, v});
  return num_edges() - 1;
}

ApexWeightedGraph ApexWeightedGraph::WithWeight(std::uint64_t weight) const {
  ApexWeightedGraph copy = *this;
  copy.z = weight;
  return copy;
}

void ValidateApex(const Multigraph& g, int apex) {
  if (apex < 0 || apex >= g.num_vertices()) {
    throw std::invalid_argument("apex vertex out of range");
  }
  std::vector<bool> adjacent(g.num_vertices(), false);
  for (const Edge& e : g.edges()) {
    if (e.Touches(apex)) adjacent[e.Other(apex)] = true;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v != apex && !adjacent[v]) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is not adjacent to the apex");
    }
  }
}

ApexWeightedGraph AddApex(const Multigraph& g) {
  const int n = g.num_vertices();
  Multigraph out(n + 1, g.edges());
  for (int v = 0; v < n; ++v) out.AddEdge(v, n);
  return {std::move(out), n, 1};
}

ApexWeightedGraph BuildGxz(const Multigraph& g, int x, std::uint64_t z) {
  if (x < 0) throw std::invalid_argument("x must be non-negative");
  Multigraph padded(g.num_vertices() + x, g.edges());
  return AddApex(padded).WithWeight(z);
}

HubGraph BuildGPowZ(const ApexWeightedGraph& g) {
  if (g.z == 0) {
    throw std::invalid_argument(
        "G^z needs z >= 1; delete the apex for the z = 0 case");
  }
  const int z = static_cast<int>(g.z);
  Transformed base = DeleteVertex(g.graph, g.apex);
  const int n = base.graph.num_vertices();
  Multigraph out(n + z + 1, base.graph.edges());
  for (int i = 0; i < z; ++i) {
    for (int v = 0; v < n; ++v) out.AddEdge(v, n + i);
  }
  HubGraph result;
  const int hub = n + z;
  for (int i = 0; i < z; ++i) result.hub_edges.push_back(out.AddEdge(hub, n + i));
  result.graph = std::move(out);
  return result;
}

Transformed Thicken(const Multigraph& g, std::span<const EdgeClass> classes,
                    int a, int b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("thickening factors must be positive");
  }
  if (static_cast<int>(classes.size()) != g.num_edges()) {
    throw std::invalid_argument("one edge class per edge required");
  }
  Transformed out{Multigraph(g.num_vertices()), {}};
  for (int e = 0; e < g.num_edges(); ++e) {
    const int copies = classes[e] == EdgeClass::kX ? a : b;
    for (int c = 0; c < copies; ++c) {
      out.graph.AddEdge(g.edge(e).u, g.edge(e).v);
      out.origin.push_back(e);
    }
  }
  return out;
}

Transformed DeleteEdges(const Multigraph& g, std::span<const int> edges) {
  std::vector<bool> doomed(g.num_edges(), false);
  for (int e : edges) {
    if (e < 0 || e >= g.num_edges()) {
      throw std::invalid_argument("edge index out of range: " +
                                  std::to_string(e));
    }
    doomed[e] = true;
  }
  Transformed out{Multigraph(g.num_vertices()), {}};
  for (int e = 0; e < g.num_edges(); ++e) {
    if (doomed[e]) continue;
    out.graph.AddEdge(g.edge(e).u, g.edge(e).v);
    out.origin.push_back(e);
  }
  return out;
}

Transformed DeleteVertex(const Multigraph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }
  auto shift = [v](int w) { return w > v ? w - 1 : w; };
  Transformed out{Multigraph(g.num_vertices() - 1), {}};
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.Touches(v)) continue;
    out.graph.AddEdge(shift(edge.u), shift(edge.v));
    out.origin.push_back(e);
  }
  return out;
}

Transformed ContractEdge(const Multigraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) {
    throw std::invalid_argument("edge index out of range: " +
                                std::to_string(e));
  }
  const int keep = std::min(g.edge(e).u, g.edge(e).v);
  const int gone = std::max(g.edge(e).u, g.edge(e).v);
  auto relabel = [&](int w) {
    if (w == gone) w = keep;
    return w > gone ? w - 1 : w;
  };
  Transformed out{Multigraph(g.num_vertices() - 1), {}};
  for (int f = 0; f < g.num_edges(); ++f) {
    const int u = relabel(g.edge(f).u);
    const int v = relabel(g.edge(f).v);
    if (u == v) continue;
    out.graph.AddEdge(u, v);
    out.origin.push_back(f);
  }
  return out;
}

namespace {

void CheckIndices(const Multigraph& g, std::span<const int> edges) {
  for (int e : edges) {
    if (e < 0 || e >= g.num_edges()) {
      throw std::invalid_argument("edge index out of range: " +
                                  std::to_string(e));
    }
  }
}

}  // namespace

bool SubsetIsAcyclic(const Multigraph& g, std::span<const int> edges) {
  CheckIndices(g, edges);
  DisjointSets sets(g.num_vertices());
  for (int e : edges) {
    if (!sets.Union(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

bool SubsetIsTree(const Multigraph& g, std::span<const int> edges) {
  if (edges.empty()) return false;
  if (!SubsetIsAcyclic(g, edges)) return false;
  std::vector<bool> touched(g.num_vertices(), false);
  int count = 0;
  for (int e : edges) {
    for (int w : {g.edge(e).u, g.edge(e).v}) {
      if (!touched[w]) {
        touched[w] = true;
        ++count;
      }
    }
  }
  return count == static_cast<int>(edges.size()) + 1;
}

DisjointSets::DisjointSets(int n) : parent_(n), size_(n, 1) {
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

int DisjointSets::Find(int x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool DisjointSets::Union(int x, int y) {
  x = Find(x);
  y = Find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  history_.push_back(y);
  return true;
}

void DisjointSets::Undo() {
  const int y = history_.back();
  history_.pop_back();
  const int x = parent_[y];
  size_[x] -= size_[y];
  parent_[y] = y;
}

namespace {

std::string StripComment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

long long ReadInt(std::istringstream& fields, int line_no) {
  std::string token;
  if (!(fields >> token)) {
    throw ParseError("line " + std::to_string(line_no) + ": missing integer");
  }
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 0) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

void ExpectEnd(std::istringstream& fields, int line_no) {
  std::string extra;
  if (fields >> extra) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": unexpected token '" + extra + "'");
  }
}

}  // namespace

GraphFile ParseGraph(std::istream& in) {
  GraphFile file;
  bool have_header = false;
  bool have_apex = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(StripComment(line));
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (have_apex) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": nothing may follow the apex line");
    }
    if (keyword == "graph") {
      if (have_header) throw ParseError("duplicate graph header");
      file.graph = Multigraph(static_cast<int>(ReadInt(fields, line_no)));
      have_header = true;
    } else if (!have_header) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'graph <n>' first");
    } else if (keyword == "edge") {
      const long long u = ReadInt(fields, line_no);
      const long long v = ReadInt(fields, line_no);
      try {
        file.graph.AddEdge(static_cast<int>(u), static_cast<int>(v));
      } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    } else if (keyword == "apex") {
      file.apex = static_cast<int>(ReadInt(fields, line_no));
      std::string weight;
      if (!(fields >> weight) || weight != "weight") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'apex <v> weight <z>'");
      }
      file.weight = static_cast<std::uint64_t>(ReadInt(fields, line_no));
      have_apex = true;
    } else {
      throw ParseError("line " + std::to_string(line_no) +
                       ": unknown keyword '" + keyword + "'");
    }
    ExpectEnd(fields, line_no);
  }
  if (!have_header) throw ParseError("empty graph file");
  if (file.apex) {
    try {
      ValidateApex(file.graph, *file.apex);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return file;
}

GraphFile ParseGraph(const std::string& text) {
  std::istringstream in(text);
  return ParseGraph(in);
}

std::string FormatGraph(const Multigraph& g) {
  std::ostringstream out;
  out << "graph " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string FormatGraph(const ApexWeightedGraph& g) {
  return FormatGraph(g.graph) + "apex " + std::to_string(g.apex) +
         " weight " + std::to_string(g.z) + '\n';
}

Multigraph CompleteGraph(int n) {
  Multigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v);
  }
  return g;
}

Multigraph PathGraph(int num_vertices) {
  Multigraph g(num_vertices);
  for (int v = 0; v + 1 < num_vertices; ++v) g.AddEdge(v, v + 1);
  return g;
}

}  // namespace pcount
