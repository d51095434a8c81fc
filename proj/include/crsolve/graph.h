// Copyright 2026 The crsolve Authors
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

// Graphs, partial colorings and CR instances, plus enumeration of the
// vertex subsets that induce connected subgraphs.
//
// Vertices are 0-based. Vertex subsets are 64-bit masks, so every graph is
// limited to 64 vertices; general (non-path) graphs are further limited by
// the enumeration cap because the number of connected sets grows
// exponentially.

#ifndef CRSOLVE_GRAPH_H_
#define CRSOLVE_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crsolve/common.h"

namespace crsolve {

using Vertex = int;
using VertexMask = std::uint64_t;

// Colors are 1..k; kNoColor marks an uncolored vertex.
using Color = int;
inline constexpr Color kNoColor = 0;

inline constexpr int kMaxVertices = 64;
inline constexpr int kDefaultEnumerationCap = 20;

enum class GraphKind { kPath, kTree, kGeneral };

const char* GraphKindName(GraphKind kind);

// Connected simple undirected graph. The kind is detected from the edges:
// a path is exactly the edge set {(i, i+1)}.
class Graph {
 public:
  static Graph Path(int n);

  // Throws Error on self-loops, duplicate edges, out-of-range endpoints or a
  // disconnected graph.
  Graph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return vertex_count_; }
  GraphKind kind() const { return kind_; }
  bool is_path() const { return kind_ == GraphKind::kPath; }
  // Edges normalized to (min, max) and sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  VertexMask neighbors(Vertex v) const { return adjacency_[v]; }
  VertexMask all_vertices() const;

  // True iff `mask` is nonempty and induces a connected subgraph.
  bool InducesConnected(VertexMask mask) const;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<VertexMask> adjacency_;
  GraphKind kind_ = GraphKind::kGeneral;
};

// A member of S(G): a nonempty vertex set inducing a connected subgraph.
// On paths the set is an interval and `interval` holds its inclusive
// endpoints.
struct ConnectedSet {
  VertexMask members = 0;
  int size = 0;
  std::optional<std::pair<Vertex, Vertex>> interval;

  bool Has(Vertex v) const { return (members >> v) & 1U; }
  Vertex min_vertex() const;
  std::vector<Vertex> Vertices() const;
  // "[lo,hi]" on paths, "{a,b,...}" otherwise; 1-based for logs.
  std::string ToString() const;

  friend bool operator==(const ConnectedSet&, const ConnectedSet&) = default;
};

ConnectedSet MakeConnectedSet(const Graph& graph, VertexMask members);
// Inclusive 0-based interval on a path.
ConnectedSet MakeInterval(Vertex lo, Vertex hi);

// All of S(G) in canonical order: by minimum vertex, then size, then
// lexicographic sorted membership. Throws Error for non-path graphs with more
// than `cap` vertices.
std::vector<ConnectedSet> EnumerateConnectedSets(
    const Graph& graph, int cap = kDefaultEnumerationCap);

bool Intersects(const ConnectedSet& a, const ConnectedSet& b);
// inner ⊆ outer.
bool Contains(const ConnectedSet& outer, const ConnectedSet& inner);
// |a \ b|.
int DifferenceSize(const ConnectedSet& a, const ConnectedSet& b);

class PartialColoring {
 public:
  PartialColoring() = default;
  // Throws Error if some color lies outside {0..k}.
  PartialColoring(int color_count, std::vector<Color> assignment);
  static PartialColoring Uncolored(int vertex_count, int color_count);

  int color_count() const { return color_count_; }
  int vertex_count() const { return static_cast<int>(assignment_.size()); }
  Color operator[](Vertex v) const { return assignment_[v]; }
  const std::vector<Color>& assignment() const { return assignment_; }
  VertexMask ColorClass(Color c) const;

  friend bool operator==(const PartialColoring&,
                         const PartialColoring&) = default;

 private:
  int color_count_ = 0;
  std::vector<Color> assignment_;
};

// The triple (G, C, w). Uncolored vertices must carry weight zero; the
// constructor rejects anything else instead of normalizing silently.
class Instance {
 public:
  Instance(Graph graph, PartialColoring coloring, std::vector<Rational> weights);
  static Instance UnitWeights(Graph graph, PartialColoring coloring);

  const Graph& graph() const { return graph_; }
  const PartialColoring& coloring() const { return coloring_; }
  const std::vector<Rational>& weights() const { return weights_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int color_count() const { return coloring_.color_count(); }

  // w_{v,c}: w(v) if C(v) = c, else 0.
  Rational VertexColorWeight(Vertex v, Color c) const;
  Rational TotalWeight() const;
  // True when every weight is an integer no larger than 1e6, the regime in
  // which float LP values are compared to exact optima at 1e-6.
  bool HasSmallIntegerWeights() const;

 private:
  Graph graph_;
  PartialColoring coloring_;
  std::vector<Rational> weights_;
};

// Every nonempty color class induces a connected subgraph.
bool IsConvex(const Graph& graph, const PartialColoring& coloring);

// Total weight of vertices colored in the instance whose color differs in
// `recoloring`.
Rational RecoloredWeight(const Instance& instance,
                         const PartialColoring& recoloring);
// Total weight of vertices that keep their original color.
Rational KeptWeight(const Instance& instance, const PartialColoring& recoloring);

}  // namespace crsolve

#endif  // CRSOLVE_GRAPH_H_
