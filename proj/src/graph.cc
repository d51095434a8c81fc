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

#include "crsolve/graph.h"

#include <algorithm>
#include <bit>
#include <sstream>

namespace crsolve {

std::string ToString(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

const char* GraphKindName(GraphKind kind) {
  switch (kind) {
    case GraphKind::kPath:
      return "path";
    case GraphKind::kTree:
      return "tree";
    case GraphKind::kGeneral:
      return "general";
  }
  return "general";
}

namespace {

VertexMask Bit(Vertex v) { return VertexMask{1} << v; }

VertexMask LowMask(int n) {
  return n >= kMaxVertices ? ~VertexMask{0} : (Bit(n) - 1);
}

}  // namespace

Graph Graph::Path(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph::Graph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : vertex_count_(vertex_count), adjacency_(vertex_count, 0) {
  if (vertex_count < 1 || vertex_count > kMaxVertices) {
    throw Error("graph must have between 1 and " +
                std::to_string(kMaxVertices) + " vertices, got " +
                std::to_string(vertex_count));
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error("edge endpoint out of range: (" + std::to_string(u) + "," +
                  std::to_string(v) + ")");
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adjacency_[u] & Bit(v)) {
      throw Error("duplicate edge (" + std::to_string(u) + "," +
                  std::to_string(v) + ")");
    }
    adjacency_[u] |= Bit(v);
    adjacency_[v] |= Bit(u);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (!InducesConnected(all_vertices())) {
    throw Error("graph is not connected");
  }
  const int m = static_cast<int>(edges_.size());
  if (m == vertex_count - 1) {
    kind_ = GraphKind::kTree;
    bool path = true;
    for (int i = 0; i < m && path; ++i) {
      path = edges_[i] == std::pair<Vertex, Vertex>(i, i + 1);
    }
    if (path) kind_ = GraphKind::kPath;
  }
}

VertexMask Graph::all_vertices() const { return LowMask(vertex_count_); }

bool Graph::InducesConnected(VertexMask mask) const {
  if (mask == 0) return false;
  VertexMask reached = mask & (~mask + 1);
  VertexMask frontier = reached;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= adjacency_[std::countr_zero(f)];
    }
    next &= mask & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

Vertex ConnectedSet::min_vertex() const { return std::countr_zero(members); }

std::vector<Vertex> ConnectedSet::Vertices() const {
  std::vector<Vertex> out;
  out.reserve(size);
  for (VertexMask m = members; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::string ConnectedSet::ToString() const {
  std::ostringstream out;
  if (interval) {
    out << "[" << interval->first + 1 << "," << interval->second + 1 << "]";
    return out.str();
  }
  out << "{";
  bool first = true;
  for (Vertex v : Vertices()) {
    out << (first ? "" : ",") << v + 1;
    first = false;
  }
  out << "}";
  return out.str();
}

ConnectedSet MakeInterval(Vertex lo, Vertex hi) {
  ConnectedSet s;
  s.members = LowMask(hi + 1) & ~LowMask(lo);
  s.size = hi - lo + 1;
  s.interval = std::make_pair(lo, hi);
  return s;
}

ConnectedSet MakeConnectedSet(const Graph& graph, VertexMask members) {
  if ((members & ~graph.all_vertices()) != 0) {
    throw Error("vertex set contains vertices outside the graph");
  }
  if (!graph.InducesConnected(members)) {
    throw Error("vertex set does not induce a connected subgraph");
  }
  if (graph.is_path()) {
    const Vertex lo = std::countr_zero(members);
    const Vertex hi = kMaxVertices - 1 - std::countl_zero(members);
    return MakeInterval(lo, hi);
  }
  ConnectedSet s;
  s.members = members;
  s.size = std::popcount(members);
  return s;
}

namespace {

// Grows every connected set whose minimum vertex is `root`. Each set is
// produced once: a vertex joins the extension only through the first set
// member it is adjacent to, and never if it already borders the set.
void ExtendFrom(const Graph& graph, Vertex root, VertexMask current,
                VertexMask extension, VertexMask closed_neighborhood,
                std::vector<VertexMask>& out) {
  out.push_back(current);
  const VertexMask allowed = graph.all_vertices() & ~LowMask(root + 1);
  while (extension != 0) {
    const Vertex w = std::countr_zero(extension);
    extension &= extension - 1;
    const VertexMask exclusive =
        graph.neighbors(w) & allowed & ~closed_neighborhood;
    ExtendFrom(graph, root, current | Bit(w), extension | exclusive,
               closed_neighborhood | exclusive, out);
  }
}

bool CanonicalLess(const ConnectedSet& a, const ConnectedSet& b) {
  const Vertex amin = a.min_vertex();
  const Vertex bmin = b.min_vertex();
  if (amin != bmin) return amin < bmin;
  if (a.size != b.size) return a.size < b.size;
  // Lexicographic on ascending member lists: the first differing position
  // is the lowest bit of the symmetric difference.
  const VertexMask diff = a.members ^ b.members;
  if (diff == 0) return false;
  return (a.members & diff & (~diff + 1)) != 0;
}

}  // namespace

std::vector<ConnectedSet> EnumerateConnectedSets(const Graph& graph, int cap) {
  const int n = graph.vertex_count();
  std::vector<ConnectedSet> sets;
  if (graph.is_path()) {
    sets.reserve(n * (n + 1) / 2);
    for (Vertex lo = 0; lo < n; ++lo) {
      for (Vertex hi = lo; hi < n; ++hi) sets.push_back(MakeInterval(lo, hi));
    }
    return sets;
  }
  if (n > cap) {
    throw Error("connected-set enumeration refused: general graph has " +
                std::to_string(n) + " vertices, above the cap of " +
                std::to_string(cap));
  }
  std::vector<VertexMask> masks;
  for (Vertex root = 0; root < n; ++root) {
    const VertexMask later = graph.all_vertices() & ~LowMask(root + 1);
    const VertexMask extension = graph.neighbors(root) & later;
    ExtendFrom(graph, root, Bit(root), extension, Bit(root) | extension,
               masks);
  }
  sets.reserve(masks.size());
  for (VertexMask m : masks) {
    ConnectedSet s;
    s.members = m;
    s.size = std::popcount(m);
    sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), CanonicalLess);
  return sets;
}

bool Intersects(const ConnectedSet& a, const ConnectedSet& b) {
  if (a.interval && b.interval) {
    return a.interval->first <= b.interval->second &&
           b.interval->first <= a.interval->second;
  }
  return (a.members & b.members) != 0;
}

bool Contains(const ConnectedSet& outer, const ConnectedSet& inner) {
  if (outer.interval && inner.interval) {
    return outer.interval->first <= inner.interval->first &&
           inner.interval->second <= outer.interval->second;
  }
  return (outer.members & inner.members) == inner.members;
}

int DifferenceSize(const ConnectedSet& a, const ConnectedSet& b) {
  if (a.interval && b.interval) {
    const auto [alo, ahi] = *a.interval;
    const auto [blo, bhi] = *b.interval;
    const int overlap = std::max(0, std::min(ahi, bhi) - std::max(alo, blo) + 1);
    return a.size - overlap;
  }
  return std::popcount(a.members & ~b.members);
}

PartialColoring::PartialColoring(int color_count, std::vector<Color> assignment)
    : color_count_(color_count), assignment_(std::move(assignment)) {
  if (color_count < 1) throw Error("color count must be positive");
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    if (assignment_[v] < 0 || assignment_[v] > color_count) {
      throw Error("vertex " + std::to_string(v + 1) + " has color " +
                  std::to_string(assignment_[v]) + " outside 1.." +
                  std::to_string(color_count));
    }
  }
}

PartialColoring PartialColoring::Uncolored(int vertex_count, int color_count) {
  return PartialColoring(color_count, std::vector<Color>(vertex_count, kNoColor));
}

VertexMask PartialColoring::ColorClass(Color c) const {
  VertexMask mask = 0;
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    if (assignment_[v] == c) mask |= Bit(static_cast<Vertex>(v));
  }
  return mask;
}

Instance::Instance(Graph graph, PartialColoring coloring,
                   std::vector<Rational> weights)
    : graph_(std::move(graph)),
      coloring_(std::move(coloring)),
      weights_(std::move(weights)) {
  const int n = graph_.vertex_count();
  if (coloring_.vertex_count() != n) {
    throw Error("coloring has " + std::to_string(coloring_.vertex_count()) +
                " entries for " + std::to_string(n) + " vertices");
  }
  if (static_cast<int>(weights_.size()) != n) {
    throw Error("weights have " + std::to_string(weights_.size()) +
                " entries for " + std::to_string(n) + " vertices");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (weights_[v] < 0) {
      throw Error("vertex " + std::to_string(v + 1) + " has negative weight");
    }
    if (coloring_[v] == kNoColor && weights_[v] != 0) {
      throw Error("uncolored vertex " + std::to_string(v + 1) +
                  " has nonzero weight " + crsolve::ToString(weights_[v]) +
                  "; uncolored vertices must weigh 0");
    }
  }
}

Instance Instance::UnitWeights(Graph graph, PartialColoring coloring) {
  std::vector<Rational> weights(graph.vertex_count());
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    weights[v] = coloring[v] == kNoColor ? 0 : 1;
  }
  return Instance(std::move(graph), std::move(coloring), std::move(weights));
}

Rational Instance::VertexColorWeight(Vertex v, Color c) const {
  return coloring_[v] == c ? weights_[v] : Rational(0);
}

Rational Instance::TotalWeight() const {
  Rational total = 0;
  for (const Rational& w : weights_) total += w;
  return total;
}

bool Instance::HasSmallIntegerWeights() const {
  for (const Rational& w : weights_) {
    if (denominator(w) != 1 || w > 1000000) return false;
  }
  return true;
}

bool IsConvex(const Graph& graph, const PartialColoring& coloring) {
  for (Color c = 1; c <= coloring.color_count(); ++c) {
    const VertexMask cls = coloring.ColorClass(c);
    if (cls != 0 && !graph.InducesConnected(cls)) return false;
  }
  return true;
}

Rational RecoloredWeight(const Instance& instance,
                         const PartialColoring& recoloring) {
  Rational total = 0;
  for (Vertex v = 0; v < instance.vertex_count(); ++v) {
    const Color original = instance.coloring()[v];
    if (original != kNoColor && original != recoloring[v]) {
      total += instance.weights()[v];
    }
  }
  return total;
}

Rational KeptWeight(const Instance& instance, const PartialColoring& recoloring) {
  Rational total = 0;
  for (Vertex v = 0; v < instance.vertex_count(); ++v) {
    const Color original = instance.coloring()[v];
    if (original != kNoColor && original == recoloring[v]) {
      total += instance.weights()[v];
    }
  }
  return total;
}

}  // namespace crsolve
