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

// The connected-subgraph model: one binary x_{H,c} per connected set H and
// color c, maximizing kept weight subject to
//   (vertex rows)  sum over H containing v, all c, of x_{H,c} <= 1
//   (color rows)   sum over all H of x_{H,c} <= 1.

#ifndef CRSOLVE_FORMULATION_H_
#define CRSOLVE_FORMULATION_H_

#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "crsolve/common.h"
#include "crsolve/graph.h"

namespace crsolve {

struct VarId {
  int set_index = 0;
  Color color = 1;

  friend bool operator==(const VarId&, const VarId&) = default;
};

// Dense vector of length eta*k indexed by flat variable index.
struct Point {
  std::vector<double> values;

  bool IsIntegral(double tol = kIntegralityTolerance) const;
  // Flat indices whose value exceeds 1/2.
  std::vector<int> Support() const;
};

enum class ObjectiveSource {
  kRecoloring,  // w_{H,c} from the instance weights
  kGains,       // per-(vertex, color) gains supplied by the caller (CAPA)
};

class Model {
 public:
  const Instance& instance() const { return instance_; }
  const Graph& graph() const { return instance_.graph(); }
  const std::vector<ConnectedSet>& sets() const { return sets_; }
  const ConnectedSet& set(int index) const { return sets_[index]; }
  int set_count() const { return static_cast<int>(sets_.size()); }
  int color_count() const { return color_count_; }
  int var_count() const { return set_count() * color_count_; }
  ObjectiveSource objective_source() const { return objective_source_; }

  int FlatIndex(VarId var) const {
    return var.set_index * color_count_ + (var.color - 1);
  }
  VarId Var(int flat) const {
    return {flat / color_count_, flat % color_count_ + 1};
  }
  // Index of the connected set with exactly these members, or -1.
  int FindSet(VertexMask members) const;
  // Connected set consisting of all vertices.
  int whole_graph_set() const { return whole_graph_set_; }
  int singleton_set(Vertex v) const { return singleton_sets_[v]; }

  // Sparse objective sorted by flat index, zero coefficients omitted.
  const std::vector<std::pair<int, Rational>>& objective() const {
    return objective_;
  }
  Rational ObjectiveCoefficient(int flat) const;
  // Objective value of a 0/1 point given by its active flat indices.
  Rational ObjectiveValue(std::span<const int> active) const;
  double ObjectiveValue(const Point& point) const;

  // Vertex rows for v = 0..n-1 followed by color rows for c = 1..k.
  const std::vector<LinearConstraint>& base_rows() const { return base_rows_; }
  const LinearConstraint& vertex_row(Vertex v) const { return base_rows_[v]; }
  const LinearConstraint& color_row(Color c) const {
    return base_rows_[graph().vertex_count() + c - 1];
  }

  // x_H<lo>_<hi>_c<c> on paths (1-based endpoints), x_s<index>_c<c> otherwise.
  std::string VarName(int flat) const;

  Point ZeroPoint() const { return Point{std::vector<double>(var_count(), 0.0)}; }

 private:
  friend Model BuildModel(const Instance&, int);
  friend Model BuildModelWithGains(const Instance&,
                                   const std::vector<std::vector<Rational>>&);
  Model(Instance instance, std::vector<ConnectedSet> sets);
  void BuildBaseRows();

  Instance instance_;
  std::vector<ConnectedSet> sets_;
  int color_count_ = 0;
  ObjectiveSource objective_source_ = ObjectiveSource::kRecoloring;
  std::unordered_map<VertexMask, int> set_index_;
  int whole_graph_set_ = -1;
  std::vector<int> singleton_sets_;
  std::vector<std::pair<int, Rational>> objective_;
  std::vector<LinearConstraint> base_rows_;
};

// Requires k >= 2. Propagates enumeration cap errors.
Model BuildModel(const Instance& instance, int cap = kDefaultEnumerationCap);

// Objective coefficient of (H, c) is the sum over v in H of gains[c-1][v].
// The instance supplies only the graph and the color count.
Model BuildModelWithGains(const Instance& instance,
                          const std::vector<std::vector<Rational>>& gains);

// Incidence vector of a convex partial coloring: (H, c) is 1 iff H is
// exactly the class of c. Throws Error if the coloring is not convex.
Point Chi(const Model& model, const PartialColoring& coloring);

// Inverse of Chi on integral feasible points: every vertex of a chosen H
// gets its color, all other vertices stay uncolored. Throws Error naming the
// offending entry or row for fractional or infeasible points.
PartialColoring Decode(const Model& model, const Point& point);

// Extends a convex partial coloring to a total convex coloring. An uncolored
// vertex adjacent to a colored one takes that color, lowest color first;
// any uncolored component with no colored neighbor gets an unused color if
// one exists. Vertices that cannot be colored convexly stay uncolored.
PartialColoring ExtendToTotal(const Graph& graph,
                              const PartialColoring& coloring);

// (sum of all weights) - kept_value.
Rational KeptToRecolored(const Instance& instance, const Rational& kept_value);

// LP-format-style text of the objective and the given rows.
std::string DumpLp(const Model& model, std::span<const LinearConstraint> rows,
                   std::span<const std::string> comments = {});

}  // namespace crsolve

#endif  // CRSOLVE_FORMULATION_H_
