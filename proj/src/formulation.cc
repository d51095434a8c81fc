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

#include "crsolve/formulation.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace crsolve {

bool Point::IsIntegral(double tol) const {
  return std::all_of(values.begin(), values.end(), [tol](double v) {
    return std::abs(v) <= tol || std::abs(v - 1.0) <= tol;
  });
}

std::vector<int> Point::Support() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > 0.5) out.push_back(i);
  }
  return out;
}

Model::Model(Instance instance, std::vector<ConnectedSet> sets)
    : instance_(std::move(instance)),
      sets_(std::move(sets)),
      color_count_(instance_.color_count()),
      singleton_sets_(instance_.vertex_count(), -1) {
  set_index_.reserve(sets_.size());
  for (int i = 0; i < set_count(); ++i) {
    set_index_.emplace(sets_[i].members, i);
    if (sets_[i].size == 1) singleton_sets_[sets_[i].min_vertex()] = i;
  }
  whole_graph_set_ = FindSet(graph().all_vertices());
  BuildBaseRows();
}

void Model::BuildBaseRows() {
  const int n = graph().vertex_count();
  base_rows_.assign(n + color_count_, LinearConstraint{{}, 1});
  for (int s = 0; s < set_count(); ++s) {
    for (Color c = 1; c <= color_count_; ++c) {
      const int flat = FlatIndex({s, c});
      for (VertexMask m = sets_[s].members; m != 0; m &= m - 1) {
        base_rows_[std::countr_zero(m)].terms.emplace_back(flat, 1);
      }
      base_rows_[n + c - 1].terms.emplace_back(flat, 1);
    }
  }
}

int Model::FindSet(VertexMask members) const {
  auto it = set_index_.find(members);
  return it == set_index_.end() ? -1 : it->second;
}

Rational Model::ObjectiveCoefficient(int flat) const {
  auto it = std::lower_bound(
      objective_.begin(), objective_.end(), flat,
      [](const std::pair<int, Rational>& e, int f) { return e.first < f; });
  if (it != objective_.end() && it->first == flat) return it->second;
  return 0;
}

Rational Model::ObjectiveValue(std::span<const int> active) const {
  Rational total = 0;
  for (int flat : active) total += ObjectiveCoefficient(flat);
  return total;
}

double Model::ObjectiveValue(const Point& point) const {
  double total = 0.0;
  for (const auto& [flat, coef] : objective_) {
    total += ToDouble(coef) * point.values[flat];
  }
  return total;
}

std::string Model::VarName(int flat) const {
  const VarId var = Var(flat);
  const ConnectedSet& s = sets_[var.set_index];
  std::ostringstream out;
  if (s.interval) {
    out << "x_H" << s.interval->first + 1 << "_" << s.interval->second + 1
        << "_c" << var.color;
  } else {
    out << "x_s" << var.set_index << "_c" << var.color;
  }
  return out.str();
}

Model BuildModel(const Instance& instance, int cap) {
  if (instance.color_count() < 2) {
    throw Error("the model needs at least 2 colors, got " +
                std::to_string(instance.color_count()));
  }
  Model model(instance, EnumerateConnectedSets(instance.graph(), cap));
  model.objective_source_ = ObjectiveSource::kRecoloring;
  for (int s = 0; s < model.set_count(); ++s) {
    for (Color c = 1; c <= model.color_count(); ++c) {
      Rational w = 0;
      for (Vertex v : model.set(s).Vertices()) {
        w += instance.VertexColorWeight(v, c);
      }
      if (w != 0) model.objective_.emplace_back(model.FlatIndex({s, c}), w);
    }
  }
  return model;
}

Model BuildModelWithGains(const Instance& instance,
                          const std::vector<std::vector<Rational>>& gains) {
  const int n = instance.vertex_count();
  const int k = instance.color_count();
  if (static_cast<int>(gains.size()) != k) {
    throw Error("gain matrix has " + std::to_string(gains.size()) +
                " rows for " + std::to_string(k) + " colors");
  }
  for (const auto& row : gains) {
    if (static_cast<int>(row.size()) != n) {
      throw Error("gain matrix row has " + std::to_string(row.size()) +
                  " entries for " + std::to_string(n) + " vertices");
    }
  }
  Model model(instance, EnumerateConnectedSets(instance.graph()));
  model.objective_source_ = ObjectiveSource::kGains;
  for (int s = 0; s < model.set_count(); ++s) {
    for (Color c = 1; c <= k; ++c) {
      Rational w = 0;
      for (Vertex v : model.set(s).Vertices()) w += gains[c - 1][v];
      if (w != 0) model.objective_.emplace_back(model.FlatIndex({s, c}), w);
    }
  }
  return model;
}

Point Chi(const Model& model, const PartialColoring& coloring) {
  if (coloring.vertex_count() != model.graph().vertex_count() ||
      coloring.color_count() != model.color_count()) {
    throw Error("coloring does not match the model dimensions");
  }
  if (!IsConvex(model.graph(), coloring)) {
    throw Error("coloring is not convex; chi is defined for convex colorings");
  }
  Point point = model.ZeroPoint();
  for (Color c = 1; c <= model.color_count(); ++c) {
    const VertexMask cls = coloring.ColorClass(c);
    if (cls == 0) continue;
    const int s = model.FindSet(cls);
    if (s < 0) throw Error("color class is missing from the enumerated sets");
    point.values[model.FlatIndex({s, c})] = 1.0;
  }
  return point;
}

PartialColoring Decode(const Model& model, const Point& point) {
  if (static_cast<int>(point.values.size()) != model.var_count()) {
    throw Error("point has " + std::to_string(point.values.size()) +
                " entries, model has " + std::to_string(model.var_count()));
  }
  for (int i = 0; i < model.var_count(); ++i) {
    const double v = point.values[i];
    if (std::abs(v) > kIntegralityTolerance &&
        std::abs(v - 1.0) > kIntegralityTolerance) {
      throw Error("point is fractional at " + model.VarName(i) + " = " +
                  std::to_string(v));
    }
  }
  const int n = model.graph().vertex_count();
  for (std::size_t r = 0; r < model.base_rows().size(); ++r) {
    int lhs = 0;
    for (const auto& [flat, coef] : model.base_rows()[r].terms) {
      if (point.values[flat] > 0.5) lhs += static_cast<int>(coef);
    }
    if (lhs > 1) {
      const int row = static_cast<int>(r);
      throw Error(row < n ? "point violates the vertex row of vertex " +
                                std::to_string(row + 1)
                          : "point violates the color row of color " +
                                std::to_string(row - n + 1));
    }
  }
  std::vector<Color> assignment(n, kNoColor);
  for (int flat : point.Support()) {
    const VarId var = model.Var(flat);
    for (Vertex v : model.set(var.set_index).Vertices()) {
      assignment[v] = var.color;
    }
  }
  return PartialColoring(model.color_count(), std::move(assignment));
}

PartialColoring ExtendToTotal(const Graph& graph,
                              const PartialColoring& coloring) {
  std::vector<Color> assignment = coloring.assignment();
  const int n = graph.vertex_count();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (assignment[v] != kNoColor) continue;
      Color best = kNoColor;
      for (VertexMask m = graph.neighbors(v); m != 0; m &= m - 1) {
        const Color c = assignment[std::countr_zero(m)];
        if (c != kNoColor && (best == kNoColor || c < best)) best = c;
      }
      if (best != kNoColor) {
        assignment[v] = best;
        changed = true;
      }
    }
  }
  // Only reachable when nothing was colored: the graph is connected.
  if (std::find(assignment.begin(), assignment.end(), kNoColor) !=
      assignment.end()) {
    std::fill(assignment.begin(), assignment.end(), Color{1});
  }
  return PartialColoring(coloring.color_count(), std::move(assignment));
}

Rational KeptToRecolored(const Instance& instance, const Rational& kept_value) {
  return instance.TotalWeight() - kept_value;
}

std::string DumpLp(const Model& model, std::span<const LinearConstraint> rows,
                   std::span<const std::string> comments) {
  std::ostringstream out;
  out << "\\ " << model.var_count() << " variables, " << rows.size()
      << " rows\n";
  out << "Maximize\n obj:";
  if (model.objective().empty()) out << " 0";
  for (const auto& [flat, coef] : model.objective()) {
    out << " + " << coef << " " << model.VarName(flat);
  }
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r < comments.size() && !comments[r].empty()) {
      out << "\\ " << comments[r] << "\n";
    }
    out << " r" << r << ":";
    for (const auto& [flat, coef] : rows[r].terms) {
      out << " + ";
      if (coef != 1) out << coef << " ";
      out << model.VarName(flat);
    }
    out << " <= " << rows[r].rhs << "\n";
  }
  out << "Binary\n";
  for (int i = 0; i < model.var_count(); ++i) out << " " << model.VarName(i) << "\n";
  out << "End\n";
  return out.str();
}

}  // namespace crsolve
