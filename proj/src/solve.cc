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

#include "crsolve/solve.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace crsolve {

const char* RelaxationLevelName(RelaxationLevel level) {
  switch (level) {
    case RelaxationLevel::kLp0:
      return "lp0";
    case RelaxationLevel::kLp1:
      return "lp1";
    case RelaxationLevel::kLp1Plus:
      return "lp1plus";
  }
  return "lp0";
}

const char* CutModeName(CutMode mode) {
  return mode == CutMode::kUpfront ? "upfront" : "separated";
}

RelaxationLevel ParseRelaxationLevel(const std::string& name) {
  if (name == "lp0") return RelaxationLevel::kLp0;
  if (name == "lp1") return RelaxationLevel::kLp1;
  if (name == "lp1plus") return RelaxationLevel::kLp1Plus;
  throw Error("unknown relaxation level '" + name + "' (lp0|lp1|lp1plus)");
}

CutMode ParseCutMode(const std::string& name) {
  if (name == "upfront") return CutMode::kUpfront;
  if (name == "separated") return CutMode::kSeparated;
  throw Error("unknown cut mode '" + name + "' (upfront|separated)");
}

std::vector<Cut> InitialRows(const Model& model, RelaxationLevel level,
                             CutMode mode) {
  std::vector<Cut> rows;
  const int n = model.graph().vertex_count();
  // A binary cut on a single vertex is the vertex row whatever its color.
  for (Vertex v = 0; v < n; ++v) rows.push_back(VertexRowCut(model, v));
  const bool all_binary = level != RelaxationLevel::kLp0 && mode == CutMode::kUpfront;
  for (int s = 0; s < model.set_count(); ++s) {
    const ConnectedSet& h = model.set(s);
    if (h.size == 1) continue;
    if (!all_binary && s != model.whole_graph_set()) continue;
    for (Color c = 1; c <= model.color_count(); ++c) {
      rows.push_back(BuildClass5(model, s, c));
    }
  }
  return rows;
}

LinearProgram MakeLinearProgram(const Model& model, std::span<const Cut> rows) {
  LinearProgram lp;
  lp.var_count = model.var_count();
  for (const auto& [flat, coef] : model.objective()) {
    lp.objective.emplace_back(flat, ToDouble(coef));
  }
  lp.rows.reserve(rows.size());
  for (const Cut& cut : rows) {
    SparseRow row;
    row.rhs = static_cast<double>(cut.row.rhs);
    row.terms.reserve(cut.row.terms.size());
    for (const auto& [flat, coef] : cut.row.terms) {
      row.terms.emplace_back(flat, static_cast<double>(coef));
    }
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

namespace {

std::vector<SparseRow> ToSparseRows(const Model& model, std::span<const Cut> cuts) {
  return MakeLinearProgram(model, cuts).rows;
}

struct Relaxation {
  RelaxationResult result;
  SimplexSolver solver;
};

Relaxation RunRelaxation(const Model& model, RelaxationLevel level,
                         const RelaxationOptions& options) {
  std::vector<Cut> rows = InitialRows(model, level, options.mode);
  CutPool pool;
  for (const Cut& cut : rows) pool.Add(cut);
  Relaxation relax{RelaxationResult{}, SimplexSolver(MakeLinearProgram(model, rows))};
  RelaxationResult& result = relax.result;
  result.lp = relax.solver.Solve();
  result.lp_iterations = result.lp.iterations;

  const bool separate5 = level != RelaxationLevel::kLp0 && options.mode == CutMode::kSeparated;
  const bool separate6 = level == RelaxationLevel::kLp1Plus;
  SeparationOptions separation = options.separation;
  separation.class6_full_validity_regime = options.class6_full_validity_regime;
  while ((separate5 || separate6) && result.lp.status == LpStatus::kOptimal) {
    const Point x{result.lp.primal};
    std::vector<Cut> fresh;
    if (separate5) {
      for (SeparatedCut& sc : SeparateClass5(model, x, separation)) {
        if (pool.Add(sc.cut)) fresh.push_back(std::move(sc.cut));
      }
    }
    // Generalized cuts only once the binary family is exhausted, so LP1plus
    // is always measured against the full LP1 bound.
    if (separate6 && fresh.empty()) {
      for (SeparatedCut& sc : SeparateClass6(model, x, separation)) {
        if (pool.Add(sc.cut)) fresh.push_back(std::move(sc.cut));
      }
    }
    if (fresh.empty()) {
      if (separation.tolerance > options.final_tolerance) {
        separation.tolerance = options.final_tolerance;
        continue;
      }
      break;
    }
    if (result.rounds >= options.round_limit) {
      result.round_limit_hit = true;
      break;
    }
    relax.solver.AddRows(ToSparseRows(model, fresh));
    rows.insert(rows.end(), std::make_move_iterator(fresh.begin()),
                std::make_move_iterator(fresh.end()));
    result.lp = relax.solver.Solve();
    result.lp_iterations += result.lp.iterations;
    ++result.rounds;
  }
  result.rows = std::move(rows);
  return relax;
}

}  // namespace

RelaxationResult SolveRelaxation(const Model& model, RelaxationLevel level,
                                 const RelaxationOptions& options) {
  return RunRelaxation(model, level, options).result;
}

namespace {

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

struct Node {
  std::vector<std::pair<int, int>> fixings;  // (flat, 0 or 1)
};

}  // namespace

SolveReport BranchAndBound(const Model& model, RelaxationLevel level,
                           const BranchAndBoundOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Relaxation relax = RunRelaxation(model, level, options.relaxation);
  SimplexSolver& solver = relax.solver;
  if (relax.result.lp.status != LpStatus::kOptimal) {
    throw Error(std::string("root relaxation ended with status ") +
                LpStatusName(relax.result.lp.status));
  }

  SolveReport report;
  report.root_lp_value = relax.result.lp.value;
  report.cuts_added =
      static_cast<std::int64_t>(relax.result.rows.size()) -
      static_cast<std::int64_t>(
          InitialRows(model, RelaxationLevel::kLp0, CutMode::kSeparated).size());
  report.incumbent = model.ZeroPoint();
  report.opt_value = 0;
  double incumbent_value = 0.0;

  std::vector<Node> stack;
  stack.push_back(Node{});
  std::vector<std::pair<int, int>> applied;
  bool root = true;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (report.nodes_explored >= options.node_limit) {
      throw Error("branch-and-bound node limit of " +
                  std::to_string(options.node_limit) + " reached");
    }
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
      throw TimeLimitError("time limit reached during branch-and-bound");
    }
    ++report.nodes_explored;

    for (const auto& [flat, value] : applied) solver.SetBounds(flat, 0.0, 1.0);
    for (const auto& [flat, value] : node.fixings) {
      solver.SetBounds(flat, value, value);
    }
    applied = node.fixings;

    LpOutcome lp = root ? relax.result.lp : solver.Solve();
    root = false;
    if (lp.status == LpStatus::kInfeasible) continue;
    if (lp.status != LpStatus::kOptimal) {
      throw Error(std::string("node relaxation ended with status ") +
                  LpStatusName(lp.status));
    }
    if (lp.value <= incumbent_value + 1e-9) continue;

    int branch = -1;
    double most = kIntegralityTolerance;
    for (int j = 0; j < model.var_count(); ++j) {
      const double frac = std::min(lp.primal[j], 1.0 - lp.primal[j]);
      if (frac > most) {
        most = frac;
        branch = j;
      }
    }
    if (branch < 0) {
      Point rounded{std::vector<double>(model.var_count(), 0.0)};
      std::vector<int> active;
      for (int j = 0; j < model.var_count(); ++j) {
        if (lp.primal[j] > 0.5) {
          rounded.values[j] = 1.0;
          active.push_back(j);
        }
      }
      const Rational value = model.ObjectiveValue(active);
      if (value > report.opt_value) {
        report.opt_value = value;
        report.incumbent = std::move(rounded);
        incumbent_value = ToDouble(value);
      }
      continue;
    }
    Node up = node;
    up.fixings.emplace_back(branch, 1);
    node.fixings.emplace_back(branch, 0);
    stack.push_back(std::move(up));
    stack.push_back(std::move(node));
  }
  report.wall_time = Seconds(start);
  return report;
}

std::string SolveReportCsvHeader() {
  return "opt_value,nodes_explored,cuts_added,root_lp_value,wall_time,incumbent";
}

std::string SolveReportToCsv(const SolveReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << ToDouble(report.opt_value) << ","
      << report.nodes_explored << "," << report.cuts_added << ","
      << report.root_lp_value << "," << report.wall_time << ",";
  bool first = true;
  for (int flat : report.incumbent.Support()) {
    out << (first ? "" : ";") << flat;
    first = false;
  }
  return out.str();
}

std::string SolveReportToJson(const Model& model, const SolveReport& report) {
  nlohmann::json j;
  j["opt_value"] = ToString(report.opt_value);
  j["opt_value_float"] = ToDouble(report.opt_value);
  j["nodes_explored"] = report.nodes_explored;
  j["cuts_added"] = report.cuts_added;
  j["root_lp_value"] = report.root_lp_value;
  j["wall_time"] = report.wall_time;
  nlohmann::json incumbent = nlohmann::json::array();
  for (int flat : report.incumbent.Support()) incumbent.push_back(model.VarName(flat));
  j["incumbent"] = incumbent;
  return j.dump();
}

std::string SolveReportToJson(const Instance& instance, const Model& model,
                              const SolveReport& report) {
  nlohmann::json j = nlohmann::json::parse(SolveReportToJson(model, report));
  j["recolored_weight"] = ToString(KeptToRecolored(instance, report.opt_value));
  const PartialColoring total = ExtendToTotal(model.graph(), Decode(model, report.incumbent));
  nlohmann::json colors = nlohmann::json::array();
  for (Color c : total.assignment()) {
    colors.push_back(c == kNoColor ? nlohmann::json(nullptr) : nlohmann::json(c));
  }
  j["coloring"] = colors;
  return j.dump();
}

}  // namespace crsolve
