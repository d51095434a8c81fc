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

#ifndef CRSOLVE_SOLVE_H_
#define CRSOLVE_SOLVE_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crsolve/common.h"
#include "crsolve/cuts.h"
#include "crsolve/formulation.h"
#include "crsolve/lp.h"

namespace crsolve {

// LP0: vertex rows plus binary cuts for H = V(G), all colors.
// LP1: binary cuts for every (H, c).
// LP1plus: LP1 plus separated generalized cuts.
enum class RelaxationLevel { kLp0, kLp1, kLp1Plus };
enum class CutMode { kUpfront, kSeparated };

const char* RelaxationLevelName(RelaxationLevel level);
const char* CutModeName(CutMode mode);
RelaxationLevel ParseRelaxationLevel(const std::string& name);
CutMode ParseCutMode(const std::string& name);

// Rows that are always present at a level: for LP0 all of them, for LP1 in
// upfront mode all binary cuts, otherwise the LP0 rows.
std::vector<Cut> InitialRows(const Model& model, RelaxationLevel level,
                             CutMode mode);

LinearProgram MakeLinearProgram(const Model& model, std::span<const Cut> rows);

struct RelaxationOptions {
  CutMode mode = CutMode::kSeparated;
  int round_limit = 50;
  SeparationOptions separation;
  // Separation rounds continue at this tolerance once no cut beats
  // separation.tolerance, so both modes reach the same optimum.
  double final_tolerance = 1e-9;
  // Generalized cuts for LP1plus use the wider validity regime.
  bool class6_full_validity_regime = false;
};

struct RelaxationResult {
  LpOutcome lp;
  std::vector<Cut> rows;  // final row set
  int rounds = 0;
  bool round_limit_hit = false;
  std::int64_t lp_iterations = 0;
};

RelaxationResult SolveRelaxation(const Model& model, RelaxationLevel level,
                                 const RelaxationOptions& options = {});

struct SolveReport {
  Rational opt_value = 0;
  Point incumbent;
  std::int64_t nodes_explored = 0;
  std::int64_t cuts_added = 0;
  double root_lp_value = 0.0;
  double wall_time = 0.0;  // seconds
};

struct BranchAndBoundOptions {
  std::int64_t node_limit = 1000000;
  RelaxationOptions relaxation;
  // Throws TimeLimitError once passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class TimeLimitError : public Error {
 public:
  using Error::Error;
};

// Cut-and-branch: the relaxation of `level` is built at the root, then
// depth-first branching on the most fractional variable (down branch first).
// Throws Error if the node limit is reached.
SolveReport BranchAndBound(const Model& model, RelaxationLevel level,
                           const BranchAndBoundOptions& options = {});

std::string SolveReportCsvHeader();
std::string SolveReportToCsv(const SolveReport& report);
std::string SolveReportToJson(const Model& model, const SolveReport& report);
// Adds the recolored weight and the optimal total coloring.
std::string SolveReportToJson(const Instance& instance, const Model& model,
                              const SolveReport& report);

// Per-vertex, per-color gains that define an objective independently of any
// Model: gains[c-1][v].
using GainTable = std::vector<std::vector<Rational>>;
GainTable RecoloringGains(const Instance& instance);

// Exact maximum of the kept weight (or total gain) over all assignments of
// distinct colors to pairwise disjoint connected sets.
//
// Paths: dynamic program over (prefix length, used color subset); n <= 16,
// k <= 12. Other graphs: exhaustive search with bound pruning; trees need
// n <= 16 and k <= 12, general graphs eta * k <= 60.
Rational OracleOpt(const Instance& instance);
Rational OracleOpt(const Graph& graph, const GainTable& gains);
// The two independent routes, exposed so they can be checked against each
// other.
Rational OraclePathDp(int n, const GainTable& gains);
Rational OracleExhaustive(const Graph& graph, const GainTable& gains);

// Calls `visit` with the active flat indices of every integral feasible
// point, each exactly once. Guard: eta * k <= 60, or a path with n <= 10 and
// k <= 5.
void EnumerateIntegralPoints(const Model& model,
                             const std::function<void(std::span<const int>)>& visit);
std::vector<Point> IntegralPoints(const Model& model);

// True iff the row holds at every integral feasible point.
bool VerifyInequality(const Model& model, const LinearConstraint& row);

// Dimension of the face {x in P : row tight}, by exact rank of differences
// of tight integral points; -1 when no point is tight. The all-zero row with
// rhs 0 yields dim P.
int FaceDimension(const Model& model, const LinearConstraint& row);

// -x_{H,c} <= 0.
LinearConstraint NonnegativityRow(const Model& model, int flat);

}  // namespace crsolve

#endif  // CRSOLVE_SOLVE_H_
