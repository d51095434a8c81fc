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

// Bounded-variable primal simplex for
//
//   max c.x  s.t.  A x <= b,  lo <= x <= up   (default bounds [0, 1]).
//
// The basis inverse is kept explicitly as a dense matrix and updated by
// product-form pivots; columns of A are sparse. A composite phase 1 restores
// feasibility when a warm-started basis becomes infeasible after rows are
// appended or bounds are tightened, so the solver can be re-solved in place
// by cutting-plane loops and branch-and-bound.

#ifndef CRSOLVE_LP_H_
#define CRSOLVE_LP_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crsolve {

struct SparseRow {
  std::vector<std::pair<int, double>> terms;
  double rhs = 0.0;
};

struct LinearProgram {
  int var_count = 0;
  std::vector<std::pair<int, double>> objective;
  std::vector<SparseRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kIterationLimit };

const char* LpStatusName(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kOptimal;
  double value = 0.0;
  std::vector<double> primal;
  std::int64_t iterations = 0;
};

struct SimplexOptions {
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-9;
  double pivot_tolerance = 1e-9;
  // Pivots between refactorizations of the basis inverse.
  int refactor_interval = 100;
  // Iteration limit is iteration_limit_factor * (rows + vars).
  int iteration_limit_factor = 50;
  // Bland's rule replaces Dantzig pricing after this many * (rows + vars)
  // consecutive degenerate pivots.
  int degenerate_factor = 5;
};

class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp, SimplexOptions options = {});
  ~SimplexSolver();
  SimplexSolver(SimplexSolver&&) noexcept;
  SimplexSolver& operator=(SimplexSolver&&) noexcept;

  int var_count() const;
  int row_count() const;

  // New rows enter with their slack basic; the current basis is kept.
  void AddRows(std::span<const SparseRow> rows);
  void SetBounds(int var, double lower, double upper);
  std::pair<double, double> Bounds(int var) const;

  // Solves from the current basis.
  LpOutcome Solve();

  // Counters of the last Solve().
  std::int64_t phase1_iterations() const;
  bool used_bland() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot solve from the slack basis.
LpOutcome SolveLp(const LinearProgram& lp, SimplexOptions options = {});

// Largest violation of a row or a [0,1] bound by `x`.
double MaxViolation(const LinearProgram& lp, std::span<const double> x);

}  // namespace crsolve

#endif  // CRSOLVE_LP_H_
