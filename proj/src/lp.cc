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

#include "crsolve/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "crsolve/common.h"

namespace crsolve {

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSnap = 1e-9;
}  // namespace

class SimplexSolver::Impl {
 public:
  Impl(const LinearProgram& lp, SimplexOptions options)
      : options_(options), n_(lp.var_count) {
    if (n_ < 0) throw Error("negative variable count");
    columns_.resize(n_);
    cost_.assign(n_, 0.0);
    lower_.assign(n_, 0.0);
    upper_.assign(n_, 1.0);
    at_upper_.assign(n_, false);
    position_.assign(n_, -1);
    for (const auto& [j, c] : lp.objective) {
      CheckIndex(j);
      if (!std::isfinite(c)) throw Error("non-finite objective coefficient");
      cost_[j] += c;
    }
    AddRows(lp.rows);
  }

  int var_count() const { return n_; }
  int row_count() const { return static_cast<int>(rhs_.size()); }

  void AddRows(std::span<const SparseRow> rows) {
    if (rows.empty()) return;
    const int old_m = row_count();
    const int new_m = old_m + static_cast<int>(rows.size());
    // Row coefficients of the new rows on the current basic variables, by
    // basis position: needed to extend the inverse in place.
    Eigen::MatrixXd basic_coefs = Eigen::MatrixXd::Zero(rows.size(), old_m);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int i = old_m + static_cast<int>(r);
      if (!std::isfinite(rows[r].rhs)) throw Error("non-finite right-hand side");
      rhs_.push_back(rows[r].rhs);
      for (const auto& [j, a] : rows[r].terms) {
        CheckIndex(j);
        if (!std::isfinite(a)) throw Error("non-finite row coefficient");
        if (a == 0.0) continue;
        columns_[j].emplace_back(i, a);
        if (position_[j] >= 0) basic_coefs(r, position_[j]) += a;
      }
      cost_.push_back(0.0);
      lower_.push_back(0.0);
      upper_.push_back(kInf);
      at_upper_.push_back(false);
      position_.push_back(i);
      basis_.push_back(n_ + i);
    }
    Eigen::MatrixXd grown = Eigen::MatrixXd::Identity(new_m, new_m);
    if (old_m > 0) {
      grown.topLeftCorner(old_m, old_m) = inverse_;
      grown.bottomLeftCorner(new_m - old_m, old_m) = -basic_coefs * inverse_;
    }
    inverse_ = std::move(grown);
    basic_values_.resize(new_m);
  }

  void SetBounds(int var, double lower, double upper) {
    CheckIndex(var);
    if (!(lower <= upper) || !std::isfinite(lower) || !std::isfinite(upper)) {
      throw Error("invalid bounds for variable " + std::to_string(var));
    }
    lower_[var] = lower;
    upper_[var] = upper;
    if (position_[var] < 0 && lower == upper) at_upper_[var] = false;
  }

  std::pair<double, double> Bounds(int var) const {
    return {lower_[var], upper_[var]};
  }

  std::int64_t phase1_iterations() const { return phase1_iterations_; }
  bool used_bland() const { return bland_; }

  LpOutcome Solve() {
    const int m = row_count();
    const std::int64_t limit =
        static_cast<std::int64_t>(options_.iteration_limit_factor) * (m + n_);
    const std::int64_t degenerate_limit =
        static_cast<std::int64_t>(options_.degenerate_factor) * (m + n_);
    std::int64_t iterations = 0;
    std::int64_t degenerate_run = 0;
    int since_refactor = 0;
    phase1_iterations_ = 0;
    bland_ = false;
    Refactor();

    LpOutcome outcome;
    while (true) {
      if (since_refactor >= options_.refactor_interval) {
        Refactor();
        since_refactor = 0;
      }
      const bool phase1 = !PrimalFeasible();
      const Pricing price = Price(phase1);
      if (price.entering < 0) {
        // Confirm on a fresh factorization before concluding.
        if (since_refactor > 0) {
          Refactor();
          since_refactor = 0;
          continue;
        }
        outcome.status = phase1 ? LpStatus::kInfeasible : LpStatus::kOptimal;
        break;
      }
      if (iterations >= limit) {
        outcome.status = LpStatus::kIterationLimit;
        break;
      }
      const double step = Pivot(price, phase1);
      ++iterations;
      ++since_refactor;
      if (phase1) ++phase1_iterations_;
      degenerate_run = step <= 1e-12 ? degenerate_run + 1 : 0;
      if (degenerate_run >= degenerate_limit) bland_ = true;
    }
    outcome.iterations = iterations;
    outcome.primal = Primal();
    outcome.value = 0.0;
    for (int j = 0; j < n_; ++j) outcome.value += cost_[j] * outcome.primal[j];
    return outcome;
  }

 private:
  struct Pricing {
    int entering = -1;
    int direction = 0;  // +1 increase from lower, -1 decrease from upper
  };

  void CheckIndex(int j) const {
    if (j < 0 || j >= n_) {
      throw Error("variable index " + std::to_string(j) + " out of range");
    }
  }

  int total_vars() const { return n_ + row_count(); }

  double NonbasicValue(int j) const {
    return at_upper_[j] ? upper_[j] : lower_[j];
  }

  // Column of variable j times the basis inverse.
  Eigen::VectorXd Ftran(int j) const {
    if (j >= n_) return inverse_.col(j - n_);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(row_count());
    for (const auto& [i, a] : columns_[j]) out += a * inverse_.col(i);
    return out;
  }

  double ColumnDot(int j, const Eigen::VectorXd& y) const {
    if (j >= n_) return y[j - n_];
    double s = 0.0;
    for (const auto& [i, a] : columns_[j]) s += a * y[i];
    return s;
  }

  void ResetToSlackBasis() {
    const int m = row_count();
    for (int j = 0; j < total_vars(); ++j) position_[j] = -1;
    for (int i = 0; i < m; ++i) {
      basis_[i] = n_ + i;
      position_[n_ + i] = i;
    }
    for (int j = 0; j < n_; ++j) at_upper_[j] = false;
    inverse_ = Eigen::MatrixXd::Identity(m, m);
  }

  void Refactor() {
    const int m = row_count();
    if (m == 0) {
      return;
    }
    Eigen::MatrixXd basis_matrix = Eigen::MatrixXd::Zero(m, m);
    for (int p = 0; p < m; ++p) {
      const int j = basis_[p];
      if (j >= n_) {
        basis_matrix(j - n_, p) = 1.0;
      } else {
        for (const auto& [i, a] : columns_[j]) basis_matrix(i, p) = a;
      }
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    if (lu.rcond() < 1e-13) {
      ResetToSlackBasis();
    } else {
      inverse_ = lu.inverse();
    }
    RecomputeBasicValues();
  }

  void RecomputeBasicValues() {
    const int m = row_count();
    Eigen::VectorXd residual(m);
    for (int i = 0; i < m; ++i) residual[i] = rhs_[i];
    for (int j = 0; j < n_; ++j) {
      if (position_[j] >= 0) continue;
      const double v = NonbasicValue(j);
      if (v == 0.0) continue;
      for (const auto& [i, a] : columns_[j]) residual[i] -= a * v;
    }
    basic_values_ = inverse_ * residual;
  }

  // Infeasibility of the basic variable in position p: negative below the
  // lower bound, positive above the upper bound, zero inside.
  int InfeasibilitySign(int p) const {
    const int j = basis_[p];
    const double v = basic_values_[p];
    if (v < lower_[j] - options_.feasibility_tolerance) return -1;
    if (v > upper_[j] + options_.feasibility_tolerance) return 1;
    return 0;
  }

  bool PrimalFeasible() const {
    for (int p = 0; p < row_count(); ++p) {
      if (InfeasibilitySign(p) != 0) return false;
    }
    return true;
  }

  Pricing Price(bool phase1) const {
    const int m = row_count();
    Eigen::VectorXd basic_costs(m);
    for (int p = 0; p < m; ++p) {
      // Phase 1 maximizes minus the sum of infeasibilities.
      basic_costs[p] = phase1 ? -static_cast<double>(InfeasibilitySign(p))
                              : (basis_[p] < n_ ? cost_[basis_[p]] : 0.0);
    }
    const Eigen::VectorXd duals = inverse_.transpose() * basic_costs;
    Pricing best;
    double best_score = 0.0;
    for (int j = 0; j < total_vars(); ++j) {
      if (position_[j] >= 0 || lower_[j] == upper_[j]) continue;
      const double own = phase1 ? 0.0 : (j < n_ ? cost_[j] : 0.0);
      const double reduced = own - ColumnDot(j, duals);
      int direction = 0;
      if (!at_upper_[j] && reduced > options_.optimality_tolerance) {
        direction = 1;
      } else if (at_upper_[j] && reduced < -options_.optimality_tolerance) {
        direction = -1;
      }
      if (direction == 0) continue;
      if (bland_) return {j, direction};
      if (std::abs(reduced) > best_score) {
        best_score = std::abs(reduced);
        best = {j, direction};
      }
    }
    return best;
  }

  // Performs one iteration and returns the step length.
  double Pivot(const Pricing& price, bool phase1) {
    const int q = price.entering;
    const int dir = price.direction;
    const Eigen::VectorXd alpha = Ftran(q);
    const int m = row_count();
    const double tol = options_.feasibility_tolerance;

    double best_step = upper_[q] - lower_[q];  // bound flip
    int leaving = -1;
    bool leaves_at_upper = false;
    double best_pivot = 0.0;
    for (int p = 0; p < m; ++p) {
      const double a = alpha[p];
      if (std::abs(a) <= options_.pivot_tolerance) continue;
      const double rate = -dir * a;  // d x_B[p] / d step
      const int j = basis_[p];
      const double v = basic_values_[p];
      double step;
      bool at_upper;
      if (rate < 0) {
        if (phase1 && v > upper_[j] + tol) {
          step = (v - upper_[j]) / -rate;
          at_upper = true;
        } else if (phase1 && v < lower_[j] - tol) {
          continue;
        } else {
          step = std::max(0.0, v - lower_[j]) / -rate;
          at_upper = false;
        }
      } else {
        if (phase1 && v < lower_[j] - tol) {
          step = (lower_[j] - v) / rate;
          at_upper = false;
        } else if (phase1 && v > upper_[j] + tol) {
          continue;
        } else {
          if (upper_[j] == kInf) continue;
          step = std::max(0.0, upper_[j] - v) / rate;
          at_upper = true;
        }
      }
      bool take = false;
      if (step < best_step - 1e-12) {
        take = true;
      } else if (step <= best_step + 1e-12 && leaving >= 0) {
        take = bland_ ? j < basis_[leaving] : std::abs(a) > best_pivot;
      }
      if (take) {
        best_step = step;
        leaving = p;
        leaves_at_upper = at_upper;
        best_pivot = std::abs(a);
      }
    }
    if (best_step == kInf) {
      throw Error("unbounded ray in a bounded linear program");
    }

    const double step = best_step;
    if (step != 0.0) basic_values_ -= (dir * step) * alpha;
    const double entering_value = NonbasicValue(q) + dir * step;
    if (leaving < 0) {
      at_upper_[q] = !at_upper_[q];
      return step;
    }
    const int out = basis_[leaving];
    // Product-form update of the inverse.
    const Eigen::RowVectorXd pivot_row = inverse_.row(leaving) / alpha[leaving];
    Eigen::VectorXd eta = alpha;
    eta[leaving] -= 1.0;
    inverse_.noalias() -= eta * pivot_row;

    basis_[leaving] = q;
    position_[q] = leaving;
    position_[out] = -1;
    at_upper_[out] = leaves_at_upper;
    at_upper_[q] = false;
    basic_values_[leaving] = entering_value;
    return step;
  }

  std::vector<double> Primal() const {
    std::vector<double> x(n_);
    for (int j = 0; j < n_; ++j) {
      double v = position_[j] >= 0 ? basic_values_[position_[j]] : NonbasicValue(j);
      if (std::abs(v - lower_[j]) <= kSnap) v = lower_[j];
      if (std::abs(v - upper_[j]) <= kSnap) v = upper_[j];
      x[j] = v;
    }
    return x;
  }

  SimplexOptions options_;
  int n_;
  std::vector<std::vector<std::pair<int, double>>> columns_;
  std::vector<double> rhs_;
  // Per variable (structurals then slacks).
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<bool> at_upper_;
  std::vector<int> position_;
  // Per basis position.
  std::vector<int> basis_;
  Eigen::VectorXd basic_values_;
  Eigen::MatrixXd inverse_;
  bool bland_ = false;
  std::int64_t phase1_iterations_ = 0;
};

SimplexSolver::SimplexSolver(const LinearProgram& lp, SimplexOptions options)
    : impl_(std::make_unique<Impl>(lp, options)) {}
SimplexSolver::~SimplexSolver() = default;
SimplexSolver::SimplexSolver(SimplexSolver&&) noexcept = default;
SimplexSolver& SimplexSolver::operator=(SimplexSolver&&) noexcept = default;

int SimplexSolver::var_count() const { return impl_->var_count(); }
int SimplexSolver::row_count() const { return impl_->row_count(); }
void SimplexSolver::AddRows(std::span<const SparseRow> rows) {
  impl_->AddRows(rows);
}
void SimplexSolver::SetBounds(int var, double lower, double upper) {
  impl_->SetBounds(var, lower, upper);
}
std::pair<double, double> SimplexSolver::Bounds(int var) const {
  return impl_->Bounds(var);
}
LpOutcome SimplexSolver::Solve() { return impl_->Solve(); }
std::int64_t SimplexSolver::phase1_iterations() const {
  return impl_->phase1_iterations();
}
bool SimplexSolver::used_bland() const { return impl_->used_bland(); }

LpOutcome SolveLp(const LinearProgram& lp, SimplexOptions options) {
  SimplexSolver solver(lp, options);
  return solver.Solve();
}

double MaxViolation(const LinearProgram& lp, std::span<const double> x) {
  double worst = 0.0;
  for (double v : x) worst = std::max({worst, -v, v - 1.0});
  for (const SparseRow& row : lp.rows) {
    double lhs = 0.0;
    for (const auto& [j, a] : row.terms) lhs += a * x[j];
    worst = std::max(worst, lhs - row.rhs);
  }
  return worst;
}

}  // namespace crsolve
