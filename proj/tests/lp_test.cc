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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "crsolve/solve.h"
#include "dense_tableau.h"
#include "test_util.h"

namespace crsolve {
namespace {

using testing::DenseTableauValue;

LinearProgram RandomLp(std::mt19937_64& rng, int vars, int rows, double density) {
  LinearProgram lp;
  lp.var_count = vars;
  std::uniform_real_distribution<double> coef(0.1, 3.0);
  std::uniform_real_distribution<double> obj(-1.0, 4.0);
  std::bernoulli_distribution keep(density);
  for (int j = 0; j < vars; ++j) lp.objective.emplace_back(j, obj(rng));
  for (int r = 0; r < rows; ++r) {
    SparseRow row;
    for (int j = 0; j < vars; ++j) {
      if (keep(rng)) row.terms.emplace_back(j, coef(rng));
    }
    row.rhs = std::uniform_real_distribution<double>(0.5, 4.0)(rng);
    lp.rows.push_back(row);
  }
  return lp;
}

// Base relaxation: vertex rows and color rows only.
LinearProgram BaseLp(const Model& model) {
  std::vector<Cut> rows;
  for (Vertex v = 0; v < model.graph().vertex_count(); ++v) rows.push_back(VertexRowCut(model, v));
  for (Color c = 1; c <= model.color_count(); ++c) rows.push_back(ColorRowCut(model, c));
  return MakeLinearProgram(model, rows);
}

TEST(LpTest, SingleVariable) {
  LinearProgram lp;
  lp.var_count = 1;
  lp.objective = {{0, 1.0}};
  lp.rows = {SparseRow{{{0, 1.0}}, 1.0}};
  const LpOutcome out = SolveLp(lp);
  EXPECT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_NEAR(out.value, 1.0, 1e-12);
  EXPECT_NEAR(DenseTableauValue(lp), 1.0, 1e-12);
}

TEST(LpTest, BaseRelaxationOfSmallPath) {
  const Model model = BuildModel(testing::PathInstance(2, {1, 2, 1}));
  // With both row families the bound is 2, the integer optimum (keeping all
  // three vertices would need color 1 on a set covering v2).
  LinearProgram lp = BaseLp(model);
  EXPECT_NEAR(SolveLp(lp).value, 2.0, 1e-9);
  EXPECT_NEAR(DenseTableauValue(lp), 2.0, 1e-9);
  EXPECT_EQ(OracleOpt(model.instance()), 2);
  // Vertex rows alone admit x({v1},1) + x({v3},1) + x({v2},2) = 3.
  lp.rows.resize(model.graph().vertex_count());
  EXPECT_NEAR(SolveLp(lp).value, 3.0, 1e-9);
  EXPECT_NEAR(DenseTableauValue(lp), 3.0, 1e-9);
}

TEST(LpTest, MatchesDenseTableauOnRandomLps) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearProgram lp = RandomLp(rng, 3 + trial % 25, 2 + trial % 17, 0.4);
    const LpOutcome out = SolveLp(lp);
    ASSERT_EQ(out.status, LpStatus::kOptimal);
    EXPECT_NEAR(out.value, DenseTableauValue(lp), 1e-7) << "trial " << trial;
    EXPECT_LE(MaxViolation(lp, out.primal), 1e-7);
  }
}

TEST(LpTest, MatchesDenseTableauOnRecoloringLps) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = testing::RandomPathInstance(rng, 3 + trial % 5, 2 + trial % 3);
    const Model model = BuildModel(inst);
    for (RelaxationLevel level : {RelaxationLevel::kLp0, RelaxationLevel::kLp1}) {
      const LinearProgram lp =
          MakeLinearProgram(model, InitialRows(model, level, CutMode::kUpfront));
      EXPECT_NEAR(SolveLp(lp).value, DenseTableauValue(lp), 1e-7) << "trial " << trial;
    }
  }
}

TEST(LpTest, BoundsOracleOptimum) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::RandomPathInstance(rng, 1 + trial % 8, 2 + trial % 4, 3);
    const Model model = BuildModel(inst);
    EXPECT_GE(SolveLp(BaseLp(model)).value, ToDouble(OracleOpt(inst)) - 1e-6);
  }
}

TEST(LpTest, MoreRowsNeverRaiseTheValue) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    LinearProgram lp = RandomLp(rng, 12, 10, 0.3);
    double previous = SolveLp(lp).value;
    const LinearProgram extra = RandomLp(rng, 12, 6, 0.3);
    for (const SparseRow& row : extra.rows) {
      lp.rows.push_back(row);
      const double value = SolveLp(lp).value;
      EXPECT_LE(value, previous + 1e-9);
      previous = value;
    }
  }
}

TEST(LpTest, RowScalingKeepsValue) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    LinearProgram lp = RandomLp(rng, 10, 8, 0.4);
    const double base = SolveLp(lp).value;
    for (SparseRow& row : lp.rows) {
      const double f = std::uniform_real_distribution<double>(0.25, 8.0)(rng);
      for (auto& term : row.terms) term.second *= f;
      row.rhs *= f;
    }
    EXPECT_NEAR(SolveLp(lp).value, base, 1e-9 * std::max(1.0, std::abs(base)));
  }
}

TEST(LpTest, Deterministic) {
  std::mt19937_64 rng(43);
  const Model model = BuildModel(testing::RandomPathInstance(rng, 8, 4));
  const LinearProgram lp = MakeLinearProgram(
      model, InitialRows(model, RelaxationLevel::kLp1, CutMode::kUpfront));
  const LpOutcome a = SolveLp(lp);
  const LpOutcome b = SolveLp(lp);
  EXPECT_EQ(a.primal, b.primal);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(LpTest, WarmStartAfterAddingRows) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    LinearProgram lp = RandomLp(rng, 15, 5, 0.3);
    const LinearProgram extra = RandomLp(rng, 15, 8, 0.3);
    SimplexSolver solver(lp);
    solver.Solve();
    solver.AddRows(extra.rows);
    const LpOutcome warm = solver.Solve();
    lp.rows.insert(lp.rows.end(), extra.rows.begin(), extra.rows.end());
    ASSERT_EQ(warm.status, LpStatus::kOptimal);
    EXPECT_NEAR(warm.value, DenseTableauValue(lp), 1e-7);
    EXPECT_LE(MaxViolation(lp, warm.primal), 1e-7);
  }
}

TEST(LpTest, WarmStartAfterFixingBounds) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearProgram lp = RandomLp(rng, 12, 8, 0.35);
    SimplexSolver solver(lp);
    solver.Solve();
    // Fix a few variables to 0; the reference drops their columns.
    LinearProgram reduced = lp;
    for (int j = trial % 3; j < lp.var_count; j += 4) {
      solver.SetBounds(j, 0.0, 0.0);
      for (auto& [var, c] : reduced.objective) {
        if (var == j) c = 0;
      }
      for (SparseRow& row : reduced.rows) {
        std::erase_if(row.terms, [j](const auto& t) { return t.first == j; });
      }
    }
    const LpOutcome warm = solver.Solve();
    ASSERT_EQ(warm.status, LpStatus::kOptimal);
    EXPECT_NEAR(warm.value, DenseTableauValue(reduced), 1e-7);
    // Relaxing again restores the original optimum.
    for (int j = 0; j < lp.var_count; ++j) solver.SetBounds(j, 0.0, 1.0);
    EXPECT_NEAR(solver.Solve().value, DenseTableauValue(lp), 1e-7);
  }
}

TEST(LpTest, FixingToOneMatchesColdSolve) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearProgram lp = RandomLp(rng, 10, 6, 0.3);
    SimplexSolver warm(lp);
    warm.Solve();
    SimplexSolver cold(lp);
    const int j = trial % lp.var_count;
    warm.SetBounds(j, 1.0, 1.0);
    cold.SetBounds(j, 1.0, 1.0);
    const LpOutcome a = warm.Solve();
    const LpOutcome b = cold.Solve();
    ASSERT_EQ(a.status, b.status);
    if (a.status == LpStatus::kOptimal) {
      EXPECT_NEAR(a.value, b.value, 1e-7);
      EXPECT_NEAR(a.primal[j], 1.0, 1e-9);
    }
  }
}

TEST(LpTest, DetectsInfeasibleBounds) {
  LinearProgram lp;
  lp.var_count = 2;
  lp.objective = {{0, 1.0}, {1, 1.0}};
  lp.rows = {SparseRow{{{0, 1.0}, {1, 1.0}}, 1.0}};
  SimplexSolver solver(lp);
  solver.SetBounds(0, 1.0, 1.0);
  solver.SetBounds(1, 1.0, 1.0);
  EXPECT_EQ(solver.Solve().status, LpStatus::kInfeasible);
  solver.SetBounds(1, 0.0, 1.0);
  const LpOutcome out = solver.Solve();
  EXPECT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_NEAR(out.value, 1.0, 1e-12);
}

TEST(LpTest, MaxViolation) {
  LinearProgram lp;
  lp.var_count = 2;
  lp.rows = {SparseRow{{{0, 1.0}, {1, 1.0}}, 1.0}};
  EXPECT_NEAR(MaxViolation(lp, std::vector<double>{0.75, 0.5}), 0.25, 1e-12);
  EXPECT_NEAR(MaxViolation(lp, std::vector<double>{-0.5, 0.0}), 0.5, 1e-12);
  EXPECT_EQ(MaxViolation(lp, std::vector<double>{0.5, 0.5}), 0.0);
}

}  // namespace
}  // namespace crsolve
