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
#include <random>

#include <gtest/gtest.h>

#include "crsolve/solve.h"
#include "test_util.h"

namespace crsolve {
namespace {

using testing::PathInstance;

// Feasibility of a 0/1 vector given as a bit pattern, checked directly on the
// set masks rather than through the model's rows.
bool BruteFeasible(const Model& model, std::uint64_t bits) {
  VertexMask used = 0;
  std::vector<int> per_color(model.color_count() + 1, 0);
  for (int flat = 0; flat < model.var_count(); ++flat) {
    if (!(bits >> flat & 1)) continue;
    const VarId var = model.Var(flat);
    const VertexMask m = model.set(var.set_index).members;
    if (used & m) return false;
    used |= m;
    if (++per_color[var.color] > 1) return false;
  }
  return true;
}

int BruteCount(const Model& model) {
  int count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << model.var_count()); ++bits) {
    count += BruteFeasible(model, bits);
  }
  return count;
}

Point FromSupport(const Model& model, std::span<const int> active) {
  Point p = model.ZeroPoint();
  for (int flat : active) p.values[flat] = 1.0;
  return p;
}

// A random convex partial coloring: each color in turn may claim a random
// connected set disjoint from the ones already used.
PartialColoring RandomConvexColoring(std::mt19937_64& rng, const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<Color> assignment(n, kNoColor);
  VertexMask used = 0;
  std::bernoulli_distribution take(0.7);
  for (Color c = 1; c <= k; ++c) {
    if (!take(rng)) continue;
    std::vector<VertexMask> options;
    for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
      if (!(m & used) && testing::BruteConnected(g, m)) options.push_back(m);
    }
    if (options.empty()) break;
    const VertexMask m =
        options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    used |= m;
    for (Vertex v = 0; v < n; ++v) {
      if (m >> v & 1) assignment[v] = c;
    }
  }
  return PartialColoring(k, std::move(assignment));
}

TEST(FormulationTest, SmallPathModel) {
  const Instance inst(Graph::Path(3), PartialColoring(2, {1, 0, 2}), {1, 0, 1});
  const Model model = BuildModel(inst);
  EXPECT_EQ(model.var_count(), 12);
  EXPECT_EQ(model.base_rows().size(), 5U);
  const int v1 = model.FindSet(0b001);
  const int v2 = model.FindSet(0b010);
  const int all = model.FindSet(0b111);
  EXPECT_EQ(all, model.whole_graph_set());
  EXPECT_EQ(model.ObjectiveCoefficient(model.FlatIndex({v1, 1})), 1);
  EXPECT_EQ(model.ObjectiveCoefficient(model.FlatIndex({all, 1})), 1);
  EXPECT_EQ(model.ObjectiveCoefficient(model.FlatIndex({v2, 1})), 0);
  EXPECT_EQ(model.ObjectiveCoefficient(model.FlatIndex({v2, 2})), 0);
  EXPECT_EQ(model.VarName(model.FlatIndex({all, 2})), "x_H1_3_c2");
}

TEST(FormulationTest, UncoloredObjectiveIsZero) {
  const Model model = BuildModel(Instance::UnitWeights(
      Graph::Path(4), PartialColoring::Uncolored(4, 3)));
  EXPECT_TRUE(model.objective().empty());
}

TEST(FormulationTest, NeedsTwoColors) {
  EXPECT_THROW(BuildModel(PathInstance(1, {1, 1})), Error);
}

TEST(FormulationTest, BestIntegralPointOfAlternatingPath) {
  const Model model = BuildModel(PathInstance(2, {1, 2, 1, 2}));
  Rational best = -1;
  EnumerateIntegralPoints(model, [&](std::span<const int> active) {
    best = std::max(best, model.ObjectiveValue(active));
  });
  EXPECT_EQ(best, 3);
}

TEST(FormulationTest, RowIncidence) {
  std::mt19937_64 rng(2);
  const Instance tree_inst = Instance::UnitWeights(
      testing::RandomTree(rng, 6), PartialColoring(3, {1, 2, 3, 1, 2, 3}));
  for (const Model& model : {BuildModel(PathInstance(3, {1, 2, 3, 1, 2})),
                             BuildModel(tree_inst)}) {
    const int n = model.graph().vertex_count();
    std::vector<int> vertex_hits(model.var_count(), 0);
    std::vector<int> color_hits(model.var_count(), 0);
    for (std::size_t r = 0; r < model.base_rows().size(); ++r) {
      EXPECT_EQ(model.base_rows()[r].rhs, 1);
      for (const auto& [flat, coef] : model.base_rows()[r].terms) {
        EXPECT_EQ(coef, 1);
        (static_cast<int>(r) < n ? vertex_hits : color_hits)[flat]++;
      }
    }
    for (int flat = 0; flat < model.var_count(); ++flat) {
      EXPECT_EQ(color_hits[flat], 1);
      EXPECT_EQ(vertex_hits[flat], model.set(model.Var(flat).set_index).size);
    }
  }
}

TEST(FormulationTest, ZeroAndUnitPointsAreFeasible) {
  const Model model = BuildModel(PathInstance(3, {1, 2, 3, 1}));
  EXPECT_TRUE(BruteFeasible(model, 0));
  for (int flat = 0; flat < model.var_count(); ++flat) {
    const Point p = FromSupport(model, std::vector<int>{flat});
    for (const auto& row : model.base_rows()) {
      double lhs = 0;
      for (const auto& [i, coef] : row.terms) lhs += coef * p.values[i];
      EXPECT_LE(lhs, row.rhs);
    }
  }
}

TEST(FormulationTest, IntegralPointCounts) {
  const Model one = BuildModel(PathInstance(2, {1}));
  EXPECT_EQ(IntegralPoints(one).size(), 3U);
  const Model two = BuildModel(PathInstance(2, {1, 2}));
  // Brute force over all 2^6 vectors with both row families enforced.
  EXPECT_EQ(BruteCount(two), 9);
  EXPECT_EQ(IntegralPoints(two).size(), 9U);
}

TEST(FormulationTest, EnumeratorMatchesBruteForce) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = trial < 3 ? Graph::Path(3 + trial % 2) : testing::RandomTree(rng, 4);
    const int k = 2 + trial % 2;
    const Model model = BuildModel(Instance::UnitWeights(g, PartialColoring::Uncolored(g.vertex_count(), k)));
    if (model.var_count() > 22) continue;
    std::vector<std::uint64_t> enumerated;
    EnumerateIntegralPoints(model, [&](std::span<const int> active) {
      std::uint64_t bits = 0;
      for (int flat : active) bits |= std::uint64_t{1} << flat;
      enumerated.push_back(bits);
    });
    std::vector<std::uint64_t> brute;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << model.var_count()); ++bits) {
      if (BruteFeasible(model, bits)) brute.push_back(bits);
    }
    std::sort(enumerated.begin(), enumerated.end());
    EXPECT_EQ(enumerated, brute) << "trial " << trial;
  }
}

TEST(FormulationTest, ChiExamples) {
  const Model model = BuildModel(PathInstance(2, {1, 1, 2}));
  EXPECT_EQ(Chi(model, PartialColoring::Uncolored(3, 2)).Support().size(), 0U);
  const auto support = Chi(model, PartialColoring(2, {1, 1, 2})).Support();
  ASSERT_EQ(support.size(), 2U);
  EXPECT_EQ(model.Var(support[0]), (VarId{model.FindSet(0b011), 1}));
  EXPECT_EQ(model.Var(support[1]), (VarId{model.FindSet(0b100), 2}));
  EXPECT_THROW(Chi(model, PartialColoring(2, {1, 2, 1})), Error);
}

TEST(FormulationTest, DecodeExamples) {
  const Model model = BuildModel(PathInstance(3, {1, 2, 3, 1}));
  EXPECT_EQ(Decode(model, model.ZeroPoint()), PartialColoring::Uncolored(4, 3));
  for (Color c = 1; c <= 3; ++c) {
    Point p = model.ZeroPoint();
    p.values[model.FlatIndex({model.whole_graph_set(), c})] = 1;
    EXPECT_EQ(Decode(model, p), PartialColoring(3, std::vector<Color>(4, c)));
  }
}

TEST(FormulationTest, DecodeRejectsBadPoints) {
  const Model model = BuildModel(PathInstance(2, {1, 2, 1}));
  Point half = model.ZeroPoint();
  half.values[model.FlatIndex({model.whole_graph_set(), 2})] = 0.5;
  try {
    Decode(model, half);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("x_H1_3_c2"), std::string::npos);
  }
  Point clash = model.ZeroPoint();
  clash.values[model.FlatIndex({model.FindSet(0b011), 1})] = 1;
  clash.values[model.FlatIndex({model.FindSet(0b110), 2})] = 1;
  try {
    Decode(model, clash);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
  }
  Point twice = model.ZeroPoint();
  twice.values[model.FlatIndex({model.FindSet(0b001), 1})] = 1;
  twice.values[model.FlatIndex({model.FindSet(0b100), 1})] = 1;
  EXPECT_THROW(Decode(model, twice), Error);
}

TEST(FormulationTest, ChiDecodeRoundTripOnRandomTrees) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const int k = 2 + trial % 3;
    const Graph g = testing::RandomTree(rng, n);
    const PartialColoring coloring = RandomConvexColoring(rng, g, k);
    ASSERT_TRUE(IsConvex(g, coloring));
    const Model model = BuildModel(Instance::UnitWeights(g, PartialColoring::Uncolored(n, k)));
    EXPECT_EQ(Decode(model, Chi(model, coloring)), coloring) << "trial " << trial;
  }
}

TEST(FormulationTest, DecodeChiIdentityOnAllPoints) {
  const Model model = BuildModel(PathInstance(2, {1, 2, 2, 1}));
  int points = 0;
  EnumerateIntegralPoints(model, [&](std::span<const int> active) {
    const Point p = FromSupport(model, active);
    const PartialColoring decoded = Decode(model, p);
    EXPECT_TRUE(IsConvex(model.graph(), decoded));
    EXPECT_EQ(Chi(model, decoded).values, p.values);
    ++points;
  });
  EXPECT_GT(points, 0);
}

TEST(FormulationTest, ObjectiveIsKeptWeight) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testing::RandomPathInstance(rng, 5, 3, 5, 0.2);
    const Model model = BuildModel(inst);
    const Rational best = testing::BruteMinRecoloring(inst);
    Rational best_kept = -1;
    EnumerateIntegralPoints(model, [&](std::span<const int> active) {
      const Rational value = model.ObjectiveValue(active);
      const PartialColoring decoded = Decode(model, FromSupport(model, active));
      EXPECT_EQ(value, KeptWeight(inst, decoded));
      const PartialColoring total = ExtendToTotal(model.graph(), decoded);
      EXPECT_TRUE(IsConvex(model.graph(), total));
      EXPECT_LE(RecoloredWeight(inst, total), KeptToRecolored(inst, value));
      best_kept = std::max(best_kept, value);
    });
    EXPECT_EQ(KeptToRecolored(inst, best_kept), best);
  }
}

TEST(FormulationTest, KeptToRecolored) {
  const Instance inst = PathInstance(2, {1, 2, 1, 2});
  EXPECT_EQ(KeptToRecolored(inst, 4), 0);
  EXPECT_EQ(KeptToRecolored(inst, 3), 1);
  EXPECT_EQ(KeptToRecolored(inst, 0), 4);
}

TEST(FormulationTest, DumpNamesVariables) {
  const Model path = BuildModel(PathInstance(2, {1, 2}));
  const std::string text = DumpLp(path, path.base_rows());
  EXPECT_NE(text.find("x_H1_2_c1"), std::string::npos);
  EXPECT_NE(text.find("Maximize"), std::string::npos);
  const Model star = BuildModel(Instance::UnitWeights(testing::Star(2),
                                                      PartialColoring(2, {1, 2, 1})));
  EXPECT_NE(DumpLp(star, star.base_rows()).find("x_s0_c1"), std::string::npos);
}

}  // namespace
}  // namespace crsolve
