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

// Brute-force oracles. None of them touches the LP layer.

#include <algorithm>
#include <limits>
#include <optional>

#include "crsolve/solve.h"

namespace crsolve {

GainTable RecoloringGains(const Instance& instance) {
  GainTable gains(instance.color_count(),
                  std::vector<Rational>(instance.vertex_count(), Rational(0)));
  for (Vertex v = 0; v < instance.vertex_count(); ++v) {
    const Color c = instance.coloring()[v];
    if (c != kNoColor) gains[c - 1][v] = instance.weights()[v];
  }
  return gains;
}

namespace {

void CheckGains(const GainTable& gains, int n) {
  for (const auto& row : gains) {
    if (static_cast<int>(row.size()) != n) {
      throw Error("gain table row length does not match the vertex count");
    }
    for (const Rational& g : row) {
      if (g < 0) throw Error("gains must be nonnegative");
    }
  }
}

// Gains rescaled to a common denominator so the searches run on int64 when
// the totals fit comfortably.
struct ScaledGains {
  std::vector<std::vector<std::int64_t>> values;
  Rational scale;  // original = value / scale
};

std::optional<ScaledGains> Scale(const GainTable& gains) {
  boost::multiprecision::cpp_int lcm = 1;
  for (const auto& row : gains) {
    for (const Rational& g : row) {
      lcm = boost::multiprecision::lcm(lcm, denominator(g));
    }
  }
  ScaledGains out;
  out.scale = Rational(lcm);
  boost::multiprecision::cpp_int total = 0;
  for (const auto& row : gains) {
    auto& scaled = out.values.emplace_back();
    for (const Rational& g : row) {
      const boost::multiprecision::cpp_int v = numerator(g) * (lcm / denominator(g));
      total += v;
      if (total > (boost::multiprecision::cpp_int(1) << 60)) return std::nullopt;
      scaled.push_back(static_cast<std::int64_t>(v));
    }
  }
  return out;
}

template <typename Value>
Value PathDp(int n, const std::vector<std::vector<Value>>& gains) {
  const int k = static_cast<int>(gains.size());
  const std::size_t subsets = std::size_t{1} << k;
  std::vector<std::vector<std::optional<Value>>> best(
      n + 1, std::vector<std::optional<Value>>(subsets));
  best[0][0] = Value(0);
  auto relax = [](std::optional<Value>& slot, const Value& v) {
    if (!slot || *slot < v) slot = v;
  };
  for (int j = 0; j < n; ++j) {
    for (std::size_t used = 0; used < subsets; ++used) {
      if (!best[j][used]) continue;
      const Value base = *best[j][used];
      relax(best[j + 1][used], base);  // position j left uncolored
      for (int c = 0; c < k; ++c) {
        if (used >> c & 1U) continue;
        Value run = base;
        for (int r = j; r < n; ++r) {
          run += gains[c][r];
          relax(best[r + 1][used | (std::size_t{1} << c)], run);
        }
      }
    }
  }
  Value answer = 0;
  for (const auto& v : best[n]) {
    if (v && answer < *v) answer = *v;
  }
  return answer;
}

template <typename Value>
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const std::vector<ConnectedSet>& sets,
                   const std::vector<std::vector<Value>>& gains) {
    const int k = static_cast<int>(gains.size());
    options_.resize(k);
    color_best_.assign(k + 1, Value(0));
    for (int c = 0; c < k; ++c) {
      for (const ConnectedSet& s : sets) {
        Value w = 0;
        for (Vertex v : s.Vertices()) w += gains[c][v];
        // Zero-gain sets never beat leaving the color unused.
        if (w > 0) options_[c].push_back({s.members, w});
      }
      std::stable_sort(options_[c].begin(), options_[c].end(),
                       [](const Option& a, const Option& b) { return a.gain > b.gain; });
    }
    // color_best_[c] bounds what colors c..k-1 can still add.
    for (int c = k - 1; c >= 0; --c) {
      color_best_[c] = color_best_[c + 1] +
                       (options_[c].empty() ? Value(0) : options_[c].front().gain);
    }
  }

  Value Run() {
    Search(0, 0, Value(0));
    return best_;
  }

 private:
  struct Option {
    VertexMask members;
    Value gain;
  };

  void Search(int color, VertexMask used, Value value) {
    if (best_ < value) best_ = value;
    if (color == static_cast<int>(options_.size())) return;
    if (!(best_ < value + color_best_[color])) return;
    for (const Option& o : options_[color]) {
      if ((o.members & used) == 0) Search(color + 1, used | o.members, value + o.gain);
    }
    Search(color + 1, used, value);
  }

  std::vector<std::vector<Option>> options_;
  std::vector<Value> color_best_;
  Value best_ = 0;
};

template <typename Fn>
Rational WithScaledGains(const GainTable& gains, Fn fn) {
  if (auto scaled = Scale(gains)) {
    return Rational(fn(scaled->values)) / scaled->scale;
  }
  return fn(gains);
}

}  // namespace

Rational OraclePathDp(int n, const GainTable& gains) {
  CheckGains(gains, n);
  return WithScaledGains(gains, [n](const auto& g) { return PathDp(n, g); });
}

Rational OracleExhaustive(const Graph& graph, const GainTable& gains) {
  CheckGains(gains, graph.vertex_count());
  const std::vector<ConnectedSet> sets =
      EnumerateConnectedSets(graph, kMaxVertices);
  return WithScaledGains(gains, [&sets](const auto& g) {
    using Value = typename std::decay_t<decltype(g)>::value_type::value_type;
    return ExhaustiveSearch<Value>(sets, g).Run();
  });
}

Rational OracleOpt(const Graph& graph, const GainTable& gains) {
  const int n = graph.vertex_count();
  const int k = static_cast<int>(gains.size());
  if (graph.kind() != GraphKind::kGeneral) {
    if (n > 16 || k > 12) {
      throw Error("oracle size guard: paths and trees need n <= 16 and k <= 12, got n = " +
                  std::to_string(n) + ", k = " + std::to_string(k));
    }
    if (graph.is_path()) return OraclePathDp(n, gains);
    return OracleExhaustive(graph, gains);
  }
  const std::size_t eta = EnumerateConnectedSets(graph).size();
  if (eta * static_cast<std::size_t>(k) > 60) {
    throw Error("oracle size guard: general graphs need eta * k <= 60, got " +
                std::to_string(eta * k));
  }
  return OracleExhaustive(graph, gains);
}

Rational OracleOpt(const Instance& instance) {
  return OracleOpt(instance.graph(), RecoloringGains(instance));
}

namespace {

void CheckEnumerationGuard(const Model& model) {
  const int n = model.graph().vertex_count();
  const int k = model.color_count();
  if (model.var_count() <= 60) return;
  if (model.graph().is_path() && n <= 10 && k <= 5) return;
  throw Error("integral point enumeration guard: need eta * k <= 60 or a path "
              "with n <= 10 and k <= 5, got eta * k = " +
              std::to_string(model.var_count()));
}

void EnumerateFrom(const Model& model, Color color, VertexMask used,
                   std::vector<int>& active,
                   const std::function<void(std::span<const int>)>& visit) {
  if (color > model.color_count()) {
    visit(active);
    return;
  }
  EnumerateFrom(model, color + 1, used, active, visit);
  for (int s = 0; s < model.set_count(); ++s) {
    const VertexMask members = model.set(s).members;
    if (members & used) continue;
    active.push_back(model.FlatIndex({s, color}));
    EnumerateFrom(model, color + 1, used | members, active, visit);
    active.pop_back();
  }
}

std::vector<std::int64_t> DenseCoefficients(const Model& model,
                                            const LinearConstraint& row) {
  std::vector<std::int64_t> dense(model.var_count(), 0);
  for (const auto& [flat, coef] : row.terms) {
    if (flat < 0 || flat >= model.var_count()) {
      throw Error("row refers to a variable outside the model");
    }
    dense[flat] += coef;
  }
  return dense;
}

std::int64_t Lhs(const std::vector<std::int64_t>& dense, std::span<const int> active) {
  std::int64_t lhs = 0;
  for (int flat : active) lhs += dense[flat];
  return lhs;
}

// Rank of a growing set of vectors, kept in reduced row echelon form over
// the rationals.
class ExactRank {
 public:
  explicit ExactRank(int dimension) : dimension_(dimension) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  void Insert(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational factor = v[pivots_[r]];
      if (factor == 0) continue;
      for (int j = 0; j < dimension_; ++j) {
        if (rows_[r][j] != 0) v[j] -= factor * rows_[r][j];
      }
    }
    int pivot = -1;
    for (int j = 0; j < dimension_; ++j) {
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return;
    const Rational lead = v[pivot];
    for (Rational& e : v) {
      if (e != 0) e /= lead;
    }
    for (auto& row : rows_) {
      const Rational factor = row[pivot];
      if (factor == 0) continue;
      for (int j = 0; j < dimension_; ++j) {
        if (v[j] != 0) row[j] -= factor * v[j];
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
  }

 private:
  int dimension_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

void EnumerateIntegralPoints(
    const Model& model, const std::function<void(std::span<const int>)>& visit) {
  CheckEnumerationGuard(model);
  std::vector<int> active;
  EnumerateFrom(model, 1, 0, active, visit);
}

std::vector<Point> IntegralPoints(const Model& model) {
  std::vector<Point> points;
  EnumerateIntegralPoints(model, [&](std::span<const int> active) {
    Point p = model.ZeroPoint();
    for (int flat : active) p.values[flat] = 1.0;
    points.push_back(std::move(p));
  });
  return points;
}

bool VerifyInequality(const Model& model, const LinearConstraint& row) {
  const std::vector<std::int64_t> dense = DenseCoefficients(model, row);
  bool valid = true;
  EnumerateIntegralPoints(model, [&](std::span<const int> active) {
    if (Lhs(dense, active) > row.rhs) valid = false;
  });
  return valid;
}

int FaceDimension(const Model& model, const LinearConstraint& row) {
  const std::vector<std::int64_t> dense = DenseCoefficients(model, row);
  const int d = model.var_count();
  std::optional<std::vector<int>> anchor;
  ExactRank rank(d);
  EnumerateIntegralPoints(model, [&](std::span<const int> active) {
    if (Lhs(dense, active) != row.rhs) return;
    if (!anchor) {
      anchor.emplace(active.begin(), active.end());
      return;
    }
    if (rank.rank() == d) return;
    std::vector<Rational> diff(d, Rational(0));
    for (int flat : active) diff[flat] += 1;
    for (int flat : *anchor) diff[flat] -= 1;
    rank.Insert(std::move(diff));
  });
  return anchor ? rank.rank() : -1;
}

LinearConstraint NonnegativityRow(const Model& model, int flat) {
  if (flat < 0 || flat >= model.var_count()) {
    throw Error("variable index out of range");
  }
  return LinearConstraint{{{flat, -1}}, 0};
}

}  // namespace crsolve
