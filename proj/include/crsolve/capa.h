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

// Connected assignment in arrays: place at most one symbol per array
// position so that every symbol occupies consecutive positions, maximizing
// the sum of per-(symbol, position) gains. It is the path model with an
// uncolored path and gain-based objective coefficients.

#ifndef CRSOLVE_CAPA_H_
#define CRSOLVE_CAPA_H_

#include <cstdint>

#include "crsolve/common.h"
#include "crsolve/formulation.h"
#include "crsolve/solve.h"

namespace crsolve {

class CapaInstance {
 public:
  // gains[i][j] is the gain of symbol i+1 at position j. Throws Error on
  // ragged, negative or empty input.
  explicit CapaInstance(std::vector<std::vector<Rational>> gains);

  int positions() const { return positions_; }
  int symbols() const { return static_cast<int>(gains_.size()); }
  const std::vector<std::vector<Rational>>& gains() const { return gains_; }
  bool IsDegenerate() const;  // all gains zero

 private:
  int positions_ = 0;
  std::vector<std::vector<Rational>> gains_;
};

// The model over the n-vertex uncolored path whose objective coefficient for
// (interval, symbol) is the gain sum over the interval.
Model CapaToModel(const CapaInstance& capa);

Rational CapaOracleOpt(const CapaInstance& capa);

struct GainDistribution {
  enum class Kind { kUniform01, kIntegerRange };
  Kind kind = Kind::kUniform01;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static GainDistribution Uniform01() { return {}; }
  static GainDistribution IntegerRange(std::int64_t lo, std::int64_t hi) {
    return {Kind::kIntegerRange, lo, hi};
  }
};

// Seeded gain matrix. uniform01 draws exact multiples of 2^-53 in [0, 1).
CapaInstance GenerateCapa(int n, int k, std::uint64_t seed,
                          GainDistribution dist = GainDistribution::Uniform01());

}  // namespace crsolve

#endif  // CRSOLVE_CAPA_H_
