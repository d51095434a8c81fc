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

#include "crsolve/capa.h"

#include <random>

namespace crsolve {

CapaInstance::CapaInstance(std::vector<std::vector<Rational>> gains)
    : gains_(std::move(gains)) {
  if (gains_.empty()) throw Error("CAPA instance needs at least one symbol");
  positions_ = static_cast<int>(gains_.front().size());
  if (positions_ < 1) throw Error("CAPA instance needs at least one position");
  for (const auto& row : gains_) {
    if (static_cast<int>(row.size()) != positions_) {
      throw Error("CAPA gain matrix rows must all have " +
                  std::to_string(positions_) + " entries");
    }
    for (const Rational& g : row) {
      if (g < 0) throw Error("CAPA gains must be nonnegative");
    }
  }
}

bool CapaInstance::IsDegenerate() const {
  for (const auto& row : gains_) {
    for (const Rational& g : row) {
      if (g != 0) return false;
    }
  }
  return true;
}

namespace {

Instance UncoloredPath(int n, int k) {
  return Instance(Graph::Path(n), PartialColoring::Uncolored(n, k),
                  std::vector<Rational>(n, Rational(0)));
}

}  // namespace

Model CapaToModel(const CapaInstance& capa) {
  return BuildModelWithGains(UncoloredPath(capa.positions(), capa.symbols()),
                             capa.gains());
}

Rational CapaOracleOpt(const CapaInstance& capa) {
  return OracleOpt(Graph::Path(capa.positions()), capa.gains());
}

CapaInstance GenerateCapa(int n, int k, std::uint64_t seed, GainDistribution dist) {
  if (n < 1 || k < 1) throw Error("CAPA generator needs n >= 1 and k >= 1");
  if (dist.kind == GainDistribution::Kind::kIntegerRange &&
      (dist.lo < 0 || dist.lo > dist.hi)) {
    throw Error("integer gain range must satisfy 0 <= lo <= hi");
  }
  std::mt19937_64 rng(seed);
  const Rational ulp = Rational(1) / (boost::multiprecision::cpp_int(1) << 53);
  std::vector<std::vector<Rational>> gains(k, std::vector<Rational>(n));
  for (auto& row : gains) {
    for (Rational& g : row) {
      if (dist.kind == GainDistribution::Kind::kUniform01) {
        g = Rational(rng() >> 11) * ulp;
      } else {
        g = std::uniform_int_distribution<std::int64_t>(dist.lo, dist.hi)(rng);
      }
    }
  }
  return CapaInstance(std::move(gains));
}

}  // namespace crsolve
