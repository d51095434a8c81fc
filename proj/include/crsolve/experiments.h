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

// Gap experiments: for seeded random instances on paths, compare the
// integer optimum with the LP0 and LP1 relaxation values.
//
//   pct_Gi = (LPi - OPT) / OPT         (fractions, not percentages)
//   pct_GR = (pct_G0 - pct_G1) / pct_G0, recorded as 0 with g0_zero_flag
//            when pct_G0 = 0.

#ifndef CRSOLVE_EXPERIMENTS_H_
#define CRSOLVE_EXPERIMENTS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crsolve/capa.h"
#include "crsolve/graph.h"
#include "crsolve/solve.h"

namespace crsolve {

enum class Problem { kCr, kCapa };
const char* ProblemName(Problem problem);
Problem ParseProblem(const std::string& name);

// k = alpha * ceil(n / 4).
int ColorCountFor(int n, int alpha);

// Path on n vertices, each colored uniformly from 1..k, unit weights.
Instance GenerateCrInstance(int n, int alpha, std::uint64_t seed);

// Instances beyond this size need ExperimentConfig::allow_paper_scale.
inline constexpr int kDeskScaleMaxN = 16;

struct ExperimentConfig {
  Problem problem = Problem::kCr;
  std::vector<int> n_values = {10, 12, 14};
  std::vector<int> alpha_values = {1, 2, 3};
  int instances_per_cell = 20;
  std::uint64_t seed = 1;
  bool include_lp1plus = false;
  CutMode mode = CutMode::kSeparated;
  double time_limit = 300.0;  // seconds per instance, for the OPT stage
  bool allow_paper_scale = false;
  int threads = 1;
  GainDistribution capa_gains = GainDistribution::Uniform01();
};

enum class RecordStatus { kOk, kTimeout, kDegenerate };
const char* RecordStatusName(RecordStatus status);

struct GapRecord {
  Problem problem = Problem::kCr;
  int n = 0;
  int k = 0;
  int alpha = 0;
  std::uint64_t seed = 0;
  double opt = 0.0;
  double lp0 = 0.0;
  double lp1 = 0.0;
  double pct_g0 = 0.0;
  double pct_g1 = 0.0;
  double pct_gr = 0.0;
  bool lp1_integral = false;
  bool g0_zero_flag = false;
  RecordStatus status = RecordStatus::kOk;
  std::optional<double> lp1plus;  // only when requested
  double time_opt = 0.0;
  double time_lp0 = 0.0;
  double time_lp1 = 0.0;
  double time_lp1plus = 0.0;
};

// Instance seed for (base, problem, n, alpha, index); cells are independent.
std::uint64_t DeriveSeed(std::uint64_t base, Problem problem, int n, int alpha,
                         int index);

// Throws Error for n > kDeskScaleMaxN unless allow_paper_scale is set.
void ValidateConfig(const ExperimentConfig& config);

// Fills the gap fields from OPT, LP0 and LP1.
void ComputeGaps(GapRecord& record);

GapRecord RunInstance(const ExperimentConfig& config, int n, int alpha, int index);
// Records in index order.
std::vector<GapRecord> RunCell(const ExperimentConfig& config, int n, int alpha);
// All cells, ordered by (n, alpha, index).
std::vector<GapRecord> RunExperiment(const ExperimentConfig& config);

struct Summary {
  int records = 0;
  int ok = 0;
  int timeouts = 0;
  int degenerate = 0;
  int g0_zero = 0;
  // Mean pct_GR over records with pct_G0 > 0 (nullopt if there are none).
  std::optional<double> mean_gr_defined;
  // Mean pct_GR with pct_G0 = 0 records counted as 0.
  double mean_gr_all = 0.0;
  double improved_fraction = 0.0;
  double lp1_integral_fraction = 0.0;
  double mean_time_opt = 0.0;
  double mean_time_lp0 = 0.0;
  double mean_time_lp1 = 0.0;
};

// Statistics over the kOk records; throws Error on an empty list.
Summary Summarize(const std::vector<GapRecord>& records);
std::string FormatSummary(const Summary& summary);

// CSV: header row, GapRecord field order, floats with 6 decimals.
std::string CsvHeader();
std::string ToCsvRow(const GapRecord& record);
void WriteCsv(std::ostream& out, const std::vector<GapRecord>& records);
std::vector<GapRecord> ReadCsv(std::istream& in);
// Columns holding wall-clock times.
bool IsTimingColumn(const std::string& name);

}  // namespace crsolve

#endif  // CRSOLVE_EXPERIMENTS_H_
