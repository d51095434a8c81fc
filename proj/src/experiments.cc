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

#include "crsolve/experiments.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace crsolve {

const char* ProblemName(Problem problem) {
  return problem == Problem::kCr ? "cr" : "capa";
}

Problem ParseProblem(const std::string& name) {
  if (name == "cr") return Problem::kCr;
  if (name == "capa") return Problem::kCapa;
  throw Error("unknown problem '" + name + "' (cr|capa)");
}

const char* RecordStatusName(RecordStatus status) {
  switch (status) {
    case RecordStatus::kOk:
      return "ok";
    case RecordStatus::kTimeout:
      return "timeout";
    case RecordStatus::kDegenerate:
      return "degenerate";
  }
  return "ok";
}

int ColorCountFor(int n, int alpha) { return alpha * ((n + 3) / 4); }

Instance GenerateCrInstance(int n, int alpha, std::uint64_t seed) {
  if (n < 3) throw Error("CR instances need n >= 3");
  if (alpha < 1) throw Error("alpha must be at least 1");
  const int k = ColorCountFor(n, alpha);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> color(1, k);
  std::vector<Color> assignment(n);
  for (Color& c : assignment) c = color(rng);
  return Instance::UnitWeights(Graph::Path(n), PartialColoring(k, std::move(assignment)));
}

namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double Since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t base, Problem problem, int n, int alpha,
                         int index) {
  std::uint64_t h = SplitMix(base);
  for (std::uint64_t part :
       {static_cast<std::uint64_t>(problem), static_cast<std::uint64_t>(n),
        static_cast<std::uint64_t>(alpha), static_cast<std::uint64_t>(index)}) {
    h = SplitMix(h ^ part);
  }
  return h;
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.n_values.empty() || config.alpha_values.empty()) {
    throw Error("experiment needs at least one n and one alpha");
  }
  if (config.instances_per_cell < 1) throw Error("instances per cell must be positive");
  for (int n : config.n_values) {
    if (n < 3) throw Error("experiment sizes need n >= 3");
    if (n > kDeskScaleMaxN && !config.allow_paper_scale) {
      throw Error("n = " + std::to_string(n) + " exceeds the desk-scale limit of " +
                  std::to_string(kDeskScaleMaxN) +
                  "; pass the paper-scale flag to run it (runtimes grow "
                  "exponentially with n)");
    }
  }
  for (int alpha : config.alpha_values) {
    if (alpha < 1) throw Error("alpha must be at least 1");
  }
}

void ComputeGaps(GapRecord& r) {
  const double tol = 1e-7 * std::max(1.0, std::abs(r.opt));
  double gap0 = r.lp0 - r.opt;
  double gap1 = r.lp1 - r.opt;
  if (std::abs(gap0) <= tol) gap0 = 0.0;
  if (std::abs(gap1) <= tol) gap1 = 0.0;
  if (std::abs(gap1 - gap0) <= tol) gap1 = gap0;
  r.pct_g0 = gap0 / r.opt;
  r.pct_g1 = gap1 / r.opt;
  r.g0_zero_flag = gap0 == 0.0;
  r.pct_gr = r.g0_zero_flag ? 0.0 : (r.pct_g0 - r.pct_g1) / r.pct_g0;
}

GapRecord RunInstance(const ExperimentConfig& config, int n, int alpha, int index) {
  GapRecord r;
  r.problem = config.problem;
  r.n = n;
  r.alpha = alpha;
  r.k = ColorCountFor(n, alpha);
  r.seed = DeriveSeed(config.seed, config.problem, n, alpha, index);

  std::optional<Model> model;
  if (config.problem == Problem::kCr) {
    model.emplace(BuildModel(GenerateCrInstance(n, alpha, r.seed)));
  } else {
    const CapaInstance capa = GenerateCapa(n, r.k, r.seed, config.capa_gains);
    model.emplace(CapaToModel(capa));
    if (capa.IsDegenerate()) {
      r.status = RecordStatus::kDegenerate;
      return r;
    }
  }

  RelaxationOptions relax;
  relax.mode = config.mode;

  auto start = std::chrono::steady_clock::now();
  BranchAndBoundOptions bb;
  bb.relaxation = relax;
  bb.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(config.time_limit));
  try {
    r.opt = ToDouble(BranchAndBound(*model, RelaxationLevel::kLp1, bb).opt_value);
  } catch (const TimeLimitError&) {
    r.status = RecordStatus::kTimeout;
    r.time_opt = Since(start);
    return r;
  }
  r.time_opt = Since(start);

  start = std::chrono::steady_clock::now();
  const RelaxationResult lp0 = SolveRelaxation(*model, RelaxationLevel::kLp0, relax);
  r.time_lp0 = Since(start);
  start = std::chrono::steady_clock::now();
  const RelaxationResult lp1 = SolveRelaxation(*model, RelaxationLevel::kLp1, relax);
  r.time_lp1 = Since(start);
  for (const RelaxationResult* res : {&lp0, &lp1}) {
    if (res->lp.status != LpStatus::kOptimal) {
      throw Error(std::string("relaxation ended with status ") +
                  LpStatusName(res->lp.status));
    }
  }
  r.lp0 = lp0.lp.value;
  r.lp1 = lp1.lp.value;
  r.lp1_integral = Point{lp1.lp.primal}.IsIntegral();
  if (config.include_lp1plus) {
    start = std::chrono::steady_clock::now();
    r.lp1plus = SolveRelaxation(*model, RelaxationLevel::kLp1Plus, relax).lp.value;
    r.time_lp1plus = Since(start);
  }
  if (r.opt <= 0.0) {
    r.status = RecordStatus::kDegenerate;
    return r;
  }
  ComputeGaps(r);
  return r;
}

std::vector<GapRecord> RunCell(const ExperimentConfig& config, int n, int alpha) {
  ValidateConfig(config);
  const int count = config.instances_per_cell;
  std::vector<GapRecord> records(count);
  const int threads = std::clamp(config.threads, 1, count);
  if (threads == 1) {
    for (int i = 0; i < count; ++i) records[i] = RunInstance(config, n, alpha, i);
    return records;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int i = next++; i < count; i = next++) {
            records[i] = RunInstance(config, n, alpha, i);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

std::vector<GapRecord> RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  std::vector<GapRecord> all;
  std::vector<int> ns = config.n_values;
  std::vector<int> alphas = config.alpha_values;
  std::sort(ns.begin(), ns.end());
  std::sort(alphas.begin(), alphas.end());
  for (int n : ns) {
    for (int alpha : alphas) {
      std::vector<GapRecord> cell = RunCell(config, n, alpha);
      all.insert(all.end(), cell.begin(), cell.end());
    }
  }
  return all;
}

Summary Summarize(const std::vector<GapRecord>& records) {
  if (records.empty()) throw Error("cannot summarize an empty record list");
  Summary s;
  s.records = static_cast<int>(records.size());
  double gr_defined = 0.0;
  int defined = 0;
  int improved = 0;
  int integral = 0;
  for (const GapRecord& r : records) {
    if (r.status == RecordStatus::kTimeout) ++s.timeouts;
    if (r.status == RecordStatus::kDegenerate) ++s.degenerate;
    if (r.status != RecordStatus::kOk) continue;
    ++s.ok;
    if (r.g0_zero_flag) {
      ++s.g0_zero;
    } else {
      gr_defined += r.pct_gr;
      ++defined;
    }
    s.mean_gr_all += r.pct_gr;
    if (r.pct_g1 < r.pct_g0) ++improved;
    if (r.lp1_integral) ++integral;
    s.mean_time_opt += r.time_opt;
    s.mean_time_lp0 += r.time_lp0;
    s.mean_time_lp1 += r.time_lp1;
  }
  if (s.ok > 0) {
    s.mean_gr_all /= s.ok;
    s.improved_fraction = static_cast<double>(improved) / s.ok;
    s.lp1_integral_fraction = static_cast<double>(integral) / s.ok;
    s.mean_time_opt /= s.ok;
    s.mean_time_lp0 /= s.ok;
    s.mean_time_lp1 /= s.ok;
  }
  if (defined > 0) s.mean_gr_defined = gr_defined / defined;
  return s;
}

std::string FormatSummary(const Summary& s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "records: " << s.records << " (ok " << s.ok << ", timeout " << s.timeouts
      << ", degenerate " << s.degenerate << ")\n";
  out << "records with G0 = 0: " << s.g0_zero << "\n";
  out << "mean GR (G0 > 0 only): ";
  if (s.mean_gr_defined) {
    out << *s.mean_gr_defined << "\n";
  } else {
    out << "n/a\n";
  }
  out << "mean GR (G0 = 0 counted as 0): " << s.mean_gr_all << "\n";
  out << "improved fraction (G1 < G0): " << s.improved_fraction << "\n";
  out << "LP1 integral fraction: " << s.lp1_integral_fraction << "\n";
  out << "mean time opt / lp0 / lp1 [s]: " << s.mean_time_opt << " / "
      << s.mean_time_lp0 << " / " << s.mean_time_lp1 << "\n";
  return out.str();
}

namespace {

const std::vector<std::string>& Columns() {
  static const std::vector<std::string> columns = {
      "problem", "n",      "k",        "alpha",        "seed",
      "OPT",     "LP0",    "LP1",      "pct_G0",       "pct_G1",
      "pct_GR",  "lp1_integral", "g0_zero_flag", "status", "LP1plus",
      "time_opt", "time_lp0", "time_lp1", "time_lp1plus"};
  return columns;
}

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

bool IsTimingColumn(const std::string& name) { return name.rfind("time_", 0) == 0; }

std::string CsvHeader() {
  std::string header;
  for (const std::string& c : Columns()) header += (header.empty() ? "" : ",") + c;
  return header;
}

std::string ToCsvRow(const GapRecord& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  out << ProblemName(r.problem) << "," << r.n << "," << r.k << "," << r.alpha << ","
      << r.seed << "," << r.opt << "," << r.lp0 << "," << r.lp1 << "," << r.pct_g0
      << "," << r.pct_g1 << "," << r.pct_gr << "," << (r.lp1_integral ? 1 : 0) << ","
      << (r.g0_zero_flag ? 1 : 0) << "," << RecordStatusName(r.status) << ",";
  if (r.lp1plus) out << *r.lp1plus;
  out << "," << r.time_opt << "," << r.time_lp0 << "," << r.time_lp1 << ","
      << r.time_lp1plus;
  return out.str();
}

void WriteCsv(std::ostream& out, const std::vector<GapRecord>& records) {
  out << CsvHeader() << "\n";
  for (const GapRecord& r : records) out << ToCsvRow(r) << "\n";
}

std::vector<GapRecord> ReadCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("empty CSV");
  const std::vector<std::string> header = Split(line);
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i) column[header[i]] = i;
  for (const std::string& c : Columns()) {
    if (!column.contains(c)) throw Error("CSV is missing column " + c);
  }
  std::vector<GapRecord> records;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::vector<std::string> f = Split(line);
    if (f.size() != header.size()) {
      throw Error("CSV line " + std::to_string(line_number) + " has " +
                  std::to_string(f.size()) + " fields, expected " +
                  std::to_string(header.size()));
    }
    auto get = [&](const char* name) -> const std::string& { return f[column.at(name)]; };
    try {
      GapRecord r;
      r.problem = ParseProblem(get("problem"));
      r.n = std::stoi(get("n"));
      r.k = std::stoi(get("k"));
      r.alpha = std::stoi(get("alpha"));
      r.seed = std::stoull(get("seed"));
      r.opt = std::stod(get("OPT"));
      r.lp0 = std::stod(get("LP0"));
      r.lp1 = std::stod(get("LP1"));
      r.pct_g0 = std::stod(get("pct_G0"));
      r.pct_g1 = std::stod(get("pct_G1"));
      r.pct_gr = std::stod(get("pct_GR"));
      r.lp1_integral = get("lp1_integral") == "1";
      r.g0_zero_flag = get("g0_zero_flag") == "1";
      const std::string& status = get("status");
      r.status = status == "timeout"      ? RecordStatus::kTimeout
                 : status == "degenerate" ? RecordStatus::kDegenerate
                                          : RecordStatus::kOk;
      if (!get("LP1plus").empty()) r.lp1plus = std::stod(get("LP1plus"));
      r.time_opt = std::stod(get("time_opt"));
      r.time_lp0 = std::stod(get("time_lp0"));
      r.time_lp1 = std::stod(get("time_lp1"));
      r.time_lp1plus = std::stod(get("time_lp1plus"));
      records.push_back(r);
    } catch (const std::logic_error&) {
      throw Error("CSV line " + std::to_string(line_number) + " has a malformed field");
    }
  }
  return records;
}

}  // namespace crsolve
