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

// crsolve: command-line front end.
//
//   crsolve solve <instance> [--level lp0|lp1|lp1plus] [--mode upfront|separated]
//                            [--format csv|json] [--dump-lp FILE]
//   crsolve experiment --problem cr|capa --n 10,12,14 --alpha 1,2,3
//                      --per-cell 20 --seed S --out results.csv
//   crsolve verify <instance> [--facets]
//   crsolve summarize results.csv

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crsolve/capa.h"
#include "crsolve/cuts.h"
#include "crsolve/experiments.h"
#include "crsolve/formulation.h"
#include "crsolve/io.h"
#include "crsolve/solve.h"

namespace crsolve {
namespace {

// The file may hold a CR instance or a CAPA gain matrix.
struct LoadedModel {
  std::optional<Instance> instance;
  std::optional<CapaInstance> capa;
  std::optional<Model> model;
};

LoadedModel Load(const std::string& path) {
  LoadedModel out;
  const nlohmann::json j = LoadJsonFile(path);
  if (IsCapaJson(j)) {
    out.capa = CapaFromJson(j);
    out.model = CapaToModel(*out.capa);
  } else {
    out.instance = InstanceFromJson(j);
    out.model = BuildModel(*out.instance);
  }
  return out;
}

Rational ReferenceOpt(const LoadedModel& loaded) {
  return loaded.capa ? CapaOracleOpt(*loaded.capa) : OracleOpt(*loaded.instance);
}

int RunSolve(const std::string& path, const std::string& level_name,
             const std::string& mode_name, const std::string& format,
             const std::string& dump_path) {
  const LoadedModel loaded = Load(path);
  const Model& model = *loaded.model;
  const RelaxationLevel level = ParseRelaxationLevel(level_name);
  BranchAndBoundOptions options;
  options.relaxation.mode = ParseCutMode(mode_name);
  const SolveReport report = BranchAndBound(model, level, options);

  if (!dump_path.empty()) {
    const RelaxationResult root = SolveRelaxation(model, level, options.relaxation);
    std::ofstream out(dump_path);
    if (!out) throw Error("cannot write " + dump_path);
    out << DumpCuts(model, root.rows);
  }

  if (format == "json") {
    const std::string text = loaded.instance ? SolveReportToJson(*loaded.instance, model, report)
                                             : SolveReportToJson(model, report);
    const nlohmann::json j = nlohmann::json::parse(text);
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << SolveReportCsvHeader() << "\n" << SolveReportToCsv(report) << "\n";
  } else {
    throw Error("unknown format '" + format + "' (expected csv or json)");
  }
  return 0;
}

std::vector<Color> ColorsOf(unsigned mask, int k) {
  std::vector<Color> colors;
  for (Color c = 1; c <= k; ++c) {
    if (mask >> (c - 1) & 1U) colors.push_back(c);
  }
  return colors;
}

int RunVerify(const std::string& path, bool facets) {
  const LoadedModel loaded = Load(path);
  const Model& model = *loaded.model;
  const int k = model.color_count();
  bool ok = true;

  const Rational oracle = ReferenceOpt(loaded);
  const SolveReport report = BranchAndBound(model, RelaxationLevel::kLp1);
  const bool same = report.opt_value == oracle;
  ok = ok && same;
  std::cout << (same ? "PASS" : "FAIL") << " oracle equivalence: branch-and-bound "
            << ToString(report.opt_value) << ", oracle " << ToString(oracle) << "\n";

  std::int64_t checked = 0;
  std::int64_t invalid = 0;
  try {
    for (int s = 0; s < model.set_count(); ++s) {
      const int size = model.set(s).size;
      for (Color c = 1; c <= k; ++c) {
        ++checked;
        if (!VerifyInequality(model, BuildClass5(model, s, c).row)) {
          ++invalid;
          std::cout << "  invalid: " << BuildClass5(model, s, c).provenance.ToString(model)
                    << "\n";
        }
      }
      for (unsigned mask = 1; mask < (1U << k); ++mask) {
        const std::vector<Color> colors = ColorsOf(mask, k);
        const int t = static_cast<int>(colors.size());
        if (t < 2 || (t > size && size != 1)) continue;
        const Cut cut = BuildClass6(model, s, colors);
        ++checked;
        if (!VerifyInequality(model, cut.row)) {
          ++invalid;
          std::cout << "  invalid: " << cut.provenance.ToString(model) << "\n";
        }
      }
    }
    ok = ok && invalid == 0;
    std::cout << (invalid == 0 ? "PASS" : "FAIL") << " cut validity: " << checked
              << " cuts checked, " << invalid << " invalid\n";
  } catch (const Error& e) {
    std::cout << "SKIP cut validity: " << e.what() << "\n";
    facets = false;
  }

  if (facets) {
    if (model.graph().vertex_count() < 3) {
      std::cout << "note: n < 3 lies outside the regime of the facet results\n";
    }
    const int full = model.var_count();
    const int dim = FaceDimension(model, LinearConstraint{{}, 0});
    std::cout << (dim == full ? "PASS" : "FAIL") << " polytope dimension " << dim
              << " (variables " << full << ")\n";
    ok = ok && dim == full;
    int bound_facets = 0;
    for (int flat = 0; flat < full; ++flat) {
      if (FaceDimension(model, NonnegativityRow(model, flat)) == full - 1) ++bound_facets;
    }
    std::cout << "bounds x >= 0 defining facets: " << bound_facets << "/" << full << "\n";
    int class5_facets = 0;
    for (int s = 0; s < model.set_count(); ++s) {
      for (Color c = 1; c <= k; ++c) {
        const Cut cut = BuildClass5(model, s, c);
        const int d = FaceDimension(model, cut.row);
        if (d == full - 1) ++class5_facets;
        std::cout << "  " << cut.provenance.ToString(model) << " face dimension " << d
                  << "\n";
      }
    }
    std::cout << "binary cuts defining facets: " << class5_facets << "/"
              << model.set_count() * k << "\n";
    int class6_facets = 0;
    int class6_total = 0;
    for (int s = 0; s < model.set_count(); ++s) {
      const int size = model.set(s).size;
      for (unsigned mask = 1; mask < (1U << k); ++mask) {
        const std::vector<Color> colors = ColorsOf(mask, k);
        const int t = static_cast<int>(colors.size());
        if (t < 2 || t > size - 1) continue;
        const Cut cut = BuildClass6(model, s, colors);
        const int d = FaceDimension(model, cut.row);
        ++class6_total;
        if (d == full - 1) ++class6_facets;
        std::cout << "  " << cut.provenance.ToString(model) << " face dimension " << d
                  << "\n";
      }
    }
    std::cout << "generalized cuts (2 <= |C'| <= |H|-1) defining facets: "
              << class6_facets << "/" << class6_total << "\n";
  }
  return ok ? 0 : 1;
}

GainDistribution ParseGains(const std::string& spec) {
  if (spec == "uniform01") return GainDistribution::Uniform01();
  // int:LO:HI
  if (spec.rfind("int:", 0) == 0) {
    const auto sep = spec.find(':', 4);
    if (sep != std::string::npos) {
      return GainDistribution::IntegerRange(std::stoll(spec.substr(4, sep - 4)),
                                            std::stoll(spec.substr(sep + 1)));
    }
  }
  throw Error("bad gain distribution '" + spec + "' (uniform01 or int:LO:HI)");
}

int RunExperimentCommand(ExperimentConfig config, const std::string& problem,
                         const std::string& mode, const std::string& gains,
                         const std::string& out_path) {
  config.problem = ParseProblem(problem);
  config.mode = ParseCutMode(mode);
  config.capa_gains = ParseGains(gains);
  ValidateConfig(config);
  for (int n : config.n_values) {
    if (n > kDeskScaleMaxN) {
      std::cerr << "warning: n = " << n
                << " is full scale; solve times grow exponentially with n\n";
      break;
    }
  }
  const std::vector<GapRecord> records = RunExperiment(config);
  if (out_path.empty() || out_path == "-") {
    WriteCsv(std::cout, records);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    WriteCsv(out, records);
  }
  std::cerr << FormatSummary(Summarize(records));
  return 0;
}

int RunSummarize(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::cout << FormatSummary(Summarize(ReadCsv(in)));
  return 0;
}

}  // namespace
}  // namespace crsolve

int main(int argc, char** argv) {
  using namespace crsolve;
  CLI::App app{"Convex recoloring solver and polyhedral checks"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string level = "lp1";
  std::string mode = "separated";
  std::string format = "csv";
  std::string dump_path;
  auto* solve = app.add_subcommand("solve", "solve an instance to optimality");
  solve->add_option("instance", instance_path, "instance or CAPA JSON file")->required();
  solve->add_option("--level", level, "root relaxation")
      ->check(CLI::IsMember({"lp0", "lp1", "lp1plus"}));
  solve->add_option("--mode", mode, "cut handling")
      ->check(CLI::IsMember({"upfront", "separated"}));
  solve->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  solve->add_option("--dump-lp", dump_path, "write the root LP rows to FILE");

  ExperimentConfig config;
  std::string problem = "cr";
  std::string exp_mode = "separated";
  std::string gains = "uniform01";
  std::string out_path;
  auto* experiment = app.add_subcommand("experiment", "run a gap experiment");
  experiment->add_option("--problem", problem)->check(CLI::IsMember({"cr", "capa"}));
  experiment->add_option("--n", config.n_values, "comma-separated sizes")->delimiter(',');
  experiment->add_option("--alpha", config.alpha_values, "comma-separated alphas")
      ->delimiter(',');
  experiment->add_option("--per-cell", config.instances_per_cell)
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seed", config.seed);
  experiment->add_option("--out", out_path, "CSV file (stdout if omitted)");
  experiment->add_option("--mode", exp_mode)->check(CLI::IsMember({"upfront", "separated"}));
  experiment->add_flag("--lp1plus", config.include_lp1plus, "also solve LP1plus");
  experiment->add_option("--time-limit", config.time_limit, "seconds per instance");
  experiment->add_option("--threads", config.threads)->check(CLI::PositiveNumber);
  experiment->add_option("--gains", gains, "CAPA gains: uniform01 or int:LO:HI");
  experiment->add_flag("--paper-scale", config.allow_paper_scale,
                       "allow n above the desk-scale limit");

  bool facets = false;
  auto* verify = app.add_subcommand("verify", "check solver, cuts and faces on an instance");
  verify->add_option("instance", instance_path)->required();
  verify->add_flag("--facets", facets, "also compute face dimensions");

  std::string csv_path;
  auto* summarize = app.add_subcommand("summarize", "summary statistics of a results CSV");
  summarize->add_option("results", csv_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return RunSolve(instance_path, level, mode, format, dump_path);
    if (*experiment) return RunExperimentCommand(config, problem, exp_mode, gains, out_path);
    if (*verify) return RunVerify(instance_path, facets);
    if (*summarize) return RunSummarize(csv_path);
  } catch (const std::exception& e) {
    std::cerr << "crsolve: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
