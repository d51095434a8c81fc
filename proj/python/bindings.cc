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

// Thin string-in, string-out layer. Instances cross the boundary as JSON
// text and rationals as "p/q" strings; the Python package does the rest.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "crsolve/capa.h"
#include "crsolve/experiments.h"
#include "crsolve/io.h"
#include "crsolve/solve.h"

namespace py = pybind11;
using namespace crsolve;

namespace {

struct Loaded {
  std::optional<Instance> instance;
  std::optional<CapaInstance> capa;
  std::optional<Model> model;
};

Loaded Parse(const std::string& text) {
  Loaded out;
  const nlohmann::json j = nlohmann::json::parse(text);
  if (IsCapaJson(j)) {
    out.capa = CapaFromJson(j);
    out.model = CapaToModel(*out.capa);
  } else {
    out.instance = InstanceFromJson(j);
    out.model = BuildModel(*out.instance);
  }
  return out;
}

RelaxationOptions Options(const std::string& mode) {
  RelaxationOptions options;
  options.mode = ParseCutMode(mode);
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Convex recoloring solver core";
  py::register_exception<Error>(m, "CrsolveError", PyExc_ValueError);

  m.def("solve", [](const std::string& text, const std::string& level, const std::string& mode) {
    const Loaded loaded = Parse(text);
    BranchAndBoundOptions options;
    options.relaxation = Options(mode);
    py::gil_scoped_release release;
    const SolveReport report = BranchAndBound(*loaded.model, ParseRelaxationLevel(level), options);
    return loaded.instance ? SolveReportToJson(*loaded.instance, *loaded.model, report)
                           : SolveReportToJson(*loaded.model, report);
  });

  m.def("relaxation_value", [](const std::string& text, const std::string& level,
                               const std::string& mode) {
    const Loaded loaded = Parse(text);
    py::gil_scoped_release release;
    return SolveRelaxation(*loaded.model, ParseRelaxationLevel(level), Options(mode)).lp.value;
  });

  m.def("oracle_opt", [](const std::string& text) {
    const Loaded loaded = Parse(text);
    return ToString(loaded.capa ? CapaOracleOpt(*loaded.capa) : OracleOpt(*loaded.instance));
  });

  m.def("generate_cr", [](int n, int alpha, std::uint64_t seed) {
    return InstanceToJson(GenerateCrInstance(n, alpha, seed)).dump();
  });

  m.def("run_experiment",
        [](const std::string& problem, std::vector<int> n_values, std::vector<int> alpha_values,
           int per_cell, std::uint64_t seed, bool lp1plus, int threads) {
          ExperimentConfig config;
          config.problem = ParseProblem(problem);
          config.n_values = std::move(n_values);
          config.alpha_values = std::move(alpha_values);
          config.instances_per_cell = per_cell;
          config.seed = seed;
          config.include_lp1plus = lp1plus;
          config.threads = threads;
          std::ostringstream csv;
          {
            py::gil_scoped_release release;
            WriteCsv(csv, RunExperiment(config));
          }
          return csv.str();
        },
        py::arg("problem"), py::arg("n_values"), py::arg("alpha_values"), py::arg("per_cell"),
        py::arg("seed"), py::arg("lp1plus") = false, py::arg("threads") = 1);

  m.def("summarize", [](const std::string& csv) {
    std::istringstream in(csv);
    return FormatSummary(Summarize(ReadCsv(in)));
  });
}
