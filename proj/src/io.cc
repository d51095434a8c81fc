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

#include "crsolve/io.h"

#include <cmath>
#include <fstream>

namespace crsolve {

using nlohmann::json;

Rational ParseRational(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>())
                                      : Rational(value.get<std::int64_t>());
  }
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (!std::isfinite(d)) throw Error("non-finite number");
    return Rational(d);
  }
  if (value.is_string()) {
    try {
      return Rational(value.get<std::string>());
    } catch (const std::exception&) {
      throw Error("cannot parse rational '" + value.get<std::string>() + "'");
    }
  }
  throw Error("expected a number, got " + value.dump());
}

json RationalToJson(const Rational& r) {
  if (denominator(r) == 1 && abs(numerator(r)) < (boost::multiprecision::cpp_int(1) << 53)) {
    return numerator(r).convert_to<std::int64_t>();
  }
  return ToString(r);
}

namespace {

template <typename T>
T Field(const json& j, const char* name) {
  if (!j.contains(name)) throw Error(std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw Error(std::string("bad field \"") + name + "\": " + e.what());
  }
}

}  // namespace

Instance InstanceFromJson(const json& j) {
  if (!j.is_object()) throw Error("instance must be a JSON object");
  const int n = Field<int>(j, "n");
  const int k = Field<int>(j, "k");
  const bool path_kind = j.contains("kind") && j.at("kind") == "path";
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (j.contains("edges")) {
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("edges must be [u,v] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } else if (path_kind) {
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  } else {
    throw Error("missing field \"edges\" (only \"kind\": \"path\" may omit it)");
  }
  Graph graph(n, std::move(edges));
  if (path_kind && !graph.is_path()) {
    throw Error("\"kind\" is \"path\" but the edges do not form the path 0-1-...-(n-1)");
  }

  const json& colors = j.at("colors");
  if (!colors.is_array() || static_cast<int>(colors.size()) != n) {
    throw Error("\"colors\" must be an array of n entries");
  }
  std::vector<Color> assignment;
  for (const json& c : colors) {
    assignment.push_back(c.is_null() ? kNoColor : c.get<int>());
  }
  PartialColoring coloring(k, std::move(assignment));

  std::vector<Rational> weights;
  if (j.contains("weights")) {
    const json& w = j.at("weights");
    if (!w.is_array() || static_cast<int>(w.size()) != n) {
      throw Error("\"weights\" must be an array of n entries");
    }
    for (const json& x : w) weights.push_back(ParseRational(x));
    return Instance(std::move(graph), std::move(coloring), std::move(weights));
  }
  return Instance::UnitWeights(std::move(graph), std::move(coloring));
}

json InstanceToJson(const Instance& instance) {
  json j;
  const Graph& g = instance.graph();
  j["n"] = g.vertex_count();
  if (g.is_path()) {
    j["kind"] = "path";
  } else {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
  }
  j["k"] = instance.color_count();
  json colors = json::array();
  json weights = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Color c = instance.coloring()[v];
    colors.push_back(c == kNoColor ? json(nullptr) : json(c));
    weights.push_back(RationalToJson(instance.weights()[v]));
  }
  j["colors"] = colors;
  j["weights"] = weights;
  return j;
}

json LoadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
}

Instance LoadInstance(const std::string& path) {
  return InstanceFromJson(LoadJsonFile(path));
}

bool IsCapaJson(const json& j) { return j.is_object() && j.contains("gains"); }

CapaInstance CapaFromJson(const json& j) {
  if (!j.is_object()) throw Error("CAPA instance must be a JSON object");
  const int n = Field<int>(j, "n");
  const int k = Field<int>(j, "k");
  const json& rows = j.at("gains");
  if (!rows.is_array() || static_cast<int>(rows.size()) != k) {
    throw Error("\"gains\" must have k rows");
  }
  std::vector<std::vector<Rational>> gains;
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw Error("every \"gains\" row must have n entries");
    }
    auto& out = gains.emplace_back();
    for (const json& g : row) out.push_back(ParseRational(g));
  }
  return CapaInstance(std::move(gains));
}

json CapaToJson(const CapaInstance& capa) {
  json j;
  j["n"] = capa.positions();
  j["k"] = capa.symbols();
  json rows = json::array();
  for (const auto& row : capa.gains()) {
    json r = json::array();
    for (const Rational& g : row) r.push_back(RationalToJson(g));
    rows.push_back(r);
  }
  j["gains"] = rows;
  return j;
}

CapaInstance LoadCapa(const std::string& path) { return CapaFromJson(LoadJsonFile(path)); }

}  // namespace crsolve
