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

// JSON file formats.
//
// Instance: {"n": int, "kind": "path" (optional), "edges": [[u,v],...],
//            "k": int, "colors": [int or null, ...], "weights": [number, ...]}
//   Vertices are 0-based. "edges" may be omitted when "kind" is "path".
//   Weights may be integers, decimals (taken exactly as binary doubles) or
//   strings "p/q".
// CAPA:     {"n": int, "k": int, "gains": [[gain per position] per symbol]}

#ifndef CRSOLVE_IO_H_
#define CRSOLVE_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "crsolve/capa.h"
#include "crsolve/graph.h"

namespace crsolve {

Rational ParseRational(const nlohmann::json& value);
nlohmann::json RationalToJson(const Rational& r);

Instance InstanceFromJson(const nlohmann::json& j);
nlohmann::json InstanceToJson(const Instance& instance);
Instance LoadInstance(const std::string& path);

CapaInstance CapaFromJson(const nlohmann::json& j);
nlohmann::json CapaToJson(const CapaInstance& capa);
CapaInstance LoadCapa(const std::string& path);

// True if the document looks like a CAPA file (has "gains").
bool IsCapaJson(const nlohmann::json& j);
nlohmann::json LoadJsonFile(const std::string& path);

}  // namespace crsolve

#endif  // CRSOLVE_IO_H_
