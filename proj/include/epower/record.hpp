// Copyright 2026 The epower Authors
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


// JSON run records emitted by the CLI. Field names are part of the public
// schema: command, params, value_ebits, critical, method, residuals, seed,
// timestamp. Doubles are written as shortest round-trip decimals.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "epower/result.hpp"

namespace epower {

struct RunRecord {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double value_ebits = 0.0;
  std::string critical;
  std::string method;
  std::map<std::string, double> residuals;
  std::uint64_t seed = 0;
  /** ISO-8601; left empty (null) by default so identical runs print identical bytes. */
  std::optional<std::string> timestamp;
};

[[nodiscard]] inline nlohmann::ordered_json to_json(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["value_ebits"] = r.value_ebits;
  j["critical"] = r.critical;
  j["method"] = r.method;
  j["residuals"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.residuals) j["residuals"][k] = v;
  j["seed"] = r.seed;
  j["timestamp"] = r.timestamp ? nlohmann::ordered_json(*r.timestamp) : nlohmann::ordered_json(nullptr);
  return j;
}

[[nodiscard]] inline RunRecord run_record_from_json(const nlohmann::ordered_json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.value_ebits = j.at("value_ebits").get<double>();
  r.critical = j.at("critical").get<std::string>();
  r.method = j.at("method").get<std::string>();
  for (const auto& [k, v] : j.at("residuals").items()) r.residuals[k] = v.get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  if (!j.at("timestamp").is_null()) r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

/** Record for a computed result; diagnostics become residuals. */
[[nodiscard]] inline RunRecord make_record(std::string command, nlohmann::ordered_json params,
                                           const EntanglingPowerResult& res, std::uint64_t seed) {
  RunRecord r;
  r.command = std::move(command);
  r.params = std::move(params);
  r.value_ebits = res.value;
  r.critical = res.critical;
  r.method = std::string(to_string(res.method));
  r.residuals = res.diagnostics;
  r.seed = seed;
  return r;
}

}  // namespace epower
