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

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace epower {

enum class Method { closed_form, line_scan, boundary, rank2_dispatch, oracle };

[[nodiscard]] inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::line_scan: return "line_scan";
    case Method::boundary: return "boundary";
    case Method::rank2_dispatch: return "rank2_dispatch";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

/** Entangling power in ebits together with where it is attained and how it was found. */
struct EntanglingPowerResult {
  double value = 0.0;
  /** Schmidt angles of the critical input (two-qubit paths). */
  std::optional<double> critical_alpha;
  std::optional<double> critical_beta;
  /** Human-readable description of the critical input. */
  std::string critical;
  Method method = Method::closed_form;
  /** Which branch of the closed form was taken. */
  std::string branch;
  /** Simplex weights of the critical input (phase-gate path). */
  std::vector<double> weights;
  /** Oracle argmax over the six input angles (α, β, θ, ξ, μ, ν). */
  std::vector<double> input_angles;
  std::map<std::string, double> diagnostics;
  std::vector<std::string> flags;

  [[nodiscard]] bool has_flag(std::string_view f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }
};

}  // namespace epower
