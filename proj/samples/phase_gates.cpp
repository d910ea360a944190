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


// Diagonal phase gates sum_j |j><j| (x) diag(1, e^{i theta_j}) have Schmidt
// rank two; their power depends only on the phase differences.

#include <cstdio>
#include <vector>

#include "epower/epower.hpp"

int main() {
  using namespace epower;
  const std::vector<std::vector<double>> cases = {
      {0.0, kPi}, {0.0, 2 * kPi / 3, 4 * kPi / 3}, {0.0, 0.2, 0.4}, {0.0, kPi / 2, kPi, 3 * kPi / 2}, {0.0, 0.5, 1.1, 1.3}};
  PhaseGateOptions opts;
  opts.cross_check = true;
  for (const auto& th : cases) {
    const auto r = entangling_power_phase_gate(PhaseGateSpec(th), opts);
    std::printf("n=%zu  K_E=%.12f  branch=%-24s oracle_gap=%.1e\n", th.size(), r.value, r.branch.c_str(),
                r.diagnostics.at("oracle_gap"));
  }
  return 0;
}
