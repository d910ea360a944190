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


// The x = y = z family switches its optimal input at x0; the x = pi/4
// family is always maximized by the maximally entangled input.

#include <cstdio>

#include "epower/epower.hpp"

int main() {
  using namespace epower;
  std::printf("threshold x0 = %.12f\n\n", example1_threshold());
  std::printf("%-6s %-14s %-14s %s\n", "x", "K_E", "K_Sch", "optimal input");
  for (double x : {0.02, 0.05, 0.08, 0.1, 0.15, 0.3, 0.5, kPi / 4}) {
    const auto r = example1_power(x);
    const double ks = schmidt_strength(coefficients_from_xyz({x, x, x}));
    std::printf("%-6.3f %-14.10f %-14.10f %s\n", x, r.value, ks, r.critical.c_str());
  }
  std::printf("\n%-6s %-14s\n", "y", "K_E (x=pi/4)");
  for (double y : {0.05, 0.2, kPi / 8, 0.7}) std::printf("%-6.3f %-14.10f\n", y, example2_power(y).value);
  return 0;
}
