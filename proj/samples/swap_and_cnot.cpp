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


// Entangling power of SWAP and of the controlled-Z class, from the closed
// forms and from the brute-force oracle.

#include <cstdio>

#include "epower/epower.hpp"

int main() {
  using namespace epower;
  const auto swap = entangling_power_c2eqc3(kPi / 4, kPi / 4);
  std::printf("SWAP      closed form %.12f  (%s)\n", swap.value, swap.critical.c_str());

  const auto cnot = entangling_power_c2eqc3(kPi / 4, 0.0);
  std::printf("CNOT      closed form %.12f  (%s)\n", cnot.value, std::string(to_string(cnot.method)).c_str());

  Matrix4c cz = Matrix4c::Identity();
  cz(3, 3) = -1.0;
  const auto orc = brute_force_power(cz);
  std::printf("CZ        oracle      %.12f\n", orc.value);
  return 0;
}
