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


#include <random>

#include <gtest/gtest.h>

#include "epower/canonical.hpp"
#include "epower/epower2q.hpp"
#include "epower/oracle.hpp"
#include "oracles.hpp"

using namespace epower;

namespace {

Matrix4c swap_gate() {
  Matrix4c s = Matrix4c::Zero();
  s(0, 0) = s(3, 3) = s(1, 2) = s(2, 1) = 1.0;
  return s;
}

Matrix4c canonical_gate(double x, double y, double z) { return assemble_unitary(coefficients_from_xyz({x, y, z})); }

}  // namespace

TEST(ProductInput, Validation) {
  EXPECT_THROW((ProductInputParams{-0.1, 0, 0, 0, 1, 1}.validate()), DomainError);
  EXPECT_THROW((ProductInputParams{0, 0, 2 * kPi, 0, 1, 1}.validate()), DomainError);
  EXPECT_THROW((ProductInputParams{0, 0, 0, 0, 0.0, 1}.validate()), DomainError);
  EXPECT_NO_THROW((ProductInputParams{0.3, 0.2, 1.0, 5.0, 0.4, kPi / 2}.validate()));
  EXPECT_THROW((SearchConfig{1, 10, 1, 0, 1e-8}.validate()), DomainError);
}

TEST(OutputState, IdentityLeavesProductInput) {
  const ProductInputParams in{0.4, 1.1, 0.3, 2.0, 0.7, 1.2};
  const auto s = output_state(Matrix4c::Identity(), in);
  const auto expect = ref::output(Matrix4c::Identity(), 0.4, 1.1, 0.3, 2.0, 0.7, 1.2);
  EXPECT_LT((s.amplitudes() - expect).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(output_entanglement(Matrix4c::Identity(), in), 0.0, 1e-9);
}

TEST(OutputState, SwapOnBellPairsGivesTwoEbits) {
  EXPECT_NEAR(output_entanglement(swap_gate(), {kPi / 4, kPi / 4, 0, 0, kPi / 2, kPi / 2}), 2.0, 1e-12);
}

TEST(OutputState, RejectsNonUnitary) {
  Matrix4c m = Matrix4c::Identity();
  m(0, 0) = 2.0;
  EXPECT_THROW((void)output_state(m, {}), DomainError);
  EXPECT_THROW((void)brute_force_power(m), DomainError);
}

TEST(OutputState, MatchesReferenceConstruction) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const Matrix4c g = haar_unitary(4, rng);
    const ProductInputParams in{u(rng) * kPi / 2, u(rng) * kPi / 2, u(rng) * 2 * kPi,
                                u(rng) * 2 * kPi, 0.01 + u(rng) * 1.5, 0.01 + u(rng) * 1.5};
    const auto psi = ref::output(g, in.alpha, in.beta, in.theta, in.xi, in.mu, in.nu);
    EXPECT_LT((output_state(g, in).amplitudes() - psi).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_NEAR(output_entanglement(g, in), ref::cut_entropy(psi), 1e-9);
  }
}

TEST(OutputState, ReducedStateMatchesClosedForm) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const double x = u(rng) * kPi / 4, y = u(rng) * x, a = u(rng) * kPi / 2, b = u(rng) * kPi / 2;
    const auto c = coefficients_from_xyz({x, y, y});
    const auto rho = partial_trace(output_state(assemble_unitary(c), {a, b, 0, 0, kPi / 2, kPi / 2}), {2, 3});
    EXPECT_LT((rho.matrix() - reduced_density_closed_form(c, a, b).matrix()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(BruteForce, Swap) {
  const auto r = brute_force_power(swap_gate());
  EXPECT_GE(r.value, 2.0 - 1e-6);
  EXPECT_LE(r.value, 2.0);
  EXPECT_EQ(r.method, Method::oracle);
  EXPECT_EQ(r.input_angles.size(), 6u);
}

TEST(BruteForce, ControlledZ) {
  Matrix4c cz = Matrix4c::Identity();
  cz(3, 3) = -1.0;
  const auto r = brute_force_power(cz);
  EXPECT_NEAR(r.value, 1.0, 1e-6);
}

TEST(BruteForce, Example1Gate) {
  const auto r = brute_force_power(canonical_gate(0.05, 0.05, 0.05));
  EXPECT_NEAR(r.value, example1_power(0.05).value, 1e-4);
}

TEST(BruteForce, C2EqC3Gate) {
  EXPECT_NEAR(brute_force_power(canonical_gate(0.3, 0.2, 0.2)).value, entangling_power_c2eqc3(0.3, 0.2).value, 1e-4);
}

TEST(BruteForce, DeterministicForFixedSeed) {
  SearchConfig cfg;
  cfg.seed = 9;
  cfg.multi_starts = 4;
  const auto g = canonical_gate(0.5, 0.3, 0.1);
  const auto a = brute_force_power(g, cfg), b = brute_force_power(g, cfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.input_angles, b.input_angles);
}

TEST(BruteForce, LocalUnitaryInvariance) {
  std::mt19937_64 rng(43);
  const auto g = canonical_gate(0.4, 0.2, 0.2);
  const double base = entangling_power_c2eqc3(0.4, 0.2).value;
  for (int t = 0; t < 3; ++t) {
    const Matrix4c l = kron2(haar_unitary(2, rng), haar_unitary(2, rng));
    const Matrix4c r = kron2(haar_unitary(2, rng), haar_unitary(2, rng));
    EXPECT_NEAR(brute_force_power(l * g * r).value, base, 1e-4);
  }
}
