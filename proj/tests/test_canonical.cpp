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
#include "oracles.hpp"

using namespace epower;

namespace {

double coeff_distance(const PauliCoefficients& c, const std::array<cplx, 4>& r) {
  double d = 0;
  for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(c[j] - r[static_cast<std::size_t>(j)]));
  return d;
}

CanonicalParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double x = u(rng) * kPi / 4, y = u(rng) * x, z = u(rng) * y;
  return {x, y, z};
}

}  // namespace

TEST(Coefficients, SpecialPoints) {
  EXPECT_LT(coeff_distance(coefficients_from_xyz({0, 0, 0}), {1, 0, 0, 0}), 1e-15);
  const double x = 0.37;
  EXPECT_LT(coeff_distance(coefficients_from_xyz({x, 0, 0}), {std::cos(x), cplx(0, std::sin(x)), 0, 0}), 1e-15);
  for (double m : coefficients_from_xyz({kPi / 4, kPi / 4, kPi / 4}).moduli_squared()) EXPECT_NEAR(m, 0.25, 1e-15);
}

TEST(Coefficients, MatchReferenceAndNormalize) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_params(rng);
    const auto c = coefficients_from_xyz(p);
    EXPECT_LT(coeff_distance(c, ref::coeffs(p.x(), p.y(), p.z())), 1e-15);
    EXPECT_NEAR(c.norm2(), 1.0, 1e-12);
  }
}

TEST(Coefficients, ChamberViolationNamesTheInequality) {
  auto message = [](double x, double y, double z) {
    try {
      CanonicalParams p(x, y, z);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(1.0, 0.1, 0.0).find("pi/4 >= x"), std::string::npos);
  EXPECT_NE(message(0.3, 0.4, 0.0).find("x >= y"), std::string::npos);
  EXPECT_NE(message(0.5, 0.3, 0.4).find("y >= z"), std::string::npos);
  EXPECT_NE(message(0.5, 0.3, -0.1).find("z >= 0"), std::string::npos);
}

TEST(AssembleUnitary, MatchesExplicitSumAndIsUnitary) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_params(rng);
    const auto u = assemble_unitary(coefficients_from_xyz(p));
    EXPECT_LT((u - ref::gate(ref::coeffs(p.x(), p.y(), p.z()))).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_TRUE(is_unitary(u, 1e-10));
  }
  EXPECT_LT((assemble_unitary(coefficients_from_xyz({0, 0, 0})) - Matrix4c::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(AssembleUnitary, RejectsUnnormalizedCoefficients) {
  PauliCoefficients c;
  c[0] = 1.0;
  c[1] = 0.1;
  EXPECT_THROW((void)assemble_unitary(c), DomainError);
}

TEST(AssembleUnitary, SwapPointIsSwapUpToPhase) {
  Matrix4c swap = Matrix4c::Zero();
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  const auto u = assemble_unitary(coefficients_from_xyz({kPi / 4, kPi / 4, kPi / 4}));
  EXPECT_LT(phase_aligned_distance(u, swap), 1e-12);
}

TEST(AssembleUnitary, ControlledPhasePointIsLocallyControlledZ) {
  const auto u = assemble_unitary(coefficients_from_xyz({kPi / 4, 0, 0}));
  Matrix4c cz = Matrix4c::Identity();
  cz(3, 3) = std::exp(kI * kPi);
  const auto a = local_invariants(u), b = local_invariants(cz);
  EXPECT_LT(std::abs(a.g1 - b.g1), 1e-12);
  EXPECT_NEAR(a.g2, b.g2, 1e-12);
  // And a generic x differs from the controlled-Z class.
  const auto other = local_invariants(assemble_unitary(coefficients_from_xyz({0.3, 0, 0})));
  EXPECT_GT(std::abs(other.g1 - b.g1) + std::abs(other.g2 - b.g2), 1e-3);
}

TEST(AssembleUnitary, YEqualsZFamilyMatchesClosedMatrix) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const double x = u(rng) * kPi / 4, y = u(rng) * x;
    const auto m = assemble_unitary(coefficients_from_xyz({x, y, y}));
    EXPECT_LT((m - y_equals_z_matrix(x, y)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Identities, SymmetricPoint) {
  const auto rep = verify_identities({kPi / 4, kPi / 4, kPi / 4});
  EXPECT_LE(rep.max_residual, 1e-12);
  EXPECT_TRUE(rep.all_hold);
  const auto m = coefficients_from_xyz({kPi / 4, kPi / 4, kPi / 4}).moduli_squared();
  EXPECT_NEAR(m[0] + m[3], 0.5, 1e-15);
}

TEST(Identities, GenericPoints) {
  EXPECT_LE(verify_identities({0.7, 0.5, 0.3}).max_residual, 1e-12);
  EXPECT_TRUE(verify_identities({0.7, 0.5, 0.3}).all_hold);
  const auto c = coefficients_from_xyz({0.5, 0.4, 0.4});
  EXPECT_NEAR(2.0 * (c[0] * std::conj(c[3])).real(), 0.5 * std::sin(1.0) * std::sin(0.8), 1e-15);
  EXPECT_GT(0.5 * std::sin(1.0) * std::sin(0.8), 0.0);
}

TEST(Identities, ThousandRandomChamberPoints) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 1000; ++t) {
    const auto p = random_params(rng);
    const auto rep = verify_identities(p);
    ASSERT_LE(rep.max_residual, 1e-12) << p.x() << " " << p.y() << " " << p.z();
    ASSERT_TRUE(rep.all_hold);
  }
}

TEST(Identities, EqualModuliPropagate) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  // |c0| = |c1| happens at x = π/4; then |c2| = |c3|.
  for (int t = 0; t < 100; ++t) {
    const double y = u(rng) * kPi / 4, z = u(rng) * y;
    const auto m = coefficients_from_xyz({kPi / 4, y, z}).moduli_squared();
    EXPECT_NEAR(m[0], m[1], 1e-10);
    EXPECT_NEAR(m[2], m[3], 1e-10);
  }
}

TEST(SchmidtRank, Examples) {
  EXPECT_EQ(schmidt_rank(coefficients_from_xyz({0, 0, 0})), 1);
  EXPECT_EQ(schmidt_rank(coefficients_from_xyz({0.3, 0, 0})), 2);
  EXPECT_EQ(schmidt_rank(coefficients_from_xyz({kPi / 4, kPi / 4, kPi / 4})), 4);
}

TEST(SchmidtRank, FullUnderStrictChamberWithPositiveZ) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    const auto p = random_params(rng);
    if (p.strict() && p.z() > 1e-6) EXPECT_EQ(schmidt_rank(coefficients_from_xyz(p)), 4);
  }
}

TEST(SchmidtStrength, Examples) {
  EXPECT_EQ(schmidt_strength(coefficients_from_xyz({0, 0, 0})), 0.0);
  EXPECT_NEAR(schmidt_strength(coefficients_from_xyz({kPi / 4, kPi / 4, kPi / 4})), 2.0, 1e-14);
  EXPECT_NEAR(schmidt_strength(coefficients_from_xyz({0.05, 0.05, 0.05})), ref::frozen::ksch_005, 1e-13);
  EXPECT_NEAR(schmidt_strength(coefficients_from_xyz({0.08, 0.08, 0.08})), ref::frozen::ksch_008, 1e-13);
}

TEST(UP, EndpointsAndFactorization) {
  EXPECT_LT(coeff_distance(u_p(0.0), {1, 0, 0, 0}), 1e-15);
  EXPECT_LT(coeff_distance(u_p(0.5), {0.5, 0.5, cplx(0, 0.5), cplx(0, 0.5)}), 1e-15);
  EXPECT_LE(u_p_factorization_residual(0.2), 1e-12);
  EXPECT_THROW((void)u_p(1.5), DomainError);
  EXPECT_THROW((void)u_p(-0.1), DomainError);
}

TEST(Commutant, CommutesWithEveryC2EqC3Gate) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const double x = u(rng) * kPi / 4, y = u(rng) * x, gamma = 2 * kPi * u(rng);
    const auto g = assemble_unitary(coefficients_from_xyz({x, y, y}));
    const auto v = kron2(commutant(gamma), commutant(gamma));
    EXPECT_LT((v * g - g * v).cwiseAbs().maxCoeff(), 1e-12);
  }
}
