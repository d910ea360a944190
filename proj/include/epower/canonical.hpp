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
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "epower/qmath.hpp"

namespace epower {

/** Default threshold below which a Pauli coefficient counts as zero. */
inline constexpr double kSchmidtRankTol = 1e-10;

/** Slack allowed on the chamber inequalities (absorbs rounding in π/4). */
inline constexpr double kChamberSlack = 1e-12;

/**
 * Chamber angles (x, y, z) of a normalized two-qubit gate, with
 * π/4 ≥ x ≥ y ≥ z ≥ 0.
 */
class CanonicalParams {
 public:
  CanonicalParams(double x, double y, double z) : x_(x), y_(y), z_(z) {
    auto fail = [](const std::string& which) {
      throw DomainError("chamber violation: " + which + " must hold");
    };
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) fail("finite x, y, z");
    if (x > kPi / 4 + kChamberSlack) fail("pi/4 >= x");
    if (y > x + kChamberSlack) fail("x >= y");
    if (z > y + kChamberSlack) fail("y >= z");
    if (z < -kChamberSlack) fail("z >= 0");
  }

  [[nodiscard]] double x() const { return x_; }
  [[nodiscard]] double y() const { return y_; }
  [[nodiscard]] double z() const { return z_; }

  /** π/4 > y > 0: every coefficient nonzero and |c0| > 1/2. */
  [[nodiscard]] bool strict() const { return y_ > 0.0 && y_ < kPi / 4 - kChamberSlack; }

 private:
  double x_;
  double y_;
  double z_;
};

/** Coefficients of U = Σ_j c_j σ_j ⊗ σ_j. */
struct PauliCoefficients {
  std::array<cplx, 4> c{};

  [[nodiscard]] const cplx& operator[](std::size_t j) const { return c[j]; }
  [[nodiscard]] cplx& operator[](std::size_t j) { return c[j]; }

  [[nodiscard]] double norm2() const {
    return std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]) + std::norm(c[3]);
  }
  [[nodiscard]] std::array<double, 4> moduli_squared() const {
    return {std::norm(c[0]), std::norm(c[1]), std::norm(c[2]), std::norm(c[3])};
  }
};

inline void require_normalized(const PauliCoefficients& c, double tolerance = 1e-12) {
  const double n = c.norm2();
  if (std::abs(n - 1.0) > tolerance) {
    throw DomainError("Pauli coefficients are not normalized (sum |c_j|^2 = " + std::to_string(n) + ")");
  }
}

[[nodiscard]] inline bool c2_equals_c3(const PauliCoefficients& c, double tolerance = kSchmidtRankTol) {
  return std::abs(c[2] - c[3]) <= tolerance;
}

/** σ_0..σ_3 = I, X, Y, Z. */
[[nodiscard]] inline Matrix2c pauli(int j) {
  Matrix2c m;
  switch (j) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw DomainError("Pauli index must be in 0..3");
  }
  return m;
}

[[nodiscard]] inline Matrix4c kron2(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  return out;
}

[[nodiscard]] inline PauliCoefficients coefficients_from_xyz(const CanonicalParams& p) {
  const double cx = std::cos(p.x()), sx = std::sin(p.x());
  const double cy = std::cos(p.y()), sy = std::sin(p.y());
  const double cz = std::cos(p.z()), sz = std::sin(p.z());
  PauliCoefficients c;
  c[0] = cplx(cx * cy * cz, sx * sy * sz);
  c[1] = cplx(cx * sy * sz, sx * cy * cz);
  c[2] = cplx(sx * cy * sz, cx * sy * cz);
  c[3] = cplx(sx * sy * cz, cx * cy * sz);
  return c;
}

/** Σ_j c_j σ_j ⊗ σ_j written out entrywise. */
[[nodiscard]] inline Matrix4c assemble_unitary(const PauliCoefficients& c) {
  require_normalized(c);
  Matrix4c u = Matrix4c::Zero();
  u(0, 0) = c[0] + c[3];
  u(0, 3) = c[1] - c[2];
  u(1, 1) = c[0] - c[3];
  u(1, 2) = c[1] + c[2];
  u(2, 1) = c[1] + c[2];
  u(2, 2) = c[0] - c[3];
  u(3, 0) = c[1] - c[2];
  u(3, 3) = c[0] + c[3];
  return u;
}

/** Number of coefficients with |c_j| > tolerance; equals the operator Schmidt rank. */
[[nodiscard]] inline int schmidt_rank(const PauliCoefficients& c, double tolerance = kSchmidtRankTol) {
  if (!(tolerance > 0.0)) throw DomainError("Schmidt-rank tolerance must be positive");
  return static_cast<int>(std::count_if(c.c.begin(), c.c.end(),
                                        [&](const cplx& v) { return std::abs(v) > tolerance; }));
}

/**
 * Shannon entropy of the normalized operator-Schmidt spectrum. For the Pauli
 * form s_j = 2|c_j| and d_A d_B = 4, so the distribution is |c_j|^2.
 */
[[nodiscard]] inline double schmidt_strength(const PauliCoefficients& c) {
  require_normalized(c, 1e-9);
  const auto m = c.moduli_squared();
  return shannon_entropy(ProbVector{m[0], m[1], m[2], m[3]});
}

/** ((1-p), p, i√(p(1-p)), i√(p(1-p))): the product of two Schmidt-rank-two gates. */
[[nodiscard]] inline PauliCoefficients u_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("u_p needs p in [0, 1]");
  const double s = std::sqrt(p * (1.0 - p));
  PauliCoefficients c;
  c[0] = 1.0 - p;
  c[1] = p;
  c[2] = cplx(0.0, s);
  c[3] = cplx(0.0, s);
  return c;
}

/**
 * max-entry distance between the assembled u_p(p) and
 * (√(1-p) I + i√p σ2⊗σ2)(√(1-p) I + i√p σ3⊗σ3).
 */
[[nodiscard]] inline double u_p_factorization_residual(double p) {
  const Matrix4c id = Matrix4c::Identity();
  const double a = std::sqrt(1.0 - p);
  const double b = std::sqrt(p);
  const Matrix4c f2 = a * id + kI * b * kron2(pauli(2), pauli(2));
  const Matrix4c f3 = a * id + kI * b * kron2(pauli(3), pauli(3));
  return (assemble_unitary(u_p(p)) - f2 * f3).cwiseAbs().maxCoeff();
}

/** cos γ σ2 + sin γ σ3; its tensor square commutes with every gate with c2 = c3. */
[[nodiscard]] inline Matrix2c commutant(double gamma) {
  return std::cos(gamma) * pauli(2) + std::sin(gamma) * pauli(3);
}

/** Closed-form matrix of the y = z family, written in terms of (x, y). */
[[nodiscard]] inline Matrix4c y_equals_z_matrix(double x, double y) {
  const cplx ep = std::exp(kI * y);
  const cplx em = std::exp(-kI * y);
  Matrix4c u = Matrix4c::Zero();
  u(0, 0) = ep * std::cos(x - y);
  u(0, 3) = kI * ep * std::sin(x - y);
  u(1, 1) = em * std::cos(x + y);
  u(1, 2) = kI * em * std::sin(x + y);
  u(2, 1) = kI * em * std::sin(x + y);
  u(2, 2) = em * std::cos(x + y);
  u(3, 0) = kI * ep * std::sin(x - y);
  u(3, 3) = ep * std::cos(x - y);
  return u;
}

/**
 * Local-equivalence invariants (G1 complex, G2 real) computed in the magic
 * basis. Two gates are equal up to local unitaries iff these agree.
 */
struct LocalInvariants {
  cplx g1;
  double g2;
};

[[nodiscard]] inline LocalInvariants local_invariants(const Matrix4c& u) {
  Matrix4c q;
  const double r = 1.0 / std::sqrt(2.0);
  q << 1, 0, 0, kI, 0, kI, 1, 0, 0, kI, -1, 0, 1, 0, 0, -kI;
  q *= r;
  const Matrix4c ub = q.adjoint() * u * q;
  const Matrix4c m = ub.transpose() * ub;
  const cplx det = u.determinant();
  const cplx tr = m.trace();
  const cplx tr2 = (m * m).trace();
  return {tr * tr / (16.0 * det), ((tr * tr - tr2) / (4.0 * det)).real()};
}

/** One checked identity or inequality on the coefficients. */
struct IdentityCheck {
  std::string name;
  /** |lhs - rhs| for equalities; size of the violation for inequalities. */
  double residual = 0.0;
  bool is_inequality = false;
  /** False when the claim only holds under a condition that is not met here. */
  bool applicable = true;
  bool holds = true;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  double max_residual = 0.0;
  bool all_hold = true;
};

/**
 * Evaluate the fourteen coefficient relations for chamber parameters p:
 * the four norm relations of c0±c3 and c1∓c2, the dominance and ordering
 * claims, the cross-term identities and the three |c0|^2 - |cj|^2 gaps.
 */
[[nodiscard]] inline IdentityReport verify_identities(const CanonicalParams& p) {
  const auto c = coefficients_from_xyz(p);
  const double x = p.x(), y = p.y(), z = p.z();
  const double c2x = std::cos(2 * x), c2y = std::cos(2 * y), c2z = std::cos(2 * z);
  const double s2x = std::sin(2 * x), s2y = std::sin(2 * y), s2z = std::sin(2 * z);
  const auto m = c.moduli_squared();
  const bool strict = p.strict();
  // The strict ordering against 1/2 additionally needs cos2x cos2y > 0.
  const bool ordering_strict = strict && x < kPi / 4 - kChamberSlack;

  IdentityReport rep;
  auto eq = [&](std::string name, double lhs, double rhs) {
    IdentityCheck ch{std::move(name), std::abs(lhs - rhs), false, true, true};
    rep.max_residual = std::max(rep.max_residual, ch.residual);
    rep.checks.push_back(std::move(ch));
  };
  // `margin` must be >= 0 (or > 0 when strict) for the claim to hold.
  auto ineq = [&](std::string name, double margin, bool strict_claim, bool applicable) {
    IdentityCheck ch{std::move(name), 0.0, true, applicable, true};
    if (applicable) {
      ch.holds = strict_claim ? margin > 0.0 : margin >= -1e-15;
      ch.residual = ch.holds ? 0.0 : -margin;
      if (!ch.holds) rep.all_hold = false;
    }
    rep.checks.push_back(std::move(ch));
  };

  const double sum_p = std::norm(c[0] + c[3]);
  const double diff_p = std::norm(c[1] - c[2]);
  const double sum_m = std::norm(c[0] - c[3]);
  const double diff_m = std::norm(c[1] + c[2]);
  eq("c0+c3 vs c1-c2 difference", sum_p - diff_p, std::cos(2 * (x - y)));
  eq("c0-c3 vs c1+c2 difference", sum_m - diff_m, std::cos(2 * (x + y)));
  eq("c0+c3 and c1-c2 norm", sum_p + diff_p, 1.0);
  eq("c0-c3 and c1+c2 norm", sum_m + diff_m, 1.0);

  ineq("|c0| dominates", std::sqrt(m[0]) - std::sqrt(std::max({m[1], m[2], m[3]})), false, true);
  ineq("|c0| above one half", std::sqrt(m[0]) - 0.5, true, strict);

  const double b = m[0] + m[3];
  eq("|c0|^2+|c3|^2 closed form", b, 0.5 * (1.0 + c2x * c2y));
  ineq("|c0|^2+|c3|^2 above one half", b - 0.5, ordering_strict, true);
  ineq("|c1|^2+|c2|^2 below one half", 0.5 - (m[1] + m[2]), ordering_strict, true);

  const double k03 = 2.0 * (c[0] * std::conj(c[3])).real();
  const double k12 = 2.0 * (c[1] * std::conj(c[2])).real();
  eq("c0c3 cross term", k03, 0.5 * s2x * s2y);
  eq("c1c2 cross term", k12, 0.5 * s2x * s2y);
  ineq("cross term positive", k03, true, strict);

  const cplx d03 = c[0] * std::conj(c[3]) - std::conj(c[0]) * c[3];
  const cplx d12 = c[1] * std::conj(c[2]) - std::conj(c[1]) * c[2];
  const double sq03 = -0.25 * (c2x + c2y) * (c2x + c2y) * s2z * s2z;
  const double sq12 = -0.25 * (c2x - c2y) * (c2x - c2y) * s2z * s2z;
  eq("c0c3 antisymmetric square", std::abs((d03 * d03) - cplx(sq03, 0.0)), 0.0);
  eq("c1c2 antisymmetric square", std::abs((d12 * d12) - cplx(sq12, 0.0)), 0.0);
  ineq("c0c3 antisymmetric square nonpositive", -(d03 * d03).real(), false, true);
  ineq("c1c2 antisymmetric square nonpositive", -(d12 * d12).real(), false, true);

  const double l1 = std::norm(c[0] * c[3]);
  const double l2 = std::norm(c[1] * c[2]);
  eq("|c0c3|^2-|c1c2|^2", l1 - l2, 0.25 * c2x * c2y * s2z * s2z);
  ineq("|c0c3|^2 >= |c1c2|^2", l1 - l2, false, true);

  eq("|c0|^2-|c1|^2", m[0] - m[1], 0.5 * c2x * (c2y + c2z));
  eq("|c0|^2-|c2|^2", m[0] - m[2], 0.5 * c2y * (c2x + c2z));
  eq("|c0|^2-|c3|^2", m[0] - m[3], 0.5 * c2z * (c2x + c2y));
  return rep;
}

}  // namespace epower
