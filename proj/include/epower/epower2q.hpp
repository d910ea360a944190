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

// Entangling power of two-qubit gates U = Σ c_j σ_j⊗σ_j with c2 = c3.
//
// The critical inputs are (cos α|00> + sin α|11>) ⊗ (cos β|00> + sin β|11>)
// on (A R_A) ⊗ (B R_B). The reduced output state on B R_B is block diagonal
// with two 2×2 blocks, so its spectrum has a closed form; the maximum over
// (α, β) is attained on the line β = π/2 - α or on the α = 0 boundary.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "epower/canonical.hpp"
#include "epower/optimize.hpp"
#include "epower/qmath.hpp"
#include "epower/result.hpp"
#include "epower/schmidt2.hpp"

namespace epower {

/** Eigenvalues of the reduced output state, paired as (λ1 ≤ λ2) and (λ3 ≤ λ4). */
struct Spectrum {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double lambda4 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;

  [[nodiscard]] std::array<double, 4> values() const { return {lambda1, lambda2, lambda3, lambda4}; }
  [[nodiscard]] double sum() const { return lambda1 + lambda2 + lambda3 + lambda4; }
};

/** k = 2 Re(c0 c3*), b = |c0|^2 + |c3|^2, l1 = |c0 c3|^2, l2 = |c1 c2|^2. */
struct DerivativeConstants {
  double k = 0.0;
  double b = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

[[nodiscard]] inline DerivativeConstants derivative_constants(const PauliCoefficients& c) {
  return {2.0 * (c[0] * std::conj(c[3])).real(), std::norm(c[0]) + std::norm(c[3]), std::norm(c[0] * c[3]),
          std::norm(c[1] * c[2])};
}

namespace detail {

/** Entropy of a 4-entry distribution without heap traffic; same validation as ProbVector. */
inline double entropy4(const std::array<double, 4>& p) {
  double s = 0.0;
  for (double v : p) {
    if (v < -tol::kProbClamp || !std::isfinite(v)) throw DomainError("probability entry out of range");
    s += std::max(v, 0.0);
  }
  if (std::abs(s - 1.0) > tol::kProbSum) {
    throw DomainError("probabilities sum to " + std::to_string(s) + ", not 1");
  }
  double h = 0.0;
  for (double v : p) {
    const double q = std::max(v, 0.0) / s;
    if (q > 0.0) h -= q * std::log2(q);
  }
  return std::max(h, 0.0);
}

/** Roots of z^2 - t z + d with the small one computed as d / big (no cancellation). */
inline std::pair<double, double> quadratic_pair(double t, double d, const char* what) {
  double disc = t * t - 4.0 * d;
  if (disc < -1e-10) throw InternalError(std::string("negative discriminant in ") + what);
  disc = std::max(disc, 0.0);
  const double big = 0.5 * (t + std::sqrt(disc));
  const double small = big > 0.0 ? d / big : 0.0;
  return {small, big};
}

inline double two_re(cplx a, cplx b) { return 2.0 * (a * std::conj(b)).real(); }

}  // namespace detail

/**
 * Reduced state on (B, R_B) for the input at μ = ν = π/2, in the
 * computational basis |b r_B>. Valid for any normalized c.
 */
[[nodiscard]] inline DensityMatrix reduced_density_closed_form(const PauliCoefficients& c, double alpha,
                                                               double beta) {
  require_normalized(c);
  const double ca = std::cos(2 * alpha);
  const double cb2 = std::cos(beta) * std::cos(beta);
  const double sb2 = std::sin(beta) * std::sin(beta);
  const double hs = 0.5 * std::sin(2 * beta);
  const cplx c03 = c[0] * std::conj(c[3]);
  const cplx c30 = c[3] * std::conj(c[0]);
  const cplx c12 = c[1] * std::conj(c[2]);
  const cplx c21 = c[2] * std::conj(c[1]);
  const double n0 = std::norm(c[0]), n1 = std::norm(c[1]), n2 = std::norm(c[2]), n3 = std::norm(c[3]);

  const cplx m11 = cb2 * (n0 + n3 + ca * (c03 + c30));
  const cplx m14 = hs * (n0 - n3 + ca * (-c03 + c30));
  const cplx m41 = hs * (n0 - n3 + ca * (c03 - c30));
  const cplx m44 = sb2 * (n0 + n3 - ca * (c03 + c30));
  const cplx m22 = cb2 * (n1 + n2 - ca * (c12 + c21));
  const cplx m23 = hs * (n1 - n2 + ca * (c12 - c21));
  const cplx m32 = hs * (n1 - n2 + ca * (-c12 + c21));
  const cplx m33 = sb2 * (n1 + n2 + ca * (c12 + c21));

  // Block index -> basis: 1 -> |00>, 2 -> |10>, 3 -> |01>, 4 -> |11>.
  MatrixXc rho = MatrixXc::Zero(4, 4);
  rho(0, 0) = m11;
  rho(0, 3) = m14;
  rho(3, 0) = m41;
  rho(3, 3) = m44;
  rho(2, 2) = m22;
  rho(2, 1) = m23;
  rho(1, 2) = m32;
  rho(1, 1) = m33;
  return DensityMatrix(rho);
}

/** Closed-form eigenvalues of reduced_density_closed_form(c, α, β). */
[[nodiscard]] inline Spectrum spectrum(const PauliCoefficients& c, double alpha, double beta) {
  require_normalized(c);
  const double cc = std::cos(2 * alpha) * std::cos(2 * beta);
  const double s2a = std::sin(2 * alpha), s2b = std::sin(2 * beta);
  const double ss = s2a * s2a * s2b * s2b;
  const auto dc = derivative_constants(c);
  Spectrum sp;
  sp.t1 = dc.b + cc * dc.k;
#ifdef EPOWER_FAULT_T2_SIGN
  sp.t2 = std::norm(c[1]) + std::norm(c[2]) + cc * detail::two_re(c[1], c[2]);
#else
  sp.t2 = std::norm(c[1]) + std::norm(c[2]) - cc * detail::two_re(c[1], c[2]);
#endif
  std::tie(sp.lambda1, sp.lambda2) = detail::quadratic_pair(sp.t1, dc.l1 * ss, "t1 block");
  std::tie(sp.lambda3, sp.lambda4) = detail::quadratic_pair(sp.t2, dc.l2 * ss, "t2 block");
  return sp;
}

[[nodiscard]] inline double entanglement_at(const PauliCoefficients& c, double alpha, double beta) {
  return detail::entropy4(spectrum(c, alpha, beta).values());
}

/** Eigenvalues on the line β = π/2 - α, where cos2α cos2β = -cos^2 2α and sin2β = sin2α. */
[[nodiscard]] inline Spectrum line_spectrum(const PauliCoefficients& c, double alpha) {
  require_normalized(c);
  const double u = std::cos(2 * alpha) * std::cos(2 * alpha);
  const double s = std::sin(2 * alpha);
  const double s4 = s * s * s * s;
  const auto dc = derivative_constants(c);
  Spectrum sp;
  sp.t1 = dc.b - u * dc.k;
  sp.t2 = std::norm(c[1]) + std::norm(c[2]) + u * detail::two_re(c[1], c[2]);
  std::tie(sp.lambda1, sp.lambda2) = detail::quadratic_pair(sp.t1, dc.l1 * s4, "line t1 block");
  std::tie(sp.lambda3, sp.lambda4) = detail::quadratic_pair(sp.t2, dc.l2 * s4, "line t2 block");
  return sp;
}

/** E(α, π/2 - α). */
[[nodiscard]] inline double line_profile_value(const PauliCoefficients& c, double alpha) {
  return detail::entropy4(line_spectrum(c, alpha).values());
}

struct PartialDerivatives {
  double f_alpha = 0.0;
  double f_beta = 0.0;
};

inline constexpr double kDegenerateEigenvalue = 1e-12;

/**
 * Analytic ∂E/∂α and ∂E/∂β at (α, β) in ebits per radian. Refuses points
 * where an eigenvalue is ≤ 1e-12 or a block is degenerate, since the
 * logarithms are singular there.
 */
[[nodiscard]] inline PartialDerivatives partial_derivatives(const PauliCoefficients& c, double alpha, double beta) {
  const auto sp = spectrum(c, alpha, beta);
  for (double l : sp.values()) {
    if (l <= kDegenerateEigenvalue) throw DomainError("degenerate spectrum: derivative is singular");
  }
  const auto dc = derivative_constants(c);
  const double s2a = std::sin(2 * alpha), c2a = std::cos(2 * alpha);
  const double s2b = std::sin(2 * beta), c2b = std::cos(2 * beta);
  const double s1 = sp.lambda2 - sp.lambda1;
  const double s2 = sp.lambda4 - sp.lambda3;
  if (s1 <= kDegenerateEigenvalue || s2 <= kDegenerateEigenvalue) {
    throw DomainError("degenerate spectrum: coincident eigenvalues in a block");
  }
  const double r1 = std::log2(sp.lambda2 / sp.lambda1);
  const double r2 = std::log2(sp.lambda4 / sp.lambda3);
  const double g = std::log2(dc.l1 / dc.l2) + sp.t1 / s1 * r1 - sp.t2 / s2 * r2;
  const double h = 4.0 * dc.l1 / s1 * r1 + 4.0 * dc.l2 / s2 * r2;
  return {dc.k * s2a * c2b * g + s2a * c2a * s2b * s2b * h, dc.k * c2a * s2b * g + s2b * c2b * s2a * s2a * h};
}

namespace detail {

inline PauliCoefficients require_c2eqc3_params(double x, double y) {
  const CanonicalParams p(x, y, y);
  return coefficients_from_xyz(p);
}

/** β at α = 0 where t1 = 1/2 (output H = 1); clamped into [0, π/2]. */
inline double half_split_beta(const PauliCoefficients& c) {
  const auto dc = derivative_constants(c);
  if (std::abs(dc.k) < 1e-15) return kPi / 4;
  return 0.5 * std::acos(std::clamp((0.5 - dc.b) / dc.k, -1.0, 1.0));
}

}  // namespace detail

/**
 * Maximum of E over the boundary {α or β in {0, π/4}} for c from (x, y, y):
 * max{1, E(π/4, π/4)} when cos(2x + 2y) ≤ 0, else max{E(0, π/2), E(π/4, π/4)}.
 */
[[nodiscard]] inline EntanglingPowerResult boundary_maximum(const PauliCoefficients& c, double x, double y) {
  require_normalized(c);
  if (!c2_equals_c3(c)) throw DomainError("boundary maximum needs c2 = c3");
  const double e_center = entanglement_at(c, kPi / 4, kPi / 4);
  const double cs = std::cos(2 * x + 2 * y);
  EntanglingPowerResult r;
  r.method = Method::boundary;
  r.diagnostics["cos_2x_plus_2y"] = cs;
  r.diagnostics["e_center"] = e_center;
  if (cs <= 0.0) {
    r.branch = "cos(2x+2y)<=0";
    if (1.0 >= e_center) {
      r.value = 1.0;
      r.critical_alpha = 0.0;
      r.critical_beta = detail::half_split_beta(c);
      r.critical = "product on A side (alpha=0), output split 1/2";
    } else {
      r.value = e_center;
      r.critical_alpha = kPi / 4;
      r.critical_beta = kPi / 4;
      r.critical = "maximally entangled (alpha=beta=pi/4)";
    }
  } else {
    r.branch = "cos(2x+2y)>0";
    const double e_edge = entanglement_at(c, 0.0, kPi / 2);
    r.diagnostics["e_edge"] = e_edge;
    if (e_edge >= e_center) {
      r.value = e_edge;
      r.critical_alpha = 0.0;
      r.critical_beta = kPi / 2;
      r.critical = "product (alpha=0 line edge)";
    } else {
      r.value = e_center;
      r.critical_alpha = kPi / 4;
      r.critical_beta = kPi / 4;
      r.critical = "maximally entangled (alpha=beta=pi/4)";
    }
  }
  return r;
}

/** Ties between an edge and an interior maximum within this are reported as the edge. */
inline constexpr double kTieTolerance = 1e-9;
inline constexpr int kLineGridPoints = 2001;

/**
 * K_E of the gate with chamber parameters (x, y, y). Gates of Schmidt rank
 * below four (y = 0) are controlled-phase gates and are routed to the
 * phase-gate solver with phases (0, 4x).
 */
[[nodiscard]] inline EntanglingPowerResult entangling_power_c2eqc3(double x, double y) {
  const auto c = detail::require_c2eqc3_params(x, y);

  if (schmidt_rank(c) < 4) {
    auto r = entangling_power_phase_gate(PhaseGateSpec{0.0, 4.0 * x});
    r.method = Method::rank2_dispatch;
    r.branch = "schmidt_rank<4";
    r.critical = "controlled-phase equivalent diag(1,1,1,exp(4ix)); " + r.critical;
    r.diagnostics["schmidt_rank"] = schmidt_rank(c);
    return r;
  }

  auto f = [&](double a) { return line_profile_value(c, a); };
  const auto line = opt::grid_then_golden_maximize(f, 0.0, kPi / 4, kLineGridPoints, 1e-10);
  const double e0 = f(0.0);
  const double e4 = f(kPi / 4);
  const double edge = std::max(e0, e4);

  EntanglingPowerResult r;
  r.diagnostics["line_max"] = line.value;
  r.diagnostics["line_argmax_alpha"] = line.x;
  r.diagnostics["edge_alpha_0"] = e0;
  r.diagnostics["edge_alpha_pi4"] = e4;
  r.diagnostics["interior_excess"] = line.value - edge;
  r.diagnostics["cos_2x_plus_2y"] = std::cos(2 * x + 2 * y);
  if (line.value - edge > kTieTolerance) r.flags.emplace_back("conjecture_counterexample");

  if (edge >= line.value - kTieTolerance) {
    r.method = Method::boundary;
    r.value = std::max(edge, line.value);
    if (e4 >= e0) {
      r.critical_alpha = kPi / 4;
      r.critical = "maximally entangled (alpha=pi/4)";
    } else {
      r.critical_alpha = 0.0;
      r.critical = "product (alpha=0 line edge)";
    }
    r.branch = "line_edge";
  } else {
    r.method = Method::line_scan;
    r.value = line.value;
    r.critical_alpha = line.x;
    r.critical = "interior of the alpha+beta=pi/2 line";
    r.branch = "line_interior";
  }
  r.critical_beta = kPi / 2 - *r.critical_alpha;

  if (std::cos(2 * x + 2 * y) <= 0.0 && 1.0 >= r.value - kTieTolerance) {
    r.value = std::max(1.0, r.value);
    r.method = Method::boundary;
    r.branch = "cos(2x+2y)<=0 split";
    r.critical_alpha = 0.0;
    r.critical_beta = detail::half_split_beta(c);
    r.critical = "product on A side (alpha=0), output split 1/2";
  }
  return r;
}

struct ConjectureGap {
  /** max over the grid minus the larger edge value; positive beyond 1e-9 is a counterexample. */
  double gap = 0.0;
  double alpha_at_max = 0.0;
  bool flagged = false;
};

[[nodiscard]] inline ConjectureGap conjecture_gap(double x, double y, int grid_n = 4001) {
  if (grid_n < 2) throw DomainError("grid needs at least two points");
  const auto c = detail::require_c2eqc3_params(x, y);
  const double edge = std::max(line_profile_value(c, 0.0), line_profile_value(c, kPi / 4));
  ConjectureGap g;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_n; ++i) {
    const double a = (kPi / 4) * i / (grid_n - 1);
    const double v = line_profile_value(c, a);
    if (v > best) {
      best = v;
      g.alpha_at_max = a;
    }
  }
  g.gap = best - edge;
  g.flagged = g.gap > kTieTolerance;
  return g;
}

/** H(cos^2 2x, sin^2 2x): the α = 0 edge for the x = y = z family. */
[[nodiscard]] inline double example1_edge_value(double x) {
  const double c = std::cos(2 * x);
  return binary_entropy(c * c);
}

/** H(cos^6 x + sin^6 x, cos^2 x sin^2 x ×3): the α = π/4 edge for x = y = z. */
[[nodiscard]] inline double example1_center_value(double x) {
  const double cs = std::cos(x) * std::cos(x) * std::sin(x) * std::sin(x);
  return detail::entropy4({1.0 - 3.0 * cs, cs, cs, cs});
}

/** Root of the two edge values on [0.01, π/8]; computed once. */
[[nodiscard]] inline double example1_threshold() {
  static const double root = opt::bisect_root(
      [](double t) { return example1_edge_value(t) - example1_center_value(t); }, 0.01, kPi / 8, 1e-12);
  return root;
}

[[nodiscard]] inline EntanglingPowerResult example1_power(double x) {
  if (!(x > 0.0 && x <= kPi / 4 + kChamberSlack)) throw DomainError("example 1 needs x in (0, pi/4]");
  const double x0 = example1_threshold();
  const double ve = example1_edge_value(x);
  const double vc = example1_center_value(x);
  EntanglingPowerResult r;
  r.method = Method::closed_form;
  r.diagnostics["x0"] = x0;
  r.diagnostics["edge_value"] = ve;
  r.diagnostics["center_value"] = vc;
  if (std::abs(ve - vc) <= kTieTolerance) r.flags.emplace_back("tie");
  if (x <= x0) {
    r.value = ve;
    r.critical = "product (alpha=0 line edge)";
    r.critical_alpha = 0.0;
    r.critical_beta = kPi / 2;
    r.branch = "x<=x0";
  } else {
    r.value = vc;
    r.critical = "maximally entangled (alpha=pi/4)";
    r.critical_alpha = kPi / 4;
    r.critical_beta = kPi / 4;
    r.branch = "x>x0";
  }
  return r;
}

[[nodiscard]] inline EntanglingPowerResult example2_power(double y) {
  if (!(y > 0.0 && y < kPi / 4)) throw DomainError("example 2 needs y in (0, pi/4)");
  const double c4 = std::pow(std::cos(y), 4) + std::pow(std::sin(y), 4);
  const double cs = std::cos(y) * std::cos(y) * std::sin(y) * std::sin(y);
  EntanglingPowerResult r;
  r.method = Method::closed_form;
  r.value = detail::entropy4({c4 / 2, c4 / 2, cs, cs});
  r.critical = "maximally entangled (alpha=beta=pi/4)";
  r.critical_alpha = kPi / 4;
  r.critical_beta = kPi / 4;
  r.branch = "alpha=pi/4";
  return r;
}

// Line profile of the x = y = z family written in terms of |c|^2 = cos^2 x sin^2 x
// and the variable y = -cos 4α in (-1, 1). Everything is evaluated in α so
// that both endpoints are reached without cancellation.

namespace detail {

struct E2Lambdas {
  double l1, l2, l3, l4;
};

inline E2Lambdas e2_lambdas_alpha(double alpha, double csq) {
  const double c0sq = 1.0 - 3.0 * csq;
  const double yv = -std::cos(4 * alpha);
  const double s2 = std::sin(2 * alpha);
  const double a = c0sq + yv * csq;
  const double rad = std::sqrt(std::max(0.0, (c0sq - csq) * (c0sq - csq * yv * yv)));
  const double l2 = 0.5 * (a + rad);
  const double l1 = l2 > 0.0 ? csq * c0sq * s2 * s2 * s2 * s2 / l2 : 0.0;
  const double sa = std::sin(alpha), ca = std::cos(alpha);
  return {l1, l2, 4.0 * csq * sa * sa * sa * sa, 4.0 * csq * ca * ca * ca * ca};
}

inline void require_csq(double csq) {
  if (!(csq > 0.0 && csq < 0.25)) throw DomainError("|c|^2 must lie in (0, 1/4)");
}

}  // namespace detail

/** E2 at α (y = -cos 4α). */
[[nodiscard]] inline double e2_value_alpha(double alpha, double csq) {
  detail::require_csq(csq);
  const auto l = detail::e2_lambdas_alpha(alpha, csq);
  return detail::entropy4({l.l1, l.l2, l.l3, l.l4});
}

[[nodiscard]] inline double e2_value(double yvar, double csq) {
  if (!(yvar >= -1.0 && yvar <= 1.0)) throw DomainError("y must lie in [-1, 1]");
  return e2_value_alpha(0.25 * std::acos(-yvar), csq);
}

/** dE2/dy evaluated at α in (0, π/4). */
[[nodiscard]] inline double e2_derivative_alpha(double alpha, double csq) {
  detail::require_csq(csq);
  if (!(alpha > 0.0 && alpha < kPi / 4)) throw DomainError("alpha must lie in (0, pi/4)");
  const auto l = detail::e2_lambdas_alpha(alpha, csq);
  const double yv = -std::cos(4 * alpha);
  const double c4a = std::cos(4 * alpha);
  const double c0sq = 1.0 - 3.0 * csq;
  // sqrt(2/(1-y)) = 1/cos2α and 1 - |c|^2 (3 + y^2) = |c0|^2 - |c|^2 cos^2 4α.
  const double t_a = -4.0 * std::log2(std::tan(alpha)) / std::cos(2 * alpha);
  const double t_b = -std::sqrt((1.0 - 4.0 * csq) / (c0sq - csq * c4a * c4a)) * yv * std::log2(l.l1 / l.l2);
  const double t_c = std::log2(csq / c0sq);
  return 0.5 * csq * (t_a + t_b + t_c);
}

/** dE2/dy for y in the open interval (-1, 1); the endpoints have only limits. */
[[nodiscard]] inline double e2_derivative(double yvar, double csq) {
  if (!(yvar > -1.0 && yvar < 1.0)) throw DomainError("dE2/dy is singular at y = +-1; use the limit constants");
  return e2_derivative_alpha(0.25 * std::acos(-yvar), csq);
}

[[nodiscard]] inline double e2_derivative_limit_plus_one(double csq) {
  detail::require_csq(csq);
  return 2.0 * csq / std::log(2.0);
}

[[nodiscard]] inline double e2_derivative_limit_minus_one(double csq) {
  detail::require_csq(csq);
  return csq * (std::log2(4.0 * csq) - std::log2(1.0 - 4.0 * csq));
}

/** Interior y-grid used by both scans: y_i = -1 + 2(i+1)/(n+1). */
[[nodiscard]] inline double scan_y(int i, int n) { return -1.0 + 2.0 * (i + 1) / (n + 1.0); }

/** F1 grid row j: |c|^2 in [1/8, 1/4). */
[[nodiscard]] inline double f1_csq(int j, int n) { return 0.125 + 0.125 * j / static_cast<double>(n); }

/** F2 grid row j: |c|^2 in (0, 1/8). */
[[nodiscard]] inline double f2_csq(int j, int n) { return 0.125 * (j + 1) / (n + 1.0); }

[[nodiscard]] inline double f1_value(double yvar, double csq) { return e2_derivative(yvar, csq); }

/** Second central difference of E2 in y with step min(1e-3, (1-|y|)/4). */
[[nodiscard]] inline double f2_value(double yvar, double csq) {
  if (!(yvar > -1.0 && yvar < 1.0)) throw DomainError("F2 needs y in (-1, 1)");
  const double h = std::min(1e-3, (1.0 - std::abs(yvar)) / 4.0);
  return (e2_value(yvar + h, csq) - 2.0 * e2_value(yvar, csq) + e2_value(yvar - h, csq)) / (h * h);
}

}  // namespace epower
