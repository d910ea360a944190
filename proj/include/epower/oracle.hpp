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

// Brute-force entangling power of a two-qubit gate. Builds the full
// 16-dimensional output state on (A, R_A, B, R_B) for the product input
//
//   (cos α|00> + sin α|1>(e^{iθ} cos μ|0> + sin μ|1>))
//     ⊗ (cos β|00> + sin β|1>(e^{iξ} cos ν|0> + sin ν|1>))
//
// and maximizes the entropy of the B R_B marginal numerically. Shares no
// code with the closed forms beyond Eigen.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "epower/optimize.hpp"
#include "epower/qmath.hpp"
#include "epower/result.hpp"

namespace epower {

/** Six input angles; validated against α, β ∈ [0, π/2], θ, ξ ∈ [0, 2π), μ, ν ∈ (0, π/2]. */
struct ProductInputParams {
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.0;
  double xi = 0.0;
  double mu = kPi / 2;
  double nu = kPi / 2;

  void validate() const {
    auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
    if (!in(alpha, 0.0, kPi / 2) || !in(beta, 0.0, kPi / 2)) throw DomainError("alpha, beta must lie in [0, pi/2]");
    if (!(theta >= 0.0 && theta < 2 * kPi) || !(xi >= 0.0 && xi < 2 * kPi)) {
      throw DomainError("theta, xi must lie in [0, 2pi)");
    }
    if (!(mu > 0.0 && mu <= kPi / 2) || !(nu > 0.0 && nu <= kPi / 2)) throw DomainError("mu, nu must lie in (0, pi/2]");
  }

  [[nodiscard]] std::array<double, 6> as_array() const { return {alpha, beta, theta, xi, mu, nu}; }
};

struct SearchConfig {
  int grid_points_per_axis = 13;
  int refinement_iterations = 200;
  int multi_starts = 32;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;

  void validate() const {
    if (grid_points_per_axis < 2 || refinement_iterations < 1 || multi_starts < 1 || !(tolerance > 0.0)) {
      throw DomainError("search configuration values must be positive");
    }
  }
};

namespace oracle_detail {

using Vector16c = Eigen::Matrix<cplx, 16, 1>;

inline Eigen::Vector2cd ancilla(double angle, double phase, double mix) {
  Eigen::Vector2cd v;
  v << std::exp(kI * phase) * std::cos(mix), std::sin(mix);
  return std::sin(angle) * v;
}

/** Local 4-vector (index 2*system + reference) for one side. */
inline Eigen::Vector4cd side(double angle, double phase, double mix) {
  Eigen::Vector4cd s = Eigen::Vector4cd::Zero();
  s[0] = std::cos(angle);
  const auto v = ancilla(angle, phase, mix);
  s[2] = v[0];
  s[3] = v[1];
  return s;
}

/** Output amplitudes indexed a*8 + rA*4 + b*2 + rB; U acts on |a b>. */
inline Vector16c apply(const Matrix4c& u, const std::array<double, 6>& p) {
  const auto psi = side(p[0], p[2], p[4]);
  const auto phi = side(p[1], p[3], p[5]);
  Vector16c out = Vector16c::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int ra = 0; ra < 2; ++ra) {
        for (int rb = 0; rb < 2; ++rb) {
          const cplx amp = psi[2 * a + ra] * phi[2 * b + rb];
          if (amp == cplx(0.0)) continue;
          for (int a2 = 0; a2 < 2; ++a2) {
            for (int b2 = 0; b2 < 2; ++b2) {
              out[a2 * 8 + ra * 4 + b2 * 2 + rb] += u(2 * a2 + b2, 2 * a + b) * amp;
            }
          }
        }
      }
    }
  }
  return out;
}

/** Entropy of the (B, R_B) marginal of a 16-amplitude state. */
inline double marginal_entropy(const Vector16c& out) {
  Eigen::Matrix4cd m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = out[4 * i + j];
  }
  const Eigen::Matrix4cd rho = m.transpose() * m.conjugate();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double tr = 0.0;
  for (int i = 0; i < 4; ++i) tr += std::max(ev[i], 0.0);
  double h = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double q = std::max(ev[i], 0.0) / tr;
    if (q > 0.0) h -= q * std::log2(q);
  }
  return std::max(h, 0.0);
}

inline double objective(const Matrix4c& u, const std::array<double, 6>& p) { return marginal_entropy(apply(u, p)); }

}  // namespace oracle_detail

/** U applied to the product input; dims (2, 2, 2, 2) ordered A, R_A, B, R_B. */
[[nodiscard]] inline StateVector output_state(const Matrix4c& u, const ProductInputParams& in) {
  if (!is_unitary(u, 1e-10)) throw DomainError("gate is not unitary");
  in.validate();
  const auto out = oracle_detail::apply(u, in.as_array());
  return StateVector(VectorXc(out), {2, 2, 2, 2});
}

/** Entanglement across A R_A : B R_B of output_state(u, in). */
[[nodiscard]] inline double output_entanglement(const Matrix4c& u, const ProductInputParams& in) {
  return von_neumann_entropy(partial_trace(output_state(u, in), {2, 3}));
}

/**
 * Coarse stage: a G×G (α, β) slice at μ = ν = π/2 plus 8G² Halton points in
 * the full six-angle box. The best `multi_starts` points seed Nelder–Mead
 * runs over unconstrained angles (the objective is periodic), each followed
 * by one restart with a smaller simplex. Starts are processed in index order
 * so the result is deterministic.
 */
[[nodiscard]] inline EntanglingPowerResult brute_force_power(const Matrix4c& u, const SearchConfig& cfg = {}) {
  if (!is_unitary(u, 1e-10)) throw DomainError("gate is not unitary");
  cfg.validate();
  using P = std::array<double, 6>;
  const int g = cfg.grid_points_per_axis;

  std::vector<P> pts;
  std::vector<double> vals;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      pts.push_back({(kPi / 2) * i / (g - 1), (kPi / 2) * j / (g - 1), 0.0, 0.0, kPi / 2, kPi / 2});
    }
  }
  static constexpr std::array<unsigned, 6> kBases = {2, 3, 5, 7, 11, 13};
  static constexpr std::array<double, 6> kSpan = {kPi / 2, kPi / 2, 2 * kPi, 2 * kPi, kPi / 2, kPi / 2};
  // The seed offsets the Halton index so different seeds probe different points.
  const std::size_t offset = 1 + static_cast<std::size_t>(cfg.seed % 1000003ULL) * 7919;
  const int halton_n = 8 * g * g;
  for (int i = 0; i < halton_n; ++i) {
    P p{};
    for (int d = 0; d < 6; ++d) p[d] = kSpan[d] * opt::halton(offset + static_cast<std::size_t>(i), kBases[d]);
    pts.push_back(p);
  }
  vals.reserve(pts.size());
  for (const auto& p : pts) vals.push_back(oracle_detail::objective(u, p));

  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });

  int evaluations = static_cast<int>(pts.size());
  double best = vals[order[0]];
  P best_p = pts[order[0]];
  bool best_converged = true;
  int converged_starts = 0;
  const int starts = std::min<int>(cfg.multi_starts, static_cast<int>(pts.size()));
  auto f = [&](const std::vector<double>& x) {
    P p{};
    std::copy(x.begin(), x.end(), p.begin());
    return oracle_detail::objective(u, p);
  };
  for (int s = 0; s < starts; ++s) {
    const auto& p0 = pts[order[static_cast<std::size_t>(s)]];
    auto r = opt::nelder_mead_maximize(f, std::vector<double>(p0.begin(), p0.end()), 0.1, cfg.refinement_iterations,
                                       cfg.tolerance * 1e-4, cfg.tolerance);
    auto r2 = opt::nelder_mead_maximize(f, r.x, 0.01, cfg.refinement_iterations, cfg.tolerance * 1e-4, cfg.tolerance);
    evaluations += r.evaluations + r2.evaluations;
    if (r2.value < r.value) r2 = r;
    if (r2.converged) ++converged_starts;
    if (r2.value > best) {
      best = r2.value;
      std::copy(r2.x.begin(), r2.x.end(), best_p.begin());
      best_converged = r2.converged;
    }
  }

  EntanglingPowerResult res;
  res.method = Method::oracle;
  res.value = std::min(best, 2.0);
  res.input_angles.assign(best_p.begin(), best_p.end());
  res.critical_alpha = best_p[0];
  res.critical_beta = best_p[1];
  res.critical = "numerical argmax (alpha, beta, theta, xi, mu, nu), angles not reduced";
  res.branch = "multistart_nelder_mead";
  res.diagnostics["evaluations"] = evaluations;
  res.diagnostics["converged_starts"] = converged_starts;
  res.diagnostics["coarse_best"] = vals[order[0]];
  if (!best_converged) res.flags.emplace_back("not_converged");
  return res;
}

}  // namespace epower
