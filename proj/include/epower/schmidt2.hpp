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

// Entangling power of the Schmidt-rank-two controlled-phase family
//
//   V = |1><1| ⊗ I_n + |2><2| ⊗ diag(e^{iθ_1}, ..., e^{iθ_n}),
//
// which reduces to maximizing the quadratic form
//
//   y(c) = Σ_{j>k} c_j c_k sin^2((θ_j - θ_k)/2) = (1/2) cᵀ M c
//
// over the probability simplex. K_E(V) = H((1 - √(1-4y))/2, (1 + √(1-4y))/2)
// is increasing in y, so K_E = 1 ebit exactly when max y = 1/4.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "epower/qmath.hpp"
#include "epower/result.hpp"

namespace epower {

/** Phases θ_1..θ_n (radians, n >= 2). Only differences enter any formula. */
class PhaseGateSpec {
 public:
  explicit PhaseGateSpec(std::vector<double> thetas) : thetas_(std::move(thetas)) {
    if (thetas_.size() < 2) throw DomainError("phase gate needs at least two phases");
    for (double t : thetas_) {
      if (!std::isfinite(t)) throw DomainError("phase is not finite");
    }
  }
  PhaseGateSpec(std::initializer_list<double> thetas) : PhaseGateSpec(std::vector<double>(thetas)) {}

  [[nodiscard]] std::size_t size() const { return thetas_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return thetas_[i]; }
  [[nodiscard]] const std::vector<double>& thetas() const { return thetas_; }

 private:
  std::vector<double> thetas_;
};

/** A point of the probability simplex. */
class SimplexWeights {
 public:
  explicit SimplexWeights(std::vector<double> c) : c_(std::move(c)) {
    double s = 0.0;
    for (double v : c_) {
      if (!(v >= 0.0)) throw DomainError("simplex weight is negative");
      s += v;
    }
    if (std::abs(s - 1.0) > 1e-12) throw DomainError("simplex weights do not sum to one");
  }
  SimplexWeights(std::initializer_list<double> c) : SimplexWeights(std::vector<double>(c)) {}

  [[nodiscard]] std::size_t size() const { return c_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] const std::vector<double>& values() const { return c_; }

 private:
  std::vector<double> c_;
};

namespace detail {
inline double half_sin(double a, double b) { return std::sin(0.5 * (a - b)); }
inline double half_sin2(double a, double b) {
  const double s = half_sin(a, b);
  return s * s;
}
}  // namespace detail

[[nodiscard]] inline double y_value(const PhaseGateSpec& spec, const SimplexWeights& w) {
  if (spec.size() != w.size()) throw DomainError("phase and weight lengths differ");
  double y = 0.0;
  for (std::size_t j = 1; j < spec.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) y += w[j] * w[k] * detail::half_sin2(spec[j], spec[k]);
  }
  return y;
}

/** M_ij = sin^2((θ_i - θ_j)/2). */
[[nodiscard]] inline Eigen::MatrixXd m_matrix(const PhaseGateSpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = i == j ? 0.0 : detail::half_sin2(spec[static_cast<std::size_t>(i)], spec[static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

/**
 * The three rank-one terms of M from sin^2(a+b) = sin^2 a cos^2 b +
 * cos^2 a sin^2 b + (1/2) sin 2a sin 2b with a = θ_i/2, b = -θ_j/2.
 */
[[nodiscard]] inline std::array<Eigen::MatrixXd, 3> m_matrix_rank_one_terms(const PhaseGateSpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.size());
  Eigen::VectorXd u1(n), v1(n), u2(n), v2(n), u3(n), v3(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = 0.5 * spec[static_cast<std::size_t>(i)];
    const double b = -a;
    u1[i] = std::sin(a) * std::sin(a);
    v1[i] = std::cos(b) * std::cos(b);
    u2[i] = std::cos(a) * std::cos(a);
    v2[i] = std::sin(b) * std::sin(b);
    u3[i] = 0.5 * std::sin(2 * a);
    v3[i] = std::sin(2 * b);
  }
  return {u1 * v1.transpose(), u2 * v2.transpose(), u3 * v3.transpose()};
}

struct RankReport {
  int rank = 0;
  std::vector<double> singular_values;
  /** max-entry residual of the three-term rank-one reconstruction. */
  double reconstruction_residual = 0.0;
};

[[nodiscard]] inline RankReport rank_bound_check(const PhaseGateSpec& spec) {
  const Eigen::MatrixXd m = m_matrix(spec);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  RankReport rep;
  rep.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  const double threshold = static_cast<double>(spec.size()) * std::numeric_limits<double>::epsilon() * smax * 16.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > threshold) ++rep.rank;
  }
  const auto terms = m_matrix_rank_one_terms(spec);
  rep.reconstruction_residual = (terms[0] + terms[1] + terms[2] - m).cwiseAbs().maxCoeff();
  return rep;
}

/** Binary entropy of the Schmidt coefficients produced at quadratic-form value y. */
[[nodiscard]] inline double ebits_from_y(double y) {
  const double r = std::sqrt(std::max(0.0, 1.0 - 4.0 * std::clamp(y, 0.0, 0.25)));
  return shannon_entropy(ProbVector{(1.0 - r) / 2.0, (1.0 + r) / 2.0});
}

/** H((1 - |cos((θ_i-θ_j)/2)|)/2, (1 + |cos((θ_i-θ_j)/2)|)/2). */
[[nodiscard]] inline double pair_entropy(double ti, double tj) {
  const double a = std::abs(std::cos(0.5 * (ti - tj)));
  return shannon_entropy(ProbVector{(1.0 - a) / 2.0, (1.0 + a) / 2.0});
}

inline constexpr double kSinProductTol = 1e-12;
inline constexpr double kNonnegTol = 1e-12;

enum class N3Case { interior, boundary };

struct N3Result {
  double max_y = 0.0;
  N3Case which = N3Case::boundary;
  /** Maximizing weights in the order of the input phases. */
  std::array<double, 3> weights{};
  /** The maximizing pair for the boundary case. */
  std::pair<int, int> pair{0, 1};
  double sin2_product = 0.0;
  /** cos(Δ_jk/2) csc(Δ_ij/2) csc(Δ_ik/2) for each i; weights are half of this. */
  std::array<double, 3> cosecant_vector{};
};

/**
 * Interior stationary weights for phases (t1, t2, t3). Assumes all three
 * half-differences have nonzero sine.
 */
[[nodiscard]] inline std::array<double, 3> cosecant_vector(double t1, double t2, double t3) {
  using detail::half_sin;
  return {std::cos(0.5 * (t2 - t3)) / (half_sin(t1, t2) * half_sin(t1, t3)),
          std::cos(0.5 * (t1 - t3)) / (half_sin(t2, t1) * half_sin(t2, t3)),
          std::cos(0.5 * (t1 - t2)) / (half_sin(t3, t1) * half_sin(t3, t2))};
}

[[nodiscard]] inline N3Result n3_closed_form(double t1, double t2, double t3) {
  using detail::half_sin2;
  N3Result r;
  const std::array<double, 3> pairs = {half_sin2(t1, t2), half_sin2(t1, t3), half_sin2(t2, t3)};
  r.sin2_product = pairs[0] * pairs[1] * pairs[2];
  if (r.sin2_product > kSinProductTol) {
    r.cosecant_vector = cosecant_vector(t1, t2, t3);
    if (std::all_of(r.cosecant_vector.begin(), r.cosecant_vector.end(), [](double v) { return v >= -kNonnegTol; })) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) {
        r.weights[i] = std::max(0.0, 0.5 * r.cosecant_vector[i]);
        s += 0.5 * r.cosecant_vector[i];
      }
      if (std::abs(s - 1.0) > 1e-10) {
        throw InternalError("interior stationary weights sum to " + std::to_string(s));
      }
      r.which = N3Case::interior;
      r.max_y = 0.25;
      return r;
    }
  }
  static constexpr std::array<std::pair<int, int>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};
  const auto best = static_cast<std::size_t>(std::max_element(pairs.begin(), pairs.end()) - pairs.begin());
  r.which = N3Case::boundary;
  r.pair = kPairs[best];
  r.max_y = 0.25 * pairs[best];
  r.weights = {0.0, 0.0, 0.0};
  r.weights[static_cast<std::size_t>(r.pair.first)] = 0.5;
  r.weights[static_cast<std::size_t>(r.pair.second)] = 0.5;
  return r;
}

/**
 * Stationary weights with three dependent indices (i1, i2, i3) and the
 * remaining weights fixed to `free_weights` (in ascending index order).
 * Solves M c = (1/2)·1 with Σ c = 1; the dependent components are
 *
 *   c_{i1} = ((1/2) cos(Δ_{i2 i3}/2) - Σ_j sin((θ_j-θ_{i2})/2) sin((θ_j-θ_{i3})/2) c_j)
 *            · csc(Δ_{i1 i2}/2) csc(Δ_{i1 i3}/2)
 *
 * and cyclically.
 */
[[nodiscard]] inline std::vector<double> triple_stationary_weights(const PhaseGateSpec& spec,
                                                                   std::array<std::size_t, 3> triple,
                                                                   const std::vector<double>& free_weights) {
  using detail::half_sin;
  const std::size_t n = spec.size();
  std::vector<double> c(n, 0.0);
  std::vector<std::size_t> free_idx;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != triple[0] && j != triple[1] && j != triple[2]) free_idx.push_back(j);
  }
  if (free_idx.size() != free_weights.size()) throw DomainError("free weight count mismatch");
  for (std::size_t f = 0; f < free_idx.size(); ++f) c[free_idx[f]] = free_weights[f];

  for (int r = 0; r < 3; ++r) {
    const std::size_t a = triple[static_cast<std::size_t>(r)];
    const std::size_t b = triple[static_cast<std::size_t>((r + 1) % 3)];
    const std::size_t d = triple[static_cast<std::size_t>((r + 2) % 3)];
    double num = 0.5 * std::cos(0.5 * (spec[b] - spec[d]));
    for (std::size_t j : free_idx) num -= half_sin(spec[j], spec[b]) * half_sin(spec[j], spec[d]) * c[j];
    c[a] = num / (half_sin(spec[a], spec[b]) * half_sin(spec[a], spec[d]));
  }
  return c;
}

struct SimplexOracleResult {
  double max_y = 0.0;
  std::vector<double> weights;
  /** "grid" or "multistart". */
  std::string strategy;
  int effective_resolution = 0;
};

namespace detail {

/** Exact line maximization along e_i - e_j until no pair improves; y is concave on the simplex. */
inline double pairwise_ascent(const Eigen::MatrixXd& m, std::vector<double>& c, int max_sweeps = 10000) {
  const auto n = static_cast<Eigen::Index>(c.size());
  Eigen::Map<Eigen::VectorXd> cv(c.data(), n);
  Eigen::VectorXd g = m * cv;
  double y = 0.5 * cv.dot(g);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double gain = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double slope = g[i] - g[j];
        const double mij = m(i, j);
        double t = 0.0;
        if (mij > 1e-15) {
          t = slope / (2.0 * mij);
        } else if (slope > 0.0) {
          t = cv[j];
        } else if (slope < 0.0) {
          t = -cv[i];
        }
        t = std::clamp(t, -cv[i], cv[j]);
        if (t == 0.0) continue;
        const double dy = t * slope - t * t * mij;
        if (dy <= 0.0) continue;
        cv[i] += t;
        cv[j] -= t;
        g += t * (m.col(i) - m.col(j));
        y += dy;
        gain += dy;
      }
    }
    if (gain < 1e-17) break;
  }
  return 0.5 * cv.dot(m * cv);
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/**
 * Independent numerical maximum of y over the simplex: an exhaustive grid of
 * step 1/resolution (coarsened so the grid has at most ~3e6 points) for
 * n <= 8, otherwise 200 seeded Dirichlet multi-starts; the best point is
 * polished by pairwise exact line search.
 */
[[nodiscard]] inline SimplexOracleResult simplex_oracle(const PhaseGateSpec& spec, int resolution = 60,
                                                        std::uint64_t seed = 0) {
  if (resolution < 1) throw DomainError("oracle resolution must be positive");
  const int n = static_cast<int>(spec.size());
  const Eigen::MatrixXd m = m_matrix(spec);
  SimplexOracleResult out;
  auto y_of = [&](const std::vector<double>& c) {
    Eigen::Map<const Eigen::VectorXd> cv(c.data(), n);
    return 0.5 * cv.dot(m * cv);
  };

  if (n <= 8) {
    int res = resolution;
    while (res > 1 && detail::binomial(res + n - 1, n - 1) > 3e6) --res;
    out.strategy = "grid";
    out.effective_resolution = res;
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    double best = -1.0;
    std::vector<double> best_c;
    // Enumerate compositions of `res` into n nonnegative parts.
    auto recurse = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == n - 1) {
        k[static_cast<std::size_t>(pos)] = remaining;
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = static_cast<double>(k[static_cast<std::size_t>(i)]) / res;
        const double v = y_of(c);
        if (v > best) {
          best = v;
          best_c = c;
        }
        return;
      }
      for (int v = remaining; v >= 0; --v) {
        k[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, remaining - v);
      }
    };
    recurse(recurse, 0, res);
    out.max_y = std::max(best, detail::pairwise_ascent(m, best_c));
    out.weights = best_c;
    return out;
  }

  out.strategy = "multistart";
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  double best = -1.0;
  for (int s = 0; s < 200; ++s) {
    std::vector<double> c(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& v : c) sum += (v = gamma(rng));
    for (double& v : c) v /= sum;
    const double v = detail::pairwise_ascent(m, c);
    if (v > best) {
      best = v;
      out.weights = c;
    }
  }
  out.max_y = best;
  return out;
}

struct PhaseGateOptions {
  /** Run simplex_oracle and flag disagreements larger than 1e-4 ebits. */
  bool cross_check = false;
  int oracle_resolution = 60;
  std::uint64_t seed = 0;
  /** Coarse grid for the free weights in the n > 3 feasibility search. */
  int free_grid_resolution = 12;
};

namespace detail {

inline bool all_nonneg(const std::vector<double>& c) {
  return std::all_of(c.begin(), c.end(), [](double v) { return v >= -kNonnegTol; });
}

inline bool triple_nondegenerate(const PhaseGateSpec& s, std::size_t i, std::size_t j, std::size_t k) {
  return half_sin2(s[i], s[j]) * half_sin2(s[j], s[k]) * half_sin2(s[k], s[i]) > kSinProductTol;
}

}  // namespace detail

/**
 * K_E of the controlled-phase gate with phases `spec`.
 *
 * n = 2 uses the single pair, n = 3 the interior/boundary dichotomy, n > 3
 * searches for a triple whose stationary weights are nonnegative (first with
 * the other weights at zero, then on a coarse grid of the other weights) and
 * otherwise falls back to the best pair.
 */
[[nodiscard]] inline EntanglingPowerResult entangling_power_phase_gate(const PhaseGateSpec& spec,
                                                                       const PhaseGateOptions& opts = {}) {
  const std::size_t n = spec.size();
  EntanglingPowerResult res;
  res.method = Method::closed_form;
  double max_y = 0.0;
  bool certified_quarter = false;

  auto best_pair = [&]() {
    double best = -1.0;
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = detail::half_sin2(spec[i], spec[j]);
        if (v > best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    res.weights.assign(n, 0.0);
    res.weights[bi] = 0.5;
    res.weights[bj] = 0.5;
    res.branch = "pair";
    res.critical = "pair (" + std::to_string(bi) + "," + std::to_string(bj) + ") with equal weights";
    res.diagnostics["pair_i"] = static_cast<double>(bi);
    res.diagnostics["pair_j"] = static_cast<double>(bj);
    return 0.25 * best;
  };

  if (n == 2) {
    max_y = best_pair();
  } else if (n == 3) {
    const auto r = n3_closed_form(spec[0], spec[1], spec[2]);
    max_y = r.max_y;
    res.weights.assign(r.weights.begin(), r.weights.end());
    res.diagnostics["sin2_product"] = r.sin2_product;
    if (r.which == N3Case::interior) {
      certified_quarter = true;
      res.branch = "interior";
      res.critical = "interior stationary weights";
    } else {
      res.branch = "pair";
      res.critical = "pair (" + std::to_string(r.pair.first) + "," + std::to_string(r.pair.second) +
                     ") with equal weights";
    }
  } else {
    // Stationary points with the other weights at zero.
    for (std::size_t i = 0; i < n && !certified_quarter; ++i) {
      for (std::size_t j = i + 1; j < n && !certified_quarter; ++j) {
        for (std::size_t k = j + 1; k < n && !certified_quarter; ++k) {
          if (!detail::triple_nondegenerate(spec, i, j, k)) continue;
          auto c = triple_stationary_weights(spec, {i, j, k}, std::vector<double>(n - 3, 0.0));
          if (detail::all_nonneg(c)) {
            certified_quarter = true;
            for (double& v : c) v = std::max(v, 0.0);
            res.weights = c;
            res.branch = "triple";
            res.critical = "stationary weights on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")";
          }
        }
      }
    }
    // Coarse grid over the free weights; only tractable for small n.
    if (!certified_quarter && n <= 8) {
      const int res_free = opts.free_grid_resolution;
      const std::size_t nf = n - 3;
      std::vector<int> k(nf, 0);
      for (std::size_t i = 0; i < n && !certified_quarter; ++i) {
        for (std::size_t j = i + 1; j < n && !certified_quarter; ++j) {
          for (std::size_t l = j + 1; l < n && !certified_quarter; ++l) {
            if (!detail::triple_nondegenerate(spec, i, j, l)) continue;
            auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
              if (certified_quarter) return;
              if (pos == nf) {
                std::vector<double> fw(nf);
                for (std::size_t q = 0; q < nf; ++q) fw[q] = static_cast<double>(k[q]) / res_free;
                auto c = triple_stationary_weights(spec, {i, j, l}, fw);
                if (detail::all_nonneg(c)) {
                  certified_quarter = true;
                  for (double& v : c) v = std::max(v, 0.0);
                  res.weights = c;
                  res.branch = "triple_with_free_weights";
                  res.critical = "stationary weights on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(l) + ") with nonzero free weights";
                }
                return;
              }
              for (int v = 0; v <= remaining; ++v) {
                k[pos] = v;
                self(self, pos + 1, remaining - v);
              }
            };
            recurse(recurse, 0, res_free);
          }
        }
      }
    }
    max_y = certified_quarter ? 0.25 : best_pair();
  }

  if (certified_quarter) max_y = 0.25;
  res.value = ebits_from_y(max_y);
  res.diagnostics["max_y"] = max_y;
  res.diagnostics["lagrange_multiplier"] = -2.0 * max_y;

  if (opts.cross_check) {
    const auto orc = simplex_oracle(spec, opts.oracle_resolution, opts.seed);
    const double ov = ebits_from_y(orc.max_y);
    res.diagnostics["oracle_max_y"] = orc.max_y;
    res.diagnostics["oracle_gap"] = ov - res.value;
    if (std::abs(ov - res.value) > 1e-4) res.flags.emplace_back("oracle_discrepancy");
    if (!certified_quarter && orc.max_y >= 0.25 - 1e-6) res.flags.emplace_back("uncertified_quarter");
  }
  return res;
}

}  // namespace epower
