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
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "epower/qmath.hpp"

namespace epower::opt {

struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/** Golden-section search for a maximum of a unimodal f on [a, b]; stops when b - a < tol. */
template <class F>
ScalarMax golden_section_maximize(F&& f, double a, double b, double tol = 1e-10, int max_iter = 200) {
  if (!(b >= a)) throw DomainError("golden-section bracket is reversed");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  ++evals;
  ScalarMax best{xm, fm, evals};
  if (fc > best.value) best = {c, fc, evals};
  if (fd > best.value) best = {d, fd, evals};
  return best;
}

/**
 * Dense scan of n equally spaced points on [a, b] followed by golden-section
 * refinement inside the two cells adjacent to the best grid point. Ties on
 * the grid resolve to the lowest index so results do not depend on scheduling.
 */
template <class F>
ScalarMax grid_then_golden_maximize(F&& f, double a, double b, int n = 2001, double tol = 1e-10) {
  if (n < 2) throw DomainError("grid needs at least two points");
  const double h = (b - a) / (n - 1);
  int best_i = 0;
  double best_v = f(a);
  for (int i = 1; i < n; ++i) {
    const double v = f(i == n - 1 ? b : a + i * h);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  ScalarMax best{best_i == n - 1 ? b : a + best_i * h, best_v, n};
  const double lo = std::max(a, a + (best_i - 1) * h);
  const double hi = std::min(b, a + (best_i + 1) * h);
  auto refined = golden_section_maximize(f, lo, hi, tol);
  refined.evaluations += n;
  if (refined.value > best.value) {
    best.x = refined.x;
    best.value = refined.value;
  }
  best.evaluations = refined.evaluations;
  return best;
}

/** Bisection for a sign change of f on [a, b]; throws if f(a), f(b) share a sign. */
template <class F>
double bisect_root(F&& f, double a, double b, double tol = 1e-12, int max_iter = 200) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw DomainError("bisection bracket has no sign change");
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

struct SimplexSearchResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/**
 * Nelder–Mead maximization (reflection 1, expansion 2, contraction 1/2,
 * shrink 1/2). Converged when the spread of vertex values is below `ftol`
 * and the simplex diameter is below `xtol`.
 */
template <class F>
SimplexSearchResult nelder_mead_maximize(F&& f, std::vector<double> x0, double step, int max_iter,
                                         double ftol = 1e-12, double xtol = 1e-9) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> vals(n + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& p) {
    ++evals;
    return f(p);
  };
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  SimplexSearchResult out;
  int it = 0;
  for (; it < max_iter; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    double diam = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) diam = std::max(diam, std::abs(pts[i][k] - pts[best][k]));
    }
    if (vals[best] - vals[worst] <= ftol && diam <= xtol) {
      out.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);
    }
    for (std::size_t k = 0; k < n; ++k) trial[k] = centroid[k] + (centroid[k] - pts[worst][k]);
    const double fr = eval(trial);
    if (fr > vals[best]) {
      for (std::size_t k = 0; k < n; ++k) trial2[k] = centroid[k] + 2.0 * (centroid[k] - pts[worst][k]);
      const double fe = eval(trial2);
      if (fe > fr) {
        pts[worst] = trial2;
        vals[worst] = fe;
      } else {
        pts[worst] = trial;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr > vals[second_worst]) {
      pts[worst] = trial;
      vals[worst] = fr;
      continue;
    }
    // Contraction toward the better of the worst point and its reflection.
    const bool outside = fr > vals[worst];
    for (std::size_t k = 0; k < n; ++k) {
      const double anchor = outside ? trial[k] : pts[worst][k];
      trial2[k] = centroid[k] + 0.5 * (anchor - centroid[k]);
    }
    const double fc = eval(trial2);
    if (fc > std::max(fr, vals[worst])) {
      pts[worst] = trial2;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      vals[i] = eval(pts[i]);
    }
  }
  const auto best_it = std::max_element(vals.begin(), vals.end());
  const auto bi = static_cast<std::size_t>(best_it - vals.begin());
  out.x = pts[bi];
  out.value = vals[bi];
  out.iterations = it;
  out.evaluations = evals;
  return out;
}

/** Point i of the Halton sequence in base `base` (i >= 1). */
[[nodiscard]] inline double halton(std::size_t i, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

}  // namespace epower::opt
