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
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace epower {

using cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/** Thrown when an input violates the documented domain of an operation. */
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/** Thrown when a closed form is used outside its validity (a bug, not bad input). */
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace tol {
// Entries of a probability vector may sit this far outside [0,1] before clamping.
inline constexpr double kProbClamp = 1e-9;
// |sum - 1| up to this is renormalized; beyond is rejected.
inline constexpr double kProbSum = 1e-6;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-9;
// Eigenvalues in [-kEigenClamp, 0) are treated as zero.
inline constexpr double kEigenClamp = 1e-10;
inline constexpr double kStateNorm = 1e-10;
inline constexpr double kMajorization = 1e-12;
}  // namespace tol

/**
 * A discrete probability distribution.
 *
 * Construction clamps entries that are within tol::kProbClamp of [0,1] and
 * renormalizes when the sum is within tol::kProbSum of one. Anything else
 * raises DomainError.
 */
class ProbVector {
 public:
  ProbVector() = default;
  explicit ProbVector(std::vector<double> entries) : p_(std::move(entries)) {
    if (p_.empty()) throw DomainError("probability vector is empty");
    double sum = 0.0;
    for (double& v : p_) {
      if (!std::isfinite(v)) throw DomainError("probability entry is not finite");
      if (v < -tol::kProbClamp || v > 1.0 + tol::kProbClamp) {
        throw DomainError("probability entry " + std::to_string(v) + " outside [0,1]");
      }
      v = std::clamp(v, 0.0, 1.0);
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol::kProbSum) {
      throw DomainError("probability entries sum to " + std::to_string(sum));
    }
    for (double& v : p_) v /= sum;
  }
  ProbVector(std::initializer_list<double> entries)
      : ProbVector(std::vector<double>(entries)) {}

  [[nodiscard]] std::size_t size() const { return p_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return p_[i]; }
  [[nodiscard]] const std::vector<double>& entries() const { return p_; }
  [[nodiscard]] std::vector<double> sorted_descending() const {
    auto s = p_;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }

 private:
  std::vector<double> p_;
};

/** -sum p log2 p with 0 log 0 = 0. */
[[nodiscard]] inline double shannon_entropy(const ProbVector& p) {
  double h = 0.0;
  for (double v : p.entries()) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return std::max(h, 0.0);
}

[[nodiscard]] inline double shannon_entropy(std::span<const double> p) {
  return shannon_entropy(ProbVector(std::vector<double>(p.begin(), p.end())));
}

/** H(p, 1-p). */
[[nodiscard]] inline double binary_entropy(double p) {
  return shannon_entropy(ProbVector{p, 1.0 - p});
}

/** A validated density matrix: Hermitian, unit trace, positive semidefinite. */
class DensityMatrix {
 public:
  explicit DensityMatrix(MatrixXc rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
      throw DomainError("density matrix must be square and nonempty");
    }
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol::kHermitian) {
      throw DomainError("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    const cplx tr = rho_.trace();
    if (std::abs(tr - 1.0) > tol::kTrace) {
      throw DomainError("density matrix trace is " + std::to_string(tr.real()));
    }
    // Symmetrize so the eigensolver sees an exactly Hermitian input.
    rho_ = 0.5 * (rho_ + rho_.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho_, Eigen::EigenvaluesOnly);
    eig_.resize(static_cast<std::size_t>(rho_.rows()));
    for (Eigen::Index i = 0; i < rho_.rows(); ++i) {
      double v = es.eigenvalues()[i];
      if (v < -tol::kEigenClamp) {
        throw DomainError("density matrix has eigenvalue " + std::to_string(v));
      }
      eig_[static_cast<std::size_t>(i)] = std::max(v, 0.0);
    }
  }

  [[nodiscard]] const MatrixXc& matrix() const { return rho_; }
  [[nodiscard]] Eigen::Index dim() const { return rho_.rows(); }
  /** Clamped eigenvalues in ascending order. */
  [[nodiscard]] const std::vector<double>& eigenvalues() const { return eig_; }

 private:
  MatrixXc rho_;
  std::vector<double> eig_;
};

[[nodiscard]] inline double von_neumann_entropy(const DensityMatrix& rho) {
  return shannon_entropy(ProbVector(rho.eigenvalues()));
}

/** A normalized pure state of a multipartite system; subsystem 0 is the most significant index. */
class StateVector {
 public:
  StateVector(VectorXc amplitudes, std::vector<int> dims)
      : amp_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (dims_.empty()) throw DomainError("state needs at least one subsystem");
    Eigen::Index total = 1;
    for (int d : dims_) {
      if (d < 1) throw DomainError("subsystem dimension must be positive");
      total *= d;
    }
    if (total != amp_.size()) {
      throw DomainError("product of subsystem dimensions does not match state length");
    }
    const double n2 = amp_.squaredNorm();
    if (std::abs(n2 - 1.0) > tol::kStateNorm) {
      throw DomainError("state is not normalized (norm^2 = " + std::to_string(n2) + ")");
    }
  }

  [[nodiscard]] const VectorXc& amplitudes() const { return amp_; }
  [[nodiscard]] const std::vector<int>& dims() const { return dims_; }

 private:
  VectorXc amp_;
  std::vector<int> dims_;
};

/** Reduced density matrix of `psi` on the subsystems listed in `keep` (kept in ascending order). */
[[nodiscard]] inline DensityMatrix partial_trace(const StateVector& psi, std::vector<int> keep) {
  const auto& dims = psi.dims();
  const int n = static_cast<int>(dims.size());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty() || static_cast<int>(keep.size()) >= n) {
    throw DomainError("kept subsystems must be a nonempty proper subset");
  }
  for (int k : keep) {
    if (k < 0 || k >= n) throw DomainError("subsystem index " + std::to_string(k) + " out of range");
  }
  std::vector<int> traced;
  for (int i = 0; i < n; ++i) {
    if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);
  }

  // Row-major strides of the full index.
  std::vector<Eigen::Index> stride(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  Eigen::Index dk = 1;
  for (int k : keep) dk *= dims[k];
  Eigen::Index dt = 1;
  for (int t : traced) dt *= dims[t];

  // Reshape into M[kept, traced] so that rho = M M^dagger.
  MatrixXc m(dk, dt);
  const VectorXc& a = psi.amplitudes();
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  for (Eigen::Index flat = 0; flat < a.size(); ++flat) {
    Eigen::Index rem = flat;
    for (int i = 0; i < n; ++i) {
      digit[i] = static_cast<int>(rem / stride[i]);
      rem %= stride[i];
    }
    Eigen::Index r = 0;
    for (int k : keep) r = r * dims[k] + digit[k];
    Eigen::Index c = 0;
    for (int t : traced) c = c * dims[t] + digit[t];
    m(r, c) = a[flat];
  }
  return DensityMatrix(m * m.adjoint());
}

/**
 * True iff p is majorized by q (p ≺ q): every descending prefix sum of q
 * dominates that of p.
 */
[[nodiscard]] inline bool majorizes(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) throw DomainError("majorization needs vectors of equal length");
  const auto ps = p.sorted_descending();
  const auto qs = q.sorted_descending();
  double sp = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    sp += ps[i];
    sq += qs[i];
    if (sq < sp - tol::kMajorization) return false;
  }
  return true;
}

[[nodiscard]] inline bool is_unitary(const MatrixXc& u, double tolerance = 1e-10) {
  if (u.rows() != u.cols()) return false;
  return ((u.adjoint() * u) - MatrixXc::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tolerance;
}

inline MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
  MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/** Haar-random unitary via QR of a complex Ginibre matrix with the phase fix on R's diagonal. */
template <class Rng>
MatrixXc haar_unitary(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  MatrixXc z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = cplx(g(rng), g(rng));
  }
  Eigen::HouseholderQR<MatrixXc> qr(z);
  MatrixXc q = qr.householderQ();
  MatrixXc r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    const double ad = std::abs(d);
    q.col(j) *= (ad > 0.0 ? d / ad : cplx(1.0));
  }
  return q;
}

/**
 * max |a - e^{iφ} b| where φ aligns the largest-modulus entry of b with the
 * same entry of a.
 */
[[nodiscard]] inline double phase_aligned_distance(const MatrixXc& a, const MatrixXc& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("shape mismatch");
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  cplx phase(1.0);
  if (std::abs(b(r, c)) > 0.0 && std::abs(a(r, c)) > 0.0) {
    phase = a(r, c) / b(r, c);
    phase /= std::abs(phase);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace epower
