// Copyright 2026 The qhtest Authors
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

// Reference computations used only by tests. They avoid the library code
// paths they are compared against.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qht/matcore.hpp"
#include "qht/random.hpp"
#include "qht/states.hpp"

namespace qht::oracle {

/// Eigenvalues of a 2x2 Hermitian matrix from the characteristic
/// polynomial, ascending.
inline std::pair<double, double> eig2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double off = std::abs(h(0, 1));
  const double mean = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), off);
  return {mean - rad, mean + rad};
}

/// Qubit fidelity: F^2 = tr(rho0 rho1) + 2 sqrt(det rho0 det rho1).
inline double qubit_fidelity(const ComplexMatrix& r0, const ComplexMatrix& r1) {
  const double overlap = (r0 * r1).trace().real();
  // Determinants of rank-1 inputs come out as ~1e-17 of round-off, which
  // the square root would inflate to ~1e-9.
  auto det = [](const ComplexMatrix& r) {
    const double v = r.determinant().real();
    return v < 1e-14 ? 0.0 : v;
  };
  const double det0 = det(r0);
  const double det1 = det(r1);
  return std::sqrt(std::max(0.0, overlap + 2.0 * std::sqrt(det0 * det1)));
}

/// min over lambda in {0, 1/(m-1), ..., 1} of log sum p^lambda q^(1-lambda).
struct GridMin {
  double lambda;
  double value;
};

inline GridMin chernoff_grid(const std::vector<double>& p,
                             const std::vector<double>& q, int points = 1001) {
  GridMin best{0.0, std::numeric_limits<double>::infinity()};
  for (int i = 0; i < points; ++i) {
    const double lam = static_cast<double>(i) / (points - 1);
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] > 0 && q[k] > 0) s += std::pow(p[k], lam) * std::pow(q[k], 1 - lam);
    }
    const double v = std::log(s);
    if (v < best.value) best = {lam, v};
  }
  return best;
}

inline double binomial(unsigned n, unsigned k) {
  double c = 1.0;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// Multinomial error for two outcomes by summing over x = count of outcome 0.
inline double binary_multinomial_error(double p0, double q0, unsigned n) {
  double tv = 0.0;
  for (unsigned x = 0; x <= n; ++x) {
    const double c = binomial(n, x);
    tv += c * std::abs(std::pow(p0, x) * std::pow(1 - p0, n - x) -
                       std::pow(q0, x) * std::pow(1 - q0, n - x));
  }
  return 0.5 * (1.0 - 0.5 * tv);
}

/// Multinomial error for any k by brute-force enumeration of all k^n
/// outcome sequences.
inline double sequence_error(const std::vector<double>& p,
                             const std::vector<double>& q, unsigned n) {
  const std::size_t k = p.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= k;
  double tv = 0.0;
  for (std::uint64_t code = 0; code < total; ++code) {
    double pp = 1.0;
    double qq = 1.0;
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      pp *= p[c % k];
      qq *= q[c % k];
      c /= k;
    }
    tv += std::abs(pp - qq);
  }
  return 0.5 * (1.0 - 0.5 * tv);
}

/// Kronecker product by explicit index arithmetic.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

inline ComplexMatrix kron_power(const ComplexMatrix& a, unsigned n) {
  ComplexMatrix out = a;
  for (unsigned i = 1; i < n; ++i) out = kron(out, a);
  return out;
}

/// Eigenvalues through Eigen's general complex solver (not the Hermitian
/// one), real parts sorted ascending.
inline std::vector<double> general_eigenvalues(const ComplexMatrix& h) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(h, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    out.push_back(solver.eigenvalues()(i).real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (1/d^N) sum of lambda^k over eigenvalues of rho0^N - rho1^N.
inline double eigen_moment(const ComplexMatrix& r0, const ComplexMatrix& r1,
                           unsigned k, unsigned n) {
  const ComplexMatrix diff = kron_power(r0, n) - kron_power(r1, n);
  double sum = 0.0;
  for (double lam : general_eigenvalues(diff)) sum += std::pow(lam, k);
  return sum / static_cast<double>(diff.rows());
}

/// Trace norm from the singular values.
inline double trace_norm_svd(const ComplexMatrix& h) {
  Eigen::JacobiSVD<ComplexMatrix> svd(h);
  return svd.singularValues().sum();
}

/// Random density matrix with the given rank.
template <typename Rng>
DensityMatrix random_rank_state(Eigen::Index dim, Eigen::Index rank, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(dim, rank, rng);
  const ComplexMatrix m = g * g.adjoint();
  return DensityMatrix(m / m.trace());
}

/// Random Hermitian matrix with Gaussian entries.
template <typename Rng>
ComplexMatrix random_hermitian(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  return (g + g.adjoint()) * Complex(0.5);
}

}  // namespace qht::oracle
