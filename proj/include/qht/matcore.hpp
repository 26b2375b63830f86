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

// Dense matrix algebra and the Hermitian spectral toolkit.
//
// Everything here is a free function template over Eigen expressions, so
// callers can pass `a - b`, `x.adjoint() * y` etc. without materializing a
// temporary first. Results are plain matrices of the operand's scalar type.
// Real and complex scalars of any precision are accepted; the rest of the
// library instantiates with std::complex<double>.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "qht/errors.hpp"

namespace qht {

/// Max entrywise |H - H^dagger| accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-10;
/// Eigenvalues in [-kPsdClampTol, 0) are round-off and clamp to zero.
inline constexpr double kPsdClampTol = 1e-10;
/// Numerical rank cutoff, relative to the largest eigenvalue.
inline constexpr double kDefaultRankTol = 1e-10;
/// Largest tensor-power dimension built without an explicit override.
inline constexpr std::uint64_t kDefaultTensorCap = 4096;

template <typename Real>
using ComplexMatrixT =
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using ComplexVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RealVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = ComplexVectorT<double>;
using RealVector = RealVectorT<double>;
using Complex = std::complex<double>;

template <typename Derived>
using PlainMatrixOf = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic,
                                    Eigen::Dynamic>;
template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
/// Hermitian matrix. Inside a degenerate eigenspace the basis is arbitrary.
template <typename Scalar>
struct HermitianSpectrum {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  RealVectorT<Real> eigenvalues;
  Matrix eigenvectors;

  /// V f(Lambda) V^dagger.
  template <typename Fn>
  Matrix apply(Fn&& f) const {
    RealVectorT<Real> mapped(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
      mapped(i) = f(eigenvalues(i));
    }
    return eigenvectors * mapped.template cast<Scalar>().asDiagonal() *
           eigenvectors.adjoint();
  }

  Matrix reconstruct() const {
    return apply([](Real x) { return x; });
  }
};

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m) {
  if (!m.allFinite()) throw DomainError("matrix has a non-finite entry", NAN);
}

/// max_{ij} |H_ij - conj(H_ji)|.
template <typename Derived>
RealOf<Derived> hermiticity_defect(const Eigen::MatrixBase<Derived>& h) {
  require_square(h);
  const PlainMatrixOf<Derived> m = h;
  if (m.size() == 0) return 0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& h,
                       double tol = kHermitianTol) {
  require_finite(h);
  const auto defect = hermiticity_defect(h);
  if (!(defect <= tol)) throw NotHermitianError(static_cast<double>(defect));
}

/// Kronecker product: (A (x) B)(i*p + k, j*q + l) = A(i,j) * B(k,l).
template <typename DerivedA, typename DerivedB>
PlainMatrixOf<DerivedA> tensor_product(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b) {
  const PlainMatrixOf<DerivedA> lhs = a;
  const PlainMatrixOf<DerivedA> rhs = b;
  const Eigen::Index p = rhs.rows();
  const Eigen::Index q = rhs.cols();
  PlainMatrixOf<DerivedA> out(lhs.rows() * p, lhs.cols() * q);
  for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
    for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
      out.block(i * p, j * q, p, q) = lhs(i, j) * rhs;
    }
  }
  return out;
}

namespace detail {

// base^n, or CapExceededError if it passes cap (saturating, no overflow).
inline std::uint64_t capped_power(std::uint64_t base, unsigned n,
                                  std::uint64_t cap, const char* what) {
  std::uint64_t value = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (base != 0 && value > cap / base) {
      // Report the true size when it fits in 64 bits.
      long double exact = std::pow(static_cast<long double>(base), n);
      std::uint64_t required =
          exact < 1.8e19L ? static_cast<std::uint64_t>(exact) : UINT64_MAX;
      throw CapExceededError(what, required, cap);
    }
    value *= base;
  }
  if (value > cap) throw CapExceededError(what, value, cap);
  return value;
}

}  // namespace detail

/// n-fold Kronecker power, folded left: ((A (x) A) (x) A) ...
/// Throws CapExceededError when either resulting dimension exceeds `cap`.
template <typename Derived>
PlainMatrixOf<Derived> tensor_power(const Eigen::MatrixBase<Derived>& a,
                                    unsigned n,
                                    std::uint64_t cap = kDefaultTensorCap) {
  if (n == 0) throw DimensionError("tensor power requires n >= 1");
  detail::capped_power(static_cast<std::uint64_t>(a.rows()), n, cap,
                       "tensor power dimension");
  detail::capped_power(static_cast<std::uint64_t>(a.cols()), n, cap,
                       "tensor power dimension");
  const PlainMatrixOf<Derived> base = a;
  PlainMatrixOf<Derived> out = base;
  for (unsigned k = 1; k < n; ++k) out = tensor_product(out, base);
  return out;
}

/// Full spectral decomposition. The input is checked against kHermitianTol
/// and symmetrized before solving, so the result depends only on the
/// Hermitian part.
template <typename Derived>
HermitianSpectrum<typename Derived::Scalar> hermitian_eig(
    const Eigen::MatrixBase<Derived>& h) {
  require_hermitian(h);
  const PlainMatrixOf<Derived> m = h;
  const PlainMatrixOf<Derived> sym =
      (m + m.adjoint()) * typename Derived::Scalar(0.5);
  Eigen::SelfAdjointEigenSolver<PlainMatrixOf<Derived>> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Ascending eigenvalues only; several times cheaper than hermitian_eig on
/// large tensor powers.
template <typename Derived>
RealVectorT<RealOf<Derived>> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& h) {
  require_hermitian(h);
  const PlainMatrixOf<Derived> m = h;
  const PlainMatrixOf<Derived> sym =
      (m + m.adjoint()) * typename Derived::Scalar(0.5);
  Eigen::SelfAdjointEigenSolver<PlainMatrixOf<Derived>> solver(
      sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

/// V f(Lambda) V^dagger for a real scalar function f. A non-finite f(lambda)
/// is reported as a DomainError carrying lambda.
template <typename Derived, typename Fn>
PlainMatrixOf<Derived> mat_fn(const Eigen::MatrixBase<Derived>& h, Fn&& f) {
  const auto spectrum = hermitian_eig(h);
  using Real = RealOf<Derived>;
  return spectrum.apply([&f](Real x) {
    const Real y = static_cast<Real>(f(x));
    if (!std::isfinite(y)) {
      throw DomainError("function undefined at eigenvalue",
                        static_cast<double>(x));
    }
    return y;
  });
}

/// Principal square root of a positive semidefinite matrix.
template <typename Derived>
PlainMatrixOf<Derived> mat_sqrt(const Eigen::MatrixBase<Derived>& h) {
  using Real = RealOf<Derived>;
  return mat_fn(h, [](Real x) -> Real {
    if (x < -static_cast<Real>(kPsdClampTol)) {
      throw DomainError("sqrt of a negative eigenvalue",
                        static_cast<double>(x));
    }
    return std::sqrt(std::max<Real>(x, 0));
  });
}

/// Matrix logarithm restricted to the support: eigenvalues above
/// rank_tol * lambda_max map to log(lambda), the rest (the kernel) to 0.
template <typename Derived>
PlainMatrixOf<Derived> mat_log_support(const Eigen::MatrixBase<Derived>& h,
                                       double rank_tol = kDefaultRankTol) {
  using Real = RealOf<Derived>;
  const auto spectrum = hermitian_eig(h);
  const Real lo = spectrum.eigenvalues.size() ? spectrum.eigenvalues.minCoeff()
                                              : Real(0);
  if (lo < -static_cast<Real>(kPsdClampTol)) {
    throw DomainError("log of a negative eigenvalue", static_cast<double>(lo));
  }
  const Real cutoff = static_cast<Real>(rank_tol) *
                      std::max<Real>(spectrum.eigenvalues.maxCoeff(), 0);
  return spectrum.apply([cutoff](Real x) -> Real {
    return (x > cutoff && x > 0) ? std::log(x) : Real(0);
  });
}

/// Sum of |eigenvalues|.
template <typename Derived>
RealOf<Derived> trace_norm(const Eigen::MatrixBase<Derived>& h) {
  if (h.size() == 0) return 0;
  return hermitian_eigenvalues(h).cwiseAbs().sum();
}

/// Pseudo-inverse square root on the support: lambda -> lambda^{-1/2} for
/// lambda > rank_tol * lambda_max, 0 otherwise. A zero matrix maps to zero.
template <typename Derived>
PlainMatrixOf<Derived> support_pinv_sqrt(const Eigen::MatrixBase<Derived>& h,
                                         double rank_tol = kDefaultRankTol) {
  using Real = RealOf<Derived>;
  const auto spectrum = hermitian_eig(h);
  if (spectrum.eigenvalues.size() == 0) return spectrum.eigenvectors;
  const Real lo = spectrum.eigenvalues.minCoeff();
  if (lo < -static_cast<Real>(kPsdClampTol)) {
    throw DomainError("inverse sqrt of a negative eigenvalue",
                      static_cast<double>(lo));
  }
  const Real cutoff = static_cast<Real>(rank_tol) *
                      std::max<Real>(spectrum.eigenvalues.maxCoeff(), 0);
  return spectrum.apply([cutoff](Real x) -> Real {
    return (x > cutoff && x > 0) ? Real(1) / std::sqrt(x) : Real(0);
  });
}

/// Orthogonal projector onto the span of eigenvectors with
/// lambda > rank_tol * lambda_max.
template <typename Derived>
PlainMatrixOf<Derived> support_projector(const Eigen::MatrixBase<Derived>& h,
                                         double rank_tol = kDefaultRankTol) {
  using Real = RealOf<Derived>;
  const auto spectrum = hermitian_eig(h);
  if (spectrum.eigenvalues.size() == 0) return spectrum.eigenvectors;
  const Real cutoff = static_cast<Real>(rank_tol) *
                      std::max<Real>(spectrum.eigenvalues.maxCoeff(), 0);
  return spectrum.apply([cutoff](Real x) -> Real {
    return (x > cutoff && x > 0) ? Real(1) : Real(0);
  });
}

/// ||AB - BA||_F.
template <typename DerivedA, typename DerivedB>
RealOf<DerivedA> commutator_norm(const Eigen::MatrixBase<DerivedA>& a,
                                 const Eigen::MatrixBase<DerivedB>& b) {
  const PlainMatrixOf<DerivedA> lhs = a;
  const PlainMatrixOf<DerivedA> rhs = b;
  return (lhs * rhs - rhs * lhs).norm();
}

}  // namespace qht
