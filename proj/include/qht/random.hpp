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

// Random states for property tests. Mixed states are drawn as
// U diag(w) U^dagger with w uniform on the simplex and U Haar-distributed.

#pragma once

#include <random>

#include "qht/states.hpp"

namespace qht {

template <typename Rng>
ComplexMatrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                     Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      g(i, j) = Complex(re, normal(rng));
    }
  }
  return g;
}

/// Haar unitary: QR of a complex Gaussian matrix with the phases of R's
/// diagonal folded back into Q.
template <typename Rng>
ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

/// Uniform point on the probability simplex.
template <typename Rng>
RealVector random_simplex(Eigen::Index k, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RealVector w(k);
  for (Eigen::Index i = 0; i < k; ++i) w(i) = expo(rng);
  return w / w.sum();
}

template <typename Rng>
DensityMatrix random_density_matrix(Eigen::Index dim, Rng& rng) {
  const RealVector w = random_simplex(dim, rng);
  const ComplexMatrix u = random_unitary(dim, rng);
  return DensityMatrix(u * w.cast<Complex>().asDiagonal() * u.adjoint());
}

template <typename Rng>
PureState random_pure_state(Eigen::Index dim, Rng& rng) {
  return PureState::normalized(random_gaussian_matrix(dim, 1, rng).col(0));
}

/// Two density matrices diagonal in one shared random eigenbasis.
template <typename Rng>
std::pair<DensityMatrix, DensityMatrix> random_commuting_pair(Eigen::Index dim,
                                                              Rng& rng) {
  const RealVector p = random_simplex(dim, rng);
  const RealVector q = random_simplex(dim, rng);
  const ComplexMatrix u = random_unitary(dim, rng);
  return {DensityMatrix(u * p.cast<Complex>().asDiagonal() * u.adjoint()),
          DensityMatrix(u * q.cast<Complex>().asDiagonal() * u.adjoint())};
}

}  // namespace qht
