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

#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "qht/matcore.hpp"

namespace qht {

/// Tolerances for the state invariants.
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPureNormTol = 1e-12;
inline constexpr double kPovmTol = 1e-9;
inline constexpr double kProbClampTol = 1e-12;
inline constexpr double kProbSumTol = 1e-9;

class PureState;

/// Hermitian, positive semidefinite, unit-trace matrix. Construction
/// validates; an InvalidStateError names the violated invariant. The stored
/// matrix is the Hermitian part of the input.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& mat);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  Eigen::Index dim() const noexcept { return mat_.rows(); }

  /// True when the largest eigenvalue is within `tol` of 1.
  bool is_pure(double tol = 1e-9) const;

 private:
  ComplexMatrix mat_;
};

/// Unit vector. Kept as a vector so rank-1 structure is exact.
class PureState {
 public:
  explicit PureState(ComplexVector vec);

  /// Rescales a non-zero vector to unit norm.
  static PureState normalized(const ComplexVector& vec);
  /// Computational basis vector |index>.
  static PureState basis(Eigen::Index dim, Eigen::Index index);

  const ComplexVector& vector() const noexcept { return vec_; }
  Eigen::Index dim() const noexcept { return vec_.size(); }

 private:
  ComplexVector vec_;
};

/// Positive operators summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> outcomes);

  /// Rank-one projectors onto the columns of an orthonormal basis.
  static Povm projective(const ComplexMatrix& basis);

  const std::vector<ComplexMatrix>& outcomes() const noexcept {
    return outcomes_;
  }
  const ComplexMatrix& operator[](std::size_t i) const { return outcomes_[i]; }
  std::size_t size() const noexcept { return outcomes_.size(); }
  Eigen::Index dim() const noexcept { return outcomes_.front().rows(); }

 private:
  std::vector<ComplexMatrix> outcomes_;
};

/// Classical outcome distribution. Entries in [-1e-12, 0) clamp to zero; a
/// sum within 1e-9 of one is renormalized. Anything worse is an error.
class ProbVector {
 public:
  explicit ProbVector(RealVector probs);
  ProbVector(std::initializer_list<double> probs);

  const RealVector& probs() const noexcept { return probs_; }
  double operator[](Eigen::Index i) const { return probs_(i); }
  Eigen::Index size() const noexcept { return probs_.size(); }

 private:
  RealVector probs_;
};

/// |psi><psi|.
ComplexMatrix projector_of(const PureState& psi);

/// p_i = Re tr(M_i rho).
ProbVector outcome_distribution(const Povm& m, const DensityMatrix& rho);

/// rho^{(x) n}; see tensor_power in matcore for the cap.
DensityMatrix tensor_power(const DensityMatrix& rho, unsigned n,
                           std::uint64_t cap = kDefaultTensorCap);

/// sigma_1 and sigma_2 with the sign convention sigma_2 = [[0, i], [-i, 0]].
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();

/// rho0 = (I + a sigma_1)/2 and rho1 = (I + b cos(theta) sigma_1 +
/// b sin(theta) sigma_2)/2. Requires |a| <= 1 and |b| <= 1.
std::pair<DensityMatrix, DensityMatrix> pauli_pair(double a, double b,
                                                   double theta);

/// Bell state (|00> + |11>)/sqrt(2) against the classical mixture of |00>
/// and |11>.
std::pair<DensityMatrix, DensityMatrix> entanglement_pair();

/// The pure vector behind entanglement_pair().first.
PureState bell_state();

}  // namespace qht
