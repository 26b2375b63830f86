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

#include "qht/states.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace qht {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& mat) {
  if (mat.rows() == 0 || mat.rows() != mat.cols()) {
    throw InvalidStateError("density matrix must be square and non-empty, got " +
                            std::to_string(mat.rows()) + "x" +
                            std::to_string(mat.cols()));
  }
  if (!mat.allFinite()) {
    throw InvalidStateError("density matrix has a non-finite entry");
  }
  const double defect = hermiticity_defect(mat);
  if (defect > kHermitianTol) {
    throw InvalidStateError("density matrix is not Hermitian (max |rho - "
                            "rho^dagger| = " + num(defect) + ")");
  }
  mat_ = (mat + mat.adjoint()) * Complex(0.5);
  const double trace = mat_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw InvalidStateError("density matrix trace is " + num(trace) +
                            ", expected 1");
  }
  const double lowest = hermitian_eigenvalues(mat_).minCoeff();
  if (lowest < -kPsdClampTol) {
    throw InvalidStateError(
        "density matrix is not positive semidefinite (eigenvalue " +
        num(lowest) + ")");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(projector_of(psi));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) /
                       static_cast<double>(dim));
}

bool DensityMatrix::is_pure(double tol) const {
  return hermitian_eigenvalues(mat_).maxCoeff() >= 1.0 - tol;
}

PureState::PureState(ComplexVector vec) : vec_(std::move(vec)) {
  if (vec_.size() == 0) throw InvalidStateError("pure state vector is empty");
  if (!vec_.allFinite()) {
    throw InvalidStateError("pure state has a non-finite amplitude");
  }
  const double norm = vec_.norm();
  if (std::abs(norm - 1.0) > kPureNormTol) {
    throw InvalidStateError("pure state norm is " + num(norm) +
                            ", expected 1");
  }
}

PureState PureState::normalized(const ComplexVector& vec) {
  const double norm = vec.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidStateError("cannot normalize a zero or non-finite vector");
  }
  return PureState(vec / norm);
}

PureState PureState::basis(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) {
    throw DimensionError("basis index " + std::to_string(index) +
                         " out of range for dimension " + std::to_string(dim));
  }
  return PureState(ComplexVector::Unit(dim, index));
}

Povm::Povm(std::vector<ComplexMatrix> outcomes)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw InvalidStateError("POVM has no outcomes");
  const Eigen::Index d = outcomes_.front().rows();
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    const ComplexMatrix& m = outcomes_[i];
    if (m.rows() != d || m.cols() != d) {
      throw InvalidStateError("POVM outcome " + std::to_string(i) +
                              " has the wrong shape");
    }
    const double defect = hermiticity_defect(m);
    if (!(defect <= kPovmTol)) {
      throw InvalidStateError("POVM outcome " + std::to_string(i) +
                              " is not Hermitian");
    }
    const double lowest = hermitian_eigenvalues(
        (m + m.adjoint()) * Complex(0.5)).minCoeff();
    if (lowest < -kPovmTol) {
      throw InvalidStateError("POVM outcome " + std::to_string(i) +
                              " is not positive (eigenvalue " + num(lowest) +
                              ")");
    }
    total += m;
  }
  const double gap =
      (total - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (gap > kPovmTol) {
    throw InvalidStateError("POVM outcomes do not sum to the identity "
                            "(max deviation " + num(gap) + ")");
  }
}

Povm Povm::projective(const ComplexMatrix& basis) {
  std::vector<ComplexMatrix> outcomes;
  outcomes.reserve(static_cast<std::size_t>(basis.cols()));
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    outcomes.push_back(basis.col(k) * basis.col(k).adjoint());
  }
  return Povm(std::move(outcomes));
}

ProbVector::ProbVector(RealVector probs) : probs_(std::move(probs)) {
  if (probs_.size() == 0) throw InvalidStateError("probability vector is empty");
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    double& p = probs_(i);
    if (!std::isfinite(p) || p < -kProbClampTol) {
      throw InvalidStateError("probability " + std::to_string(i) + " is " +
                              num(p));
    }
    if (p < 0.0) p = 0.0;
  }
  const double sum = probs_.sum();
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw InvalidStateError("probabilities sum to " + num(sum) +
                            ", expected 1");
  }
  if (sum != 1.0) probs_ /= sum;
}

ProbVector::ProbVector(std::initializer_list<double> probs)
    : ProbVector(RealVector(Eigen::Map<const RealVector>(
          probs.begin(), static_cast<Eigen::Index>(probs.size())))) {}

ComplexMatrix projector_of(const PureState& psi) {
  return psi.vector() * psi.vector().adjoint();
}

ProbVector outcome_distribution(const Povm& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) {
    throw DimensionError("measurement acts on dimension " +
                         std::to_string(m.dim()) + ", state has dimension " +
                         std::to_string(rho.dim()));
  }
  RealVector probs(static_cast<Eigen::Index>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    // tr(M rho) = sum_jk M_jk rho_kj
    const Complex t = m[i].cwiseProduct(rho.matrix().transpose()).sum();
    if (std::abs(t.imag()) > kHermitianTol) {
      throw InvalidStateError("outcome probability has imaginary part " +
                              num(t.imag()));
    }
    probs(static_cast<Eigen::Index>(i)) = t.real();
  }
  return ProbVector(std::move(probs));
}

DensityMatrix tensor_power(const DensityMatrix& rho, unsigned n,
                           std::uint64_t cap) {
  return DensityMatrix(tensor_power(rho.matrix(), n, cap));
}

ComplexMatrix pauli_x() {
  ComplexMatrix s(2, 2);
  s << 0.0, 1.0, 1.0, 0.0;
  return s;
}

ComplexMatrix pauli_y() {
  const Complex i(0.0, 1.0);
  ComplexMatrix s(2, 2);
  s << 0.0, i, -i, 0.0;
  return s;
}

std::pair<DensityMatrix, DensityMatrix> pauli_pair(double a, double b,
                                                   double theta) {
  if (!(std::abs(a) <= 1.0) || !(std::abs(b) <= 1.0) ||
      !std::isfinite(theta)) {
    throw InvalidStateError("Bloch lengths must satisfy |a| <= 1 and |b| <= 1 "
                            "(got a=" + num(a) + ", b=" + num(b) + ")");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix rho0 = 0.5 * (id + a * pauli_x());
  ComplexMatrix rho1 = 0.5 * (id + (b * std::cos(theta)) * pauli_x() +
                              (b * std::sin(theta)) * pauli_y());
  return {DensityMatrix(rho0), DensityMatrix(rho1)};
}

PureState bell_state() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return PureState::normalized(v);
}

std::pair<DensityMatrix, DensityMatrix> entanglement_pair() {
  ComplexMatrix rho0 = ComplexMatrix::Zero(4, 4);
  rho0(0, 0) = rho0(0, 3) = rho0(3, 0) = rho0(3, 3) = 0.5;
  ComplexMatrix rho1 = ComplexMatrix::Zero(4, 4);
  rho1(0, 0) = rho1(3, 3) = 0.5;
  return {DensityMatrix(rho0), DensityMatrix(rho1)};
}

}  // namespace qht
