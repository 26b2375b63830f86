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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qht/errors.hpp"
#include "qht/random.hpp"
#include "qht/states.hpp"

namespace qht {
namespace {

TEST(DensityMatrix, AcceptsValidState) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(3);
  EXPECT_EQ(rho.dim(), 3);
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_FALSE(rho.is_pure());
}

TEST(DensityMatrix, RejectsBadTrace) {
  try {
    DensityMatrix(ComplexMatrix::Identity(2, 2));
    FAIL() << "expected InvalidStateError";
  } catch (const InvalidStateError& e) {
    EXPECT_NE(std::string(e.what()).find("trace"), std::string::npos);
  }
}

TEST(DensityMatrix, RejectsNegativeEigenvalue) {
  ComplexMatrix m(2, 2);
  m << 1.2, 0.0, 0.0, -0.2;
  try {
    DensityMatrix{m};
    FAIL() << "expected InvalidStateError";
  } catch (const InvalidStateError& e) {
    EXPECT_NE(std::string(e.what()).find("positive semidefinite"),
              std::string::npos);
  }
}

TEST(DensityMatrix, RejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 0.5, 0.1, 0.0, 0.5;
  try {
    DensityMatrix{m};
    FAIL() << "expected InvalidStateError";
  } catch (const InvalidStateError& e) {
    EXPECT_NE(std::string(e.what()).find("Hermitian"), std::string::npos);
  }
}

TEST(DensityMatrix, RejectsShapeAndNonFinite) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::Zero(2, 3)), InvalidStateError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::Zero(0, 0)), InvalidStateError);
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 0.5;
  m(1, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(DensityMatrix{m}, InvalidStateError);
}

TEST(DensityMatrix, ToleratesRoundoffAtThresholds) {
  ComplexMatrix m(2, 2);
  m << 1.0 + 5e-11, 0.0, 0.0, -5e-11;
  EXPECT_NO_THROW(DensityMatrix{m});
}

TEST(DensityMatrix, PurityDetection) {
  EXPECT_TRUE(DensityMatrix::from_pure(PureState::basis(3, 1)).is_pure());
  EXPECT_TRUE(pauli_pair(1.0, 0.0, 0.0).first.is_pure());
}

TEST(PureState, NormValidation) {
  ComplexVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(PureState{v}, InvalidStateError);
  const PureState psi = PureState::normalized(v);
  EXPECT_NEAR(psi.vector().norm(), 1.0, 1e-15);
  EXPECT_THROW(PureState::normalized(ComplexVector::Zero(2)), InvalidStateError);
  EXPECT_THROW(PureState::basis(2, 2), DimensionError);
}

TEST(ProjectorOf, Examples) {
  EXPECT_EQ(projector_of(PureState::basis(2, 0)),
            ComplexMatrix((ComplexMatrix(2, 2) << 1.0, 0.0, 0.0, 0.0).finished()));
  ComplexVector plus(2);
  plus << 1.0, 1.0;
  const ComplexMatrix p = projector_of(PureState::normalized(plus));
  EXPECT_LE((p - ComplexMatrix::Constant(2, 2, 0.5)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ProjectorOfProperty, RankOneIdempotent) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState psi = random_pure_state(1 + trial % 5, rng);
    const ComplexMatrix p = projector_of(psi);
    EXPECT_LE((p * p - p).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
    EXPECT_LE(hermiticity_defect(p), 1e-15);
  }
}

TEST(Povm, RejectsIncomplete) {
  try {
    Povm({ComplexMatrix::Identity(2, 2) * 0.5});
    FAIL() << "expected InvalidStateError";
  } catch (const InvalidStateError& e) {
    EXPECT_NE(std::string(e.what()).find("identity"), std::string::npos);
  }
}

TEST(Povm, RejectsNonPositiveOutcome) {
  ComplexMatrix a(2, 2);
  a << 1.5, 0.0, 0.0, 0.5;
  ComplexMatrix b(2, 2);
  b << -0.5, 0.0, 0.0, 0.5;
  EXPECT_THROW(Povm({a, b}), InvalidStateError);
}

TEST(Povm, RejectsEmptyAndMixedDimensions) {
  EXPECT_THROW(Povm(std::vector<ComplexMatrix>{}), InvalidStateError);
  EXPECT_THROW(Povm({ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(3, 3)}),
               Error);
}

TEST(OutcomeDistribution, Examples) {
  const Povm computational = Povm::projective(ComplexMatrix::Identity(2, 2));
  const ProbVector p = outcome_distribution(computational, DensityMatrix::maximally_mixed(2));
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);

  const PureState psi0 = bell_state();
  const ComplexMatrix proj = projector_of(psi0);
  const Povm two({proj, ComplexMatrix(ComplexMatrix::Identity(4, 4) - proj)});
  const auto [rho0, rho1] = entanglement_pair();
  const ProbVector q0 = outcome_distribution(two, rho0);
  EXPECT_NEAR(q0[0], 1.0, 1e-15);
  EXPECT_NEAR(q0[1], 0.0, 1e-15);
  const ProbVector q1 = outcome_distribution(two, rho1);
  EXPECT_NEAR(q1[0], 0.5, 1e-15);
  EXPECT_NEAR(q1[1], 0.5, 1e-15);
}

TEST(OutcomeDistribution, DimensionMismatch) {
  EXPECT_THROW(outcome_distribution(Povm::projective(ComplexMatrix::Identity(2, 2)),
                                    DensityMatrix::maximally_mixed(3)),
               DimensionError);
}

TEST(OutcomeDistributionProperty, ValidDistributionOnRandomInputs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index d = 2 + trial % 4;
    const DensityMatrix rho = trial % 3 == 0
                                  ? oracle::random_rank_state(d, 1 + trial % d, rng)
                                  : random_density_matrix(d, rng);
    const Povm m = Povm::projective(random_unitary(d, rng));
    const ProbVector p = outcome_distribution(m, rho);
    EXPECT_GE(p.probs().minCoeff(), 0.0);
    EXPECT_NEAR(p.probs().sum(), 1.0, 1e-9);
  }
}

TEST(OutcomeDistributionProperty, BornRuleForPureStates) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index d = 2 + trial % 4;
    const PureState psi = random_pure_state(d, rng);
    const PureState phi = random_pure_state(d, rng);
    const ComplexMatrix p = projector_of(psi);
    const Povm m({p, ComplexMatrix(ComplexMatrix::Identity(d, d) - p)});
    const ProbVector dist = outcome_distribution(m, DensityMatrix::from_pure(phi));
    EXPECT_NEAR(dist[0], std::norm(phi.vector().dot(psi.vector())), 1e-12);
  }
}

TEST(ProbVector, ClampsAndRenormalizes) {
  const ProbVector p{0.5 + 5e-13, 0.5, -5e-13};
  EXPECT_EQ(p[2], 0.0);
  EXPECT_NEAR(p.probs().sum(), 1.0, 1e-15);
  EXPECT_THROW((ProbVector{1.1, -0.1}), InvalidStateError);
  EXPECT_THROW((ProbVector{0.5, 0.4}), InvalidStateError);
  EXPECT_THROW(ProbVector{RealVector(0)}, InvalidStateError);
}

TEST(TensorPowerState, ValidAndTraceMultiplicative) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density_matrix(2 + trial % 2, rng);
    const unsigned n = 1 + static_cast<unsigned>(trial % 4);
    const DensityMatrix big = tensor_power(rho, n);
    EXPECT_NEAR(big.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(big.matrix()).minCoeff(), -1e-12);
  }
  EXPECT_THROW(tensor_power(DensityMatrix::maximally_mixed(4), 7), CapExceededError);
}

TEST(PauliPair, MaximallyMixedAtOrigin) {
  const auto [rho0, rho1] = pauli_pair(0.0, 0.0, 1.0);
  EXPECT_LE((rho0.matrix() - ComplexMatrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((rho1.matrix() - ComplexMatrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PauliPair, UnitBlochLengthIsPlusProjector) {
  const DensityMatrix rho0 = pauli_pair(1.0, 0.0, 0.0).first;
  EXPECT_LE((rho0.matrix() - ComplexMatrix::Constant(2, 2, 0.5)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PauliPair, EigenvaluesFromBlochLength) {
  const auto [rho0, rho1] = pauli_pair(0.8, 0.8, std::numbers::pi / 2);
  for (const DensityMatrix* rho : {&rho0, &rho1}) {
    const auto [lo, hi] = oracle::eig2(rho->matrix());
    EXPECT_NEAR(lo, 0.1, 1e-14);
    EXPECT_NEAR(hi, 0.9, 1e-14);
  }
  // sigma_2 carries +i above the diagonal.
  EXPECT_NEAR(rho1.matrix()(0, 1).imag(), 0.4, 1e-15);
}

TEST(PauliPair, RejectsLongBlochVectors) {
  EXPECT_THROW(pauli_pair(1.01, 0.0, 0.0), InvalidStateError);
  EXPECT_THROW(pauli_pair(0.0, -1.5, 0.0), InvalidStateError);
}

TEST(EntanglementPair, MatchesDisplayedMatrices) {
  const auto [rho0, rho1] = entanglement_pair();
  ComplexMatrix e0 = ComplexMatrix::Zero(4, 4);
  e0(0, 0) = e0(0, 3) = e0(3, 0) = e0(3, 3) = 0.5;
  ComplexMatrix e1 = ComplexMatrix::Zero(4, 4);
  e1(0, 0) = e1(3, 3) = 0.5;
  EXPECT_EQ(rho0.matrix(), e0);
  EXPECT_EQ(rho1.matrix(), e1);
  EXPECT_NEAR(rho0.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(rho1.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_TRUE(rho0.is_pure());
  EXPECT_LE((projector_of(bell_state()) - e0).cwiseAbs().maxCoeff(), 1e-15);
}

}  // namespace
}  // namespace qht
