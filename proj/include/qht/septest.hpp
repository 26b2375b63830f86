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

// Separable independent measurements: the same per-copy measurement on each
// of n copies, followed by a decision on the outcome counts.

#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "qht/states.hpp"

namespace qht {

enum class Hypothesis : int { rho0 = 0, rho1 = 1 };

/// Maps outcome counts (one per measurement outcome, summing to n) to a
/// decision. Must be a pure function.
using DecisionRule =
    std::function<Hypothesis(std::span<const std::uint64_t> counts,
                             std::uint64_t n)>;

struct Strategy {
  Povm measurement;
  DecisionRule decide;
};

struct SimReport {
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  double err0 = 0;       ///< fraction deciding rho1 when rho0 is true
  double err1 = 0;       ///< fraction deciding rho0 when rho1 is true
  double avg_error = 0;  ///< (err0 + err1) / 2
  double std_err = 0;    ///< binomial standard error of avg_error
  std::uint64_t seed = 0;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// {P_psi0, I - P_psi0}; accept rho0 iff the second outcome never occurs.
Strategy pure_strategy(const PureState& psi0);

/// <psi0|rho1|psi0>^n / 2.
double pure_strategy_error(const PureState& psi0, const DensityMatrix& rho1,
                           unsigned n);

/// Same value for a pure rho0 given as a density matrix, using
/// <psi0|rho1|psi0> = tr(rho0 rho1). InvalidStateError if rho0 is not pure.
double pure_strategy_error(const DensityMatrix& rho0, const DensityMatrix& rho1,
                           unsigned n);

/// Projectors onto the eigenvectors of
/// M = rho1^{-1/2} sqrt(rho1^{1/2} rho0 rho1^{1/2}) rho1^{-1/2}.
/// For singular rho1, M is diagonalized on supp rho1 and the kernel
/// projector of rho1 is appended as one extra outcome.
Povm fidelity_optimal_measurement(const DensityMatrix& rho0,
                                  const DensityMatrix& rho1);

/// Log-likelihood ratio rule over the given per-copy outcome distributions:
/// decide rho0 iff sum_i c_i (ln p_i - ln q_i) >= 0 (ties, within 1e-12, go
/// to rho0). An observed outcome with p_i = 0 < q_i decides rho1 outright;
/// with q_i = 0 < p_i it decides rho0.
DecisionRule likelihood_rule(const ProbVector& p, const ProbVector& q);

/// fidelity_optimal_measurement followed by likelihood_rule.
Strategy likelihood_strategy(const DensityMatrix& rho0,
                             const DensityMatrix& rho1);

/// min_lambda log sum p_i^lambda q_i^(1-lambda) for the distributions
/// induced by the fidelity-optimal measurement; -inf for disjoint supports.
double separable_rate(const DensityMatrix& rho0, const DensityMatrix& rho1);

/// Index of the outcome selected by u in [0, 1) by inverse CDF over the
/// fixed outcome order. Zero-probability outcomes are never selected.
std::size_t sample_outcome(const ProbVector& dist, double u);

/// Monte Carlo estimate of both error types. Trial t under hypothesis h
/// draws from CounterStream(seed, h, t), so the report depends only on the
/// arguments.
SimReport simulate(const Strategy& strategy, const DensityMatrix& rho0,
                   const DensityMatrix& rho1, std::uint64_t n,
                   std::uint64_t trials, std::uint64_t seed);

}  // namespace qht
