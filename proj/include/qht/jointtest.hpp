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

// Optimal joint measurement of N copies: exact errors, closed forms for
// pure and commuting pairs, fidelity bounds and asymptotic rates. All
// errors assume equal priors 1/2 on the two hypotheses.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qht/states.hpp"

namespace qht {

inline constexpr unsigned kDefaultMomentCap = 12;
inline constexpr std::uint64_t kDefaultCompositionCap = 1'000'000;

/// Projective measurement onto the eigenvectors of rho0 - rho1.
/// accept0_mask[i] is true iff eigenvalue i is strictly positive (beyond
/// 1e-12); zero eigenvalues go to rho1.
struct HelstromTest {
  Povm measurement;
  std::vector<bool> accept0_mask;
};

struct ErrorReport {
  unsigned n = 0;
  std::optional<double> exact_error;  ///< present when d^n <= cap
  double lower_fid = 0;               ///< (1 - sqrt(1 - F^{2n})) / 2
  double upper_fid = 0;               ///< F^n / 2
  std::optional<double> upper_pure;   ///< <psi0|rho1|psi0>^n / 2, rho0 pure
  double rate_lower_fid = 0;          ///< 2 ln F
  double rate_upper_fid = 0;          ///< ln F
  double rate_lower_relent = 0;       ///< -max{D(rho0||rho1), D(rho1||rho0)}
};

HelstromTest helstrom_test(const DensityMatrix& rho0,
                           const DensityMatrix& rho1);

/// (1 - ||rho0 - rho1||_1 / 2) / 2.
double helstrom_error(const DensityMatrix& rho0, const DensityMatrix& rho1);

/// helstrom_error of the n-fold tensor powers, by direct eigensolve.
double joint_error_exact(const DensityMatrix& rho0, const DensityMatrix& rho1,
                         unsigned n, std::uint64_t cap = kDefaultTensorCap);

/// (1 - sqrt(1 - |<psi0|psi1>|^{2n})) / 2.
double pure_joint_error(const PureState& psi0, const PureState& psi1,
                        unsigned n);

ErrorReport error_bounds(const DensityMatrix& rho0, const DensityMatrix& rho1,
                         unsigned n, std::uint64_t cap = kDefaultTensorCap);

/// (1/d^N) tr (rho0^{(x)N} - rho1^{(x)N})^k, expanded over the 2^k
/// sequences of factors so no tensor power is ever formed.
double moments_formula(const DensityMatrix& rho0, const DensityMatrix& rho1,
                       unsigned n_moment, unsigned n_copies,
                       unsigned moment_cap = kDefaultMomentCap);

/// Calls visit(counts) for every composition (x_1, ..., x_k) of n into k
/// non-negative parts, in colexicographic order (x_k varies slowest).
void for_each_composition(unsigned n, std::size_t k,
                          const std::function<void(std::span<const unsigned>)>&
                              visit);

/// C(n + k - 1, k - 1), saturating at UINT64_MAX.
std::uint64_t composition_count(unsigned n, std::size_t k);

/// (1 - ||P_N - Q_N||_1 / 2) / 2 over the multinomial sample space.
double classical_multinomial_error(
    const ProbVector& p, const ProbVector& q, unsigned n,
    std::uint64_t cap = kDefaultCompositionCap);

/// Eigenvalue distributions of rho0 and rho1 in a shared eigenbasis, or
/// nullopt when ||[rho0, rho1]||_F > 1e-10.
std::optional<std::pair<ProbVector, ProbVector>> commuting_reduction(
    const DensityMatrix& rho0, const DensityMatrix& rho1);

}  // namespace qht
