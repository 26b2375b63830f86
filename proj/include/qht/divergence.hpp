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

// Classical and quantum distances. All entropic values are in nats;
// support violations return +infinity (never a large finite sentinel).

#pragma once

#include "qht/states.hpp"

namespace qht {

/// Minimum of g(lambda) = log sum_i p_i^lambda q_i^(1-lambda) over [0, 1].
struct ChernoffResult {
  double lambda_star;
  double log_sum_min;    ///< <= 0; -inf when P and Q have disjoint support
  double chernoff_info;  ///< == -log_sum_min
};

/// D(S || P) = sum s_i ln(s_i / p_i), with 0 ln(0/x) = 0.
double kl(const ProbVector& s, const ProbVector& p);

/// sum_i sqrt(p_i q_i).
double classical_fidelity(const ProbVector& p, const ProbVector& q);

/// g(lambda). Only indices with p_i > 0 and q_i > 0 contribute, which is the
/// limit of each term at the endpoints as well. Returns -inf when no index
/// contributes.
double chernoff_log_sum(const ProbVector& p, const ProbVector& q,
                        double lambda);

/// Chernoff information. p == q reports lambda_star = 1/2.
ChernoffResult chernoff_classical(const ProbVector& p, const ProbVector& q);

/// s_i = p_i^lambda q_i^(1-lambda) / sum_j p_j^lambda q_j^(1-lambda), same
/// zero conventions as chernoff_log_sum. DegenerateInputError when the
/// normalizer vanishes.
ProbVector tilted_distribution(const ProbVector& p, const ProbVector& q,
                               double lambda);

/// lambda at which the tilted distribution S is equidistant,
/// D(S || P) = D(S || Q), found by bisection. DegenerateInputError when the
/// difference does not change sign on [0, 1] (e.g. p == q).
double balance_lambda(const ProbVector& p, const ProbVector& q);

/// tr sqrt(sqrt(rho0) rho1 sqrt(rho0)), evaluated as the trace norm of
/// sqrt(rho0) sqrt(rho1).
double fidelity(const DensityMatrix& rho0, const DensityMatrix& rho1);

/// tr rho0 (log rho0 - log rho1); +inf when supp rho0 is not inside
/// supp rho1.
double qrel_entropy(const DensityMatrix& rho0, const DensityMatrix& rho1);

}  // namespace qht
