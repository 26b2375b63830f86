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

#include "qht/septest.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qht/counter_rng.hpp"
#include "qht/divergence.hpp"

namespace qht {

namespace {

constexpr double kLlrTieTol = 1e-12;
// Outcome probabilities at or below this count as impossible in the
// likelihood rule.
constexpr double kNegligibleProb = 1e-13;

void require_dim(Eigen::Index expected, Eigen::Index got, const char* what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + " has dimension " +
                         std::to_string(got) + ", expected " +
                         std::to_string(expected));
  }
}

std::vector<double> cumulative(const ProbVector& dist) {
  std::vector<double> cdf(static_cast<std::size_t>(dist.size()));
  double acc = 0.0;
  for (Eigen::Index i = 0; i < dist.size(); ++i) {
    acc += dist[i];
    cdf[static_cast<std::size_t>(i)] = acc;
  }
  return cdf;
}

std::size_t pick(const ProbVector& dist, const std::vector<double>& cdf,
                 double u) {
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    if (u < cdf[i] && dist[static_cast<Eigen::Index>(i)] > 0.0) return i;
  }
  // u landed above the rounded total; fall back to the last possible outcome.
  for (std::size_t i = cdf.size(); i-- > 0;) {
    if (dist[static_cast<Eigen::Index>(i)] > 0.0) return i;
  }
  return cdf.size() - 1;
}

}  // namespace

Strategy pure_strategy(const PureState& psi0) {
  const ComplexMatrix proj = projector_of(psi0);
  const ComplexMatrix rest =
      ComplexMatrix::Identity(psi0.dim(), psi0.dim()) - proj;
  DecisionRule rule = [](std::span<const std::uint64_t> counts,
                         std::uint64_t) {
    return counts[1] == 0 ? Hypothesis::rho0 : Hypothesis::rho1;
  };
  return {Povm({proj, rest}), std::move(rule)};
}

double pure_strategy_error(const PureState& psi0, const DensityMatrix& rho1,
                           unsigned n) {
  require_dim(psi0.dim(), rho1.dim(), "alternative state");
  if (n == 0) throw DimensionError("number of copies must be at least 1");
  const ComplexVector& v = psi0.vector();
  const double overlap =
      std::clamp(v.dot(rho1.matrix() * v).real(), 0.0, 1.0);
  return 0.5 * std::pow(overlap, n);
}

double pure_strategy_error(const DensityMatrix& rho0, const DensityMatrix& rho1,
                           unsigned n) {
  require_dim(rho0.dim(), rho1.dim(), "alternative state");
  if (n == 0) throw DimensionError("number of copies must be at least 1");
  if (!rho0.is_pure()) throw InvalidStateError("null state is not pure");
  const double overlap = std::clamp(
      rho0.matrix().cwiseProduct(rho1.matrix().transpose()).sum().real(), 0.0,
      1.0);
  return 0.5 * std::pow(overlap, n);
}

Povm fidelity_optimal_measurement(const DensityMatrix& rho0,
                                  const DensityMatrix& rho1) {
  require_dim(rho0.dim(), rho1.dim(), "alternative state");
  const Eigen::Index d = rho0.dim();
  const ComplexMatrix& r0 = rho0.matrix();
  const ComplexMatrix& r1 = rho1.matrix();

  const ComplexMatrix root1 = mat_sqrt(r1);
  const ComplexMatrix inv_root1 = support_pinv_sqrt(r1);
  ComplexMatrix inner = root1 * r0 * root1;
  inner = (inner + inner.adjoint()) * Complex(0.5);
  ComplexMatrix m = inv_root1 * mat_sqrt(inner) * inv_root1;
  m = (m + m.adjoint()) * Complex(0.5);

  // Orthonormal basis of supp rho1.
  const auto spectrum1 = hermitian_eig(r1);
  const double cutoff =
      kDefaultRankTol * std::max(spectrum1.eigenvalues.maxCoeff(), 0.0);
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = 0; k < d; ++k) {
    if (spectrum1.eigenvalues(k) > cutoff) support.push_back(k);
  }
  const auto r = static_cast<Eigen::Index>(support.size());
  ComplexMatrix basis(d, r);
  for (Eigen::Index j = 0; j < r; ++j) {
    basis.col(j) = spectrum1.eigenvectors.col(support[static_cast<std::size_t>(j)]);
  }

  ComplexMatrix restricted = basis.adjoint() * m * basis;
  restricted = (restricted + restricted.adjoint()) * Complex(0.5);
  const ComplexMatrix vectors = basis * hermitian_eig(restricted).eigenvectors;

  std::vector<ComplexMatrix> outcomes;
  for (Eigen::Index j = 0; j < r; ++j) {
    outcomes.push_back(vectors.col(j) * vectors.col(j).adjoint());
  }
  if (r < d) {
    outcomes.push_back(ComplexMatrix::Identity(d, d) - basis * basis.adjoint());
  }
  return Povm(std::move(outcomes));
}

DecisionRule likelihood_rule(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) {
    throw DimensionError("outcome distributions have different lengths");
  }
  enum class Kind { regular, forces_rho0, forces_rho1, impossible };
  struct Outcome {
    Kind kind;
    double llr;
  };
  std::vector<Outcome> table;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const bool p_zero = p[i] <= kNegligibleProb;
    const bool q_zero = q[i] <= kNegligibleProb;
    if (p_zero && q_zero) {
      table.push_back({Kind::impossible, 0.0});
    } else if (p_zero) {
      table.push_back({Kind::forces_rho1, 0.0});
    } else if (q_zero) {
      table.push_back({Kind::forces_rho0, 0.0});
    } else {
      table.push_back({Kind::regular, std::log(p[i]) - std::log(q[i])});
    }
  }
  return [table = std::move(table)](std::span<const std::uint64_t> counts,
                                    std::uint64_t) {
    double llr = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (counts[i] == 0) continue;
      switch (table[i].kind) {
        case Kind::forces_rho1:
          return Hypothesis::rho1;
        case Kind::forces_rho0:
          return Hypothesis::rho0;
        case Kind::impossible:
          break;
        case Kind::regular:
          llr += static_cast<double>(counts[i]) * table[i].llr;
          break;
      }
    }
    return llr >= -kLlrTieTol ? Hypothesis::rho0 : Hypothesis::rho1;
  };
}

Strategy likelihood_strategy(const DensityMatrix& rho0,
                             const DensityMatrix& rho1) {
  Povm m = fidelity_optimal_measurement(rho0, rho1);
  DecisionRule rule = likelihood_rule(outcome_distribution(m, rho0),
                                      outcome_distribution(m, rho1));
  return {std::move(m), std::move(rule)};
}

double separable_rate(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  const Povm m = fidelity_optimal_measurement(rho0, rho1);
  return chernoff_classical(outcome_distribution(m, rho0),
                            outcome_distribution(m, rho1))
      .log_sum_min;
}

std::size_t sample_outcome(const ProbVector& dist, double u) {
  return pick(dist, cumulative(dist), u);
}

SimReport simulate(const Strategy& strategy, const DensityMatrix& rho0,
                   const DensityMatrix& rho1, std::uint64_t n,
                   std::uint64_t trials, std::uint64_t seed) {
  require_dim(strategy.measurement.dim(), rho0.dim(), "null state");
  require_dim(strategy.measurement.dim(), rho1.dim(), "alternative state");
  if (trials == 0) throw DegenerateInputError("trials must be at least 1");
  if (n == 0) throw DimensionError("number of copies must be at least 1");

  const DensityMatrix* states[2] = {&rho0, &rho1};
  std::uint64_t errors[2] = {0, 0};
  std::vector<std::uint64_t> counts(strategy.measurement.size());
  for (int h = 0; h < 2; ++h) {
    const ProbVector dist = outcome_distribution(strategy.measurement, *states[h]);
    const std::vector<double> cdf = cumulative(dist);
    for (std::uint64_t t = 0; t < trials; ++t) {
      CounterStream stream(seed, static_cast<std::uint64_t>(h), t);
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint64_t k = 0; k < n; ++k) {
        ++counts[pick(dist, cdf, stream.next_uniform())];
      }
      if (strategy.decide(counts, n) != static_cast<Hypothesis>(h)) {
        ++errors[h];
      }
    }
  }

  SimReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  const auto t = static_cast<double>(trials);
  report.err0 = static_cast<double>(errors[0]) / t;
  report.err1 = static_cast<double>(errors[1]) / t;
  report.avg_error = 0.5 * (report.err0 + report.err1);
  report.std_err = std::sqrt(report.err0 * (1.0 - report.err0) / (4.0 * t) +
                             report.err1 * (1.0 - report.err1) / (4.0 * t));
  return report;
}

}  // namespace qht
