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

#include "qht/divergence.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qht/golden_section.hpp"

namespace qht {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Golden-section stopping width on lambda.
constexpr double kLambdaWidth = 1e-10;
// Equidistance target for balance_lambda.
constexpr double kBalanceTol = 1e-10;
// Eigenvalues of a state below this are treated as exact zeros before the
// square root, so that round-off in a rank-deficient state (~1e-17) does not
// turn into ~3e-9 after sqrt.
constexpr double kSqrtFloor = 1e-13;
// tr(rho0 P_ker(rho1)) above this means supp rho0 leaks out of supp rho1.
constexpr double kSupportLeakTol = 1e-9;

void require_same_length(const ProbVector& a, const ProbVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("distributions have different lengths (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("states have different dimensions (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
}

// Indices where both distributions are positive, with their logs.
struct Overlap {
  std::vector<double> log_p;
  std::vector<double> log_q;
  std::vector<Eigen::Index> index;
};

Overlap overlap_of(const ProbVector& p, const ProbVector& q) {
  Overlap o;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && q[i] > 0.0) {
      o.index.push_back(i);
      o.log_p.push_back(std::log(p[i]));
      o.log_q.push_back(std::log(q[i]));
    }
  }
  return o;
}

// Unnormalized tilted weights w_i = exp(lambda ln p_i + (1-lambda) ln q_i).
std::vector<double> tilted_weights(const Overlap& o, double lambda) {
  std::vector<double> w(o.index.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = std::exp(lambda * o.log_p[k] + (1.0 - lambda) * o.log_q[k]);
  }
  return w;
}

double log_sum(const Overlap& o, double lambda) {
  if (o.index.empty()) return -kInf;
  double total = 0.0;
  for (double w : tilted_weights(o, lambda)) total += w;
  return std::log(total);
}

// g'(lambda) = E_S[ln p - ln q] under the tilted distribution.
double log_sum_slope(const Overlap& o, double lambda) {
  const std::vector<double> w = tilted_weights(o, lambda);
  double total = 0.0;
  double moment = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    total += w[k];
    moment += w[k] * (o.log_p[k] - o.log_q[k]);
  }
  return moment / total;
}

// Square root of a PSD matrix with eigenvalues under kSqrtFloor zeroed.
ComplexMatrix floored_sqrt(const ComplexMatrix& rho) {
  const auto spectrum = hermitian_eig(rho);
  const double floor =
      kSqrtFloor * std::max(1.0, spectrum.eigenvalues.maxCoeff());
  return spectrum.apply(
      [floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
}

}  // namespace

double kl(const ProbVector& s, const ProbVector& p) {
  require_same_length(s, p);
  double total = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] == 0.0) continue;
    if (p[i] == 0.0) return kInf;
    total += s[i] * std::log(s[i] / p[i]);
  }
  return std::max(total, 0.0);
}

double classical_fidelity(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q);
  double total = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) total += std::sqrt(p[i] * q[i]);
  return std::clamp(total, 0.0, 1.0);
}

double chernoff_log_sum(const ProbVector& p, const ProbVector& q,
                        double lambda) {
  require_same_length(p, q);
  return log_sum(overlap_of(p, q), lambda);
}

ChernoffResult chernoff_classical(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q);
  const Overlap o = overlap_of(p, q);
  if (o.index.empty()) return {0.5, -kInf, kInf};
  if (p.probs() == q.probs()) return {0.5, 0.0, 0.0};

  auto g = [&o](double lambda) { return log_sum(o, lambda); };
  const Bracket<double> bracket =
      golden_section_minimize(g, 0.0, 1.0, kLambdaWidth);
  double lambda = bracket.mid();

  // Function comparisons stop resolving lambda near a flat minimum (the
  // change in g is ~g'' dl^2); g is convex, so finish on the sign of g'.
  double lo = 0.0;
  double hi = 1.0;
  if (log_sum_slope(o, lo) < 0.0 && log_sum_slope(o, hi) > 0.0) {
    for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (log_sum_slope(o, mid) < 0.0 ? lo : hi) = mid;
    }
    lambda = 0.5 * (lo + hi);
  }

  double best = g(lambda);
  for (double end : {0.0, 1.0}) {
    const double v = g(end);
    if (v < best) {
      best = v;
      lambda = end;
    }
  }
  best = std::min(best, 0.0);
  return {lambda, best, -best};
}

ProbVector tilted_distribution(const ProbVector& p, const ProbVector& q,
                               double lambda) {
  require_same_length(p, q);
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("tilt parameter must lie in [0, 1]", lambda);
  }
  const Overlap o = overlap_of(p, q);
  const std::vector<double> w = tilted_weights(o, lambda);
  double total = 0.0;
  for (double x : w) total += x;
  if (!(total > 0.0)) {
    throw DegenerateInputError(
        "tilted distribution normalizer is zero (disjoint supports)");
  }
  RealVector s = RealVector::Zero(p.size());
  for (std::size_t k = 0; k < w.size(); ++k) s(o.index[k]) = w[k] / total;
  return ProbVector(std::move(s));
}

double balance_lambda(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q);
  auto gap = [&p, &q](double lambda) {
    const ProbVector s = tilted_distribution(p, q, lambda);
    return kl(s, p) - kl(s, q);
  };
  // gap(0) = D(Q'||P) >= 0 and gap(1) = -D(P'||Q) <= 0, decreasing between.
  const double at0 = gap(0.0);
  const double at1 = gap(1.0);
  const bool flat0 = std::abs(at0) <= kBalanceTol;
  const bool flat1 = std::abs(at1) <= kBalanceTol;
  if (flat0 && flat1) {
    throw DegenerateInputError(
        "D(S||P) - D(S||Q) does not change sign on [0, 1] "
        "(distributions coincide on their common support)");
  }
  if (flat0) return 0.0;
  if (flat1) return 1.0;
  if (!(at0 > 0.0 && at1 < 0.0)) {
    throw DegenerateInputError(
        "D(S||P) - D(S||Q) does not change sign on [0, 1]");
  }
  double lo = 0.0;
  double hi = 1.0;
  double mid = 0.5;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double v = gap(mid);
    // Bisect on the sign to full resolution: near-equal distributions make
    // the gap so flat that a tolerance on it would leave lambda loose.
    if (v == 0.0 || hi - lo < 1e-15) break;
    (v > 0.0 ? lo : hi) = mid;
  }
  return mid;
}

double fidelity(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  require_same_dim(rho0, rho1);
  if (rho0.matrix() == rho1.matrix()) return 1.0;
  // ||sqrt(rho0) sqrt(rho1)||_1 = tr sqrt(sqrt(rho0) rho1 sqrt(rho0)); the
  // singular values avoid square-rooting round-off in the product.
  const ComplexMatrix product =
      floored_sqrt(rho0.matrix()) * floored_sqrt(rho1.matrix());
  Eigen::BDCSVD<ComplexMatrix> svd(product);
  return std::clamp(svd.singularValues().sum(), 0.0, 1.0);
}

double qrel_entropy(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  require_same_dim(rho0, rho1);
  if (rho0.matrix() == rho1.matrix()) return 0.0;
  double self_term = 0.0;
  for (double x : hermitian_eigenvalues(rho0.matrix())) {
    if (x > 0.0) self_term += x * std::log(x);
  }

  const auto spectrum = hermitian_eig(rho1.matrix());
  const double cutoff =
      kDefaultRankTol * std::max(spectrum.eigenvalues.maxCoeff(), 0.0);
  double cross_term = 0.0;
  double leak = 0.0;
  for (Eigen::Index k = 0; k < spectrum.eigenvalues.size(); ++k) {
    const auto v = spectrum.eigenvectors.col(k);
    const double weight = (v.adjoint() * rho0.matrix() * v)(0, 0).real();
    const double lambda = spectrum.eigenvalues(k);
    if (lambda > cutoff && lambda > 0.0) {
      cross_term += weight * std::log(lambda);
    } else {
      leak += weight;
    }
  }
  if (leak > kSupportLeakTol) return kInf;
  return std::max(self_term - cross_term, 0.0);
}

}  // namespace qht
