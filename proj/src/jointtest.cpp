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

#include "qht/jointtest.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "qht/divergence.hpp"

namespace qht {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPositiveEigenTol = 1e-12;
constexpr double kCommuteTol = 1e-10;
// Eigenvalues of rho0 closer than this are treated as one eigenspace when
// building a shared eigenbasis.
constexpr double kClusterTol = 1e-6;

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("states have different dimensions (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
}

void require_copies(unsigned n) {
  if (n == 0) throw DimensionError("number of copies must be at least 1");
}

double clamp_error(double r) { return std::clamp(r, 0.0, 0.5); }

// (1 - sqrt(1 - x)) / 2 without cancellation for small x.
double half_one_minus_sqrt(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return 0.5 * x / (1.0 + std::sqrt(1.0 - x));
}

double safe_log(double x) { return x > 0.0 ? std::log(x) : -kInf; }

bool fits_cap(Eigen::Index dim, unsigned n, std::uint64_t cap) {
  try {
    detail::capped_power(static_cast<std::uint64_t>(dim), n, cap, "");
    return true;
  } catch (const CapExceededError&) {
    return false;
  }
}

}  // namespace

HelstromTest helstrom_test(const DensityMatrix& rho0,
                           const DensityMatrix& rho1) {
  require_same_dim(rho0, rho1);
  const auto spectrum = hermitian_eig(rho0.matrix() - rho1.matrix());
  std::vector<bool> mask(static_cast<std::size_t>(spectrum.eigenvalues.size()));
  for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i) {
    mask[static_cast<std::size_t>(i)] =
        spectrum.eigenvalues(i) > kPositiveEigenTol;
  }
  return {Povm::projective(spectrum.eigenvectors), std::move(mask)};
}

double helstrom_error(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  require_same_dim(rho0, rho1);
  return clamp_error(0.5 * (1.0 - 0.5 * trace_norm(rho0.matrix() -
                                                   rho1.matrix())));
}

double joint_error_exact(const DensityMatrix& rho0, const DensityMatrix& rho1,
                         unsigned n, std::uint64_t cap) {
  require_same_dim(rho0, rho1);
  require_copies(n);
  const ComplexMatrix diff =
      tensor_power(rho0.matrix(), n, cap) - tensor_power(rho1.matrix(), n, cap);
  return clamp_error(0.5 * (1.0 - 0.5 * trace_norm(diff)));
}

double pure_joint_error(const PureState& psi0, const PureState& psi1,
                        unsigned n) {
  if (psi0.dim() != psi1.dim()) {
    throw DimensionError("pure states have different dimensions");
  }
  require_copies(n);
  const double overlap2 = std::norm(psi0.vector().dot(psi1.vector()));
  return clamp_error(half_one_minus_sqrt(std::pow(overlap2, n)));
}

ErrorReport error_bounds(const DensityMatrix& rho0, const DensityMatrix& rho1,
                         unsigned n, std::uint64_t cap) {
  require_same_dim(rho0, rho1);
  require_copies(n);
  ErrorReport report;
  report.n = n;

  const double f = fidelity(rho0, rho1);
  const double fn = std::pow(f, n);
  report.lower_fid = clamp_error(half_one_minus_sqrt(fn * fn));
  report.upper_fid = clamp_error(0.5 * fn);
  report.rate_upper_fid = safe_log(f);
  report.rate_lower_fid = 2.0 * report.rate_upper_fid;
  report.rate_lower_relent =
      0.0 - std::max(qrel_entropy(rho0, rho1), qrel_entropy(rho1, rho0));

  if (fits_cap(rho0.dim(), n, cap)) {
    report.exact_error = joint_error_exact(rho0, rho1, n, cap);
  }

  if (rho0.is_pure()) {
    // <psi0|rho1|psi0> = tr(rho0 rho1) for pure rho0.
    const double overlap = std::clamp(
        rho0.matrix().cwiseProduct(rho1.matrix().transpose()).sum().real(), 0.0,
        1.0);
    report.upper_pure = clamp_error(0.5 * std::pow(overlap, n));
  }
  return report;
}

double moments_formula(const DensityMatrix& rho0, const DensityMatrix& rho1,
                       unsigned n_moment, unsigned n_copies,
                       unsigned moment_cap) {
  require_same_dim(rho0, rho1);
  require_copies(n_copies);
  if (n_moment == 0) throw DimensionError("moment order must be at least 1");
  if (n_moment > moment_cap || n_moment >= 63) {
    throw CapExceededError("moment expansion term count",
                           n_moment >= 63 ? UINT64_MAX : (1ULL << n_moment),
                           moment_cap >= 63 ? UINT64_MAX : (1ULL << moment_cap));
  }
  const Eigen::Index d = rho0.dim();
  const ComplexMatrix* factor[2] = {&rho0.matrix(), &rho1.matrix()};
  Complex total = 0.0;
  const std::uint64_t terms = 1ULL << n_moment;
  for (std::uint64_t seq = 0; seq < terms; ++seq) {
    // Bit i of seq selects rho_{k_i}; the sign is (-1)^{sum k_i}.
    ComplexMatrix product = *factor[seq & 1];
    for (unsigned i = 1; i < n_moment; ++i) {
      product = product * *factor[(seq >> i) & 1];
    }
    const Complex t = product.trace();
    Complex power = 1.0;
    for (unsigned c = 0; c < n_copies; ++c) power *= t;
    total += (std::popcount(seq) % 2 == 0) ? power : -power;
  }
  return total.real() / std::pow(static_cast<double>(d), n_copies);
}

std::uint64_t composition_count(unsigned n, std::size_t k) {
  if (k == 0) return n == 0 ? 1 : 0;
  // C(n + k - 1, k - 1) built up as a running product of exact binomials.
  const std::uint64_t r = std::min<std::uint64_t>(k - 1, n);
  const std::uint64_t top = n + k - 1;
  std::uint64_t value = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t factor = top - r + i;
    if (value > UINT64_MAX / factor) return UINT64_MAX;
    value = value * factor / i;
  }
  return value;
}

void for_each_composition(
    unsigned n, std::size_t k,
    const std::function<void(std::span<const unsigned>)>& visit) {
  if (k == 0) return;
  std::vector<unsigned> x(k, 0);
  // Fill from the last slot down; slot 0 takes the remainder.
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t slot,
                                                        unsigned left) {
    if (slot == 0) {
      x[0] = left;
      visit(x);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      x[slot] = v;
      fill(slot - 1, left - v);
    }
    x[slot] = 0;
  };
  fill(k - 1, n);
}

double classical_multinomial_error(const ProbVector& p, const ProbVector& q,
                                   unsigned n, std::uint64_t cap) {
  if (p.size() != q.size()) {
    throw DimensionError("distributions have different lengths (" +
                         std::to_string(p.size()) + " vs " +
                         std::to_string(q.size()) + ")");
  }
  require_copies(n);
  const auto k = static_cast<std::size_t>(p.size());
  const std::uint64_t count = composition_count(n, k);
  if (count > cap) {
    throw CapExceededError("multinomial composition count", count, cap);
  }

  // powers[i][x] = p_i^x, with 0^0 = 1.
  auto power_table = [n, k](const ProbVector& dist) {
    std::vector<std::vector<double>> table(k, std::vector<double>(n + 1, 1.0));
    for (std::size_t i = 0; i < k; ++i) {
      for (unsigned x = 1; x <= n; ++x) {
        table[i][x] = table[i][x - 1] * dist[static_cast<Eigen::Index>(i)];
      }
    }
    return table;
  };
  const auto pp = power_table(p);
  const auto qq = power_table(q);

  double l1 = 0.0;
  for_each_composition(n, k, [&](std::span<const unsigned> x) {
    double coef = 1.0;
    unsigned left = n;
    double pn = 1.0;
    double qn = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      // coef *= C(left, x_i)
      for (unsigned j = 1; j <= x[i]; ++j) {
        coef = coef * static_cast<double>(left - x[i] + j) / j;
      }
      left -= x[i];
      pn *= pp[i][x[i]];
      qn *= qq[i][x[i]];
    }
    l1 += coef * std::abs(pn - qn);
  });
  return clamp_error(0.5 * (1.0 - 0.5 * l1));
}

std::optional<std::pair<ProbVector, ProbVector>> commuting_reduction(
    const DensityMatrix& rho0, const DensityMatrix& rho1) {
  require_same_dim(rho0, rho1);
  if (commutator_norm(rho0.matrix(), rho1.matrix()) > kCommuteTol) {
    return std::nullopt;
  }
  const auto spectrum = hermitian_eig(rho0.matrix());
  ComplexMatrix basis = spectrum.eigenvectors;
  const Eigen::Index d = rho0.dim();

  // Inside each (near-)degenerate eigenspace of rho0, rotate to diagonalize
  // rho1 as well.
  Eigen::Index start = 0;
  while (start < d) {
    Eigen::Index end = start + 1;
    while (end < d && spectrum.eigenvalues(end) - spectrum.eigenvalues(end - 1) <=
                          kClusterTol) {
      ++end;
    }
    const Eigen::Index width = end - start;
    if (width > 1) {
      const ComplexMatrix block = basis.middleCols(start, width);
      const ComplexMatrix restricted = block.adjoint() * rho1.matrix() * block;
      const auto inner = hermitian_eig(restricted);
      basis.middleCols(start, width) = block * inner.eigenvectors;
    }
    start = end;
  }

  const RealVector p = (basis.adjoint() * rho0.matrix() * basis).diagonal().real();
  const RealVector q = (basis.adjoint() * rho1.matrix() * basis).diagonal().real();
  return std::make_pair(ProbVector(p), ProbVector(q));
}

}  // namespace qht
