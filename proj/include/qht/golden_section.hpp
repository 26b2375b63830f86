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

#include <cmath>
#include <utility>

namespace qht {

/// Final bracket [lo, hi] of a golden-section search; the minimizer of a
/// unimodal function lies inside.
template <typename Real>
struct Bracket {
  Real lo;
  Real hi;
  Real mid() const { return (lo + hi) / 2; }
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi],
/// shrinking the bracket until it is narrower than `width`.
template <typename Real, typename Fn>
Bracket<Real> golden_section_minimize(Fn&& f, Real lo, Real hi, Real width,
                                      int max_iter = 200) {
  const Real inv_phi = (std::sqrt(Real(5)) - 1) / 2;
  Real c = hi - inv_phi * (hi - lo);
  Real d = lo + inv_phi * (hi - lo);
  Real fc = f(c);
  Real fd = f(d);
  for (int it = 0; it < max_iter && hi - lo > width; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return {lo, hi};
}

}  // namespace qht
