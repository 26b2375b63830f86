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

// Command implementations behind the qhtest executable. Kept in a library
// so tests can drive them without spawning a process.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qht/jointtest.hpp"
#include "qht/septest.hpp"

namespace qht::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

inline constexpr const char* kSweepHeader =
    "n,exact,lower_fid,upper_fid,upper_pure,relent_rate,empirical,stderr";

struct SweepRow {
  unsigned n = 0;
  std::optional<double> exact_error;
  double lower_fid = 0;
  double upper_fid = 0;
  std::optional<double> upper_pure;
  double relent_rate_error = 0;  ///< exp(n * rate_lower_relent)
  std::optional<double> empirical_error;
  std::optional<double> empirical_stderr;
};

struct SweepOptions {
  unsigned n_max = 1;
  std::uint64_t trials = 0;  ///< 0 disables the empirical columns
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultTensorCap;
};

/// The separable strategy used for empirical columns and reports: the
/// two-outcome projector test when rho0 is pure, otherwise the likelihood
/// test on the fidelity-optimal measurement.
Strategy separable_strategy_for(const DensityMatrix& rho0,
                                const DensityMatrix& rho1);

/// One row per n in 1..n_max. `diag`, when given, receives one line per row
/// whose exact error was skipped because of the cap.
std::vector<SweepRow> sweep_rows(const DensityMatrix& rho0,
                                 const DensityMatrix& rho1,
                                 const SweepOptions& options,
                                 std::ostream* diag = nullptr);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// 12 significant digits; "inf"/"-inf" for infinities.
std::string format_number(double x);

void print_report_text(const ErrorReport& report, bool bits,
                       std::ostream& out);
std::string report_json(const ErrorReport& report, bool bits);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace qht::cli
