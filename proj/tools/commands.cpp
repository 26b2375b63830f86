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

#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "qht/counter_rng.hpp"
#include "qht/divergence.hpp"
#include "qht/state_io.hpp"

namespace qht::cli {

namespace {

PureState leading_vector(const DensityMatrix& rho) {
  const auto spectrum = hermitian_eig(rho.matrix());
  return PureState::normalized(
      spectrum.eigenvectors.col(spectrum.eigenvalues.size() - 1));
}

double to_units(double nats, bool bits) {
  return bits ? nats / std::numbers::ln2 : nats;
}

std::string optional_cell(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

nlohmann::json json_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

nlohmann::json json_optional(const std::optional<double>& x) {
  return x ? json_number(*x) : nlohmann::json(nullptr);
}

struct PairOptions {
  std::string rho0_path;
  std::string rho1_path;
  unsigned n = 1;
  unsigned n_max = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultTensorCap;
  bool bits = false;
  bool json = false;
  std::string out;
};

int emit_sweep(const DensityMatrix& rho0, const DensityMatrix& rho1,
               const PairOptions& opt, std::ostream& out, std::ostream& err) {
  SweepOptions sweep;
  sweep.n_max = opt.n_max;
  sweep.trials = opt.trials;
  sweep.seed = opt.seed;
  sweep.cap = opt.cap;
  const std::vector<SweepRow> rows = sweep_rows(rho0, rho1, sweep, &err);
  if (opt.out.empty() || opt.out == "-") {
    write_sweep_csv(rows, out);
    return kExitOk;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw IoError("cannot write '" + opt.out + "'");
  write_sweep_csv(rows, file);
  file.flush();
  if (!file) throw IoError("error writing '" + opt.out + "'");
  return kExitOk;
}

void emit_bounds(const DensityMatrix& rho0, const DensityMatrix& rho1,
                 const PairOptions& opt, std::ostream& out) {
  const ErrorReport report = error_bounds(rho0, rho1, opt.n, opt.cap);
  if (opt.json) {
    out << report_json(report, opt.bits) << "\n";
  } else {
    print_report_text(report, opt.bits, out);
  }
}

// Separable section of `example`: analytic error where available and a
// seeded simulation when trials > 0.
void emit_separable(const DensityMatrix& rho0, const DensityMatrix& rho1,
                    const PairOptions& opt, std::ostream& out) {
  const Strategy strategy = separable_strategy_for(rho0, rho1);
  const std::string units = opt.bits ? "bits" : "nats";
  out << "separable measurement (" << strategy.measurement.size()
      << " outcomes per copy)\n";
  if (rho0.is_pure()) {
    const double analytic = pure_strategy_error(rho0, rho1, opt.n);
    out << "  analytic_error     " << format_number(analytic) << "\n";
  } else {
    out << "  separable_rate     "
        << format_number(to_units(separable_rate(rho0, rho1), opt.bits)) << " "
        << units << "/copy\n";
  }
  if (opt.trials > 0) {
    const SimReport sim =
        simulate(strategy, rho0, rho1, opt.n, opt.trials, opt.seed);
    out << "  simulated_error    " << format_number(sim.avg_error) << " +/- "
        << format_number(sim.std_err) << " (trials=" << sim.trials
        << " per hypothesis, seed=" << sim.seed << ")\n";
    out << "  err0, err1         " << format_number(sim.err0) << ", "
        << format_number(sim.err1) << "\n";
  }
}

void add_pair_flags(CLI::App* cmd, PairOptions& opt) {
  cmd->add_option("--cap", opt.cap,
                  "largest tensor-power dimension for exact errors")
      ->check(CLI::PositiveNumber);
}

}  // namespace

Strategy separable_strategy_for(const DensityMatrix& rho0,
                                const DensityMatrix& rho1) {
  if (rho0.is_pure()) return pure_strategy(leading_vector(rho0));
  return likelihood_strategy(rho0, rho1);
}

std::vector<SweepRow> sweep_rows(const DensityMatrix& rho0,
                                 const DensityMatrix& rho1,
                                 const SweepOptions& options,
                                 std::ostream* diag) {
  if (options.n_max == 0) throw DimensionError("--n-max must be at least 1");
  std::optional<Strategy> strategy;
  if (options.trials > 0) strategy = separable_strategy_for(rho0, rho1);

  std::vector<SweepRow> rows;
  for (unsigned n = 1; n <= options.n_max; ++n) {
    const ErrorReport report = error_bounds(rho0, rho1, n, options.cap);
    SweepRow row;
    row.n = n;
    row.exact_error = report.exact_error;
    row.lower_fid = report.lower_fid;
    row.upper_fid = report.upper_fid;
    row.upper_pure = report.upper_pure;
    row.relent_rate_error = std::exp(n * report.rate_lower_relent);
    if (!report.exact_error && diag) {
      *diag << "n=" << n << ": exact error skipped, dimension " << rho0.dim()
            << "^" << n << " exceeds cap " << options.cap << "\n";
    }
    if (strategy) {
      // Each row gets its own substream family.
      const SimReport sim = simulate(*strategy, rho0, rho1, n, options.trials,
                                     mix64(options.seed + n));
      row.empirical_error = sim.avg_error;
      row.empirical_stderr = sim.std_err;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepHeader << "\n";
  for (const SweepRow& row : rows) {
    out << row.n << ',' << optional_cell(row.exact_error) << ','
        << format_number(row.lower_fid) << ',' << format_number(row.upper_fid)
        << ',' << optional_cell(row.upper_pure) << ','
        << format_number(row.relent_rate_error) << ','
        << optional_cell(row.empirical_error) << ','
        << optional_cell(row.empirical_stderr) << "\n";
  }
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void print_report_text(const ErrorReport& report, bool bits,
                       std::ostream& out) {
  const std::string units = bits ? "bits/copy" : "nats/copy";
  out << "n                  " << report.n << "\n";
  out << "exact_error        "
      << (report.exact_error ? format_number(*report.exact_error)
                             : std::string("(not computed: dimension cap)"))
      << "\n";
  out << "bound interval     [" << format_number(report.lower_fid) << ", "
      << format_number(report.upper_fid) << "]\n";
  out << "lower_fid          " << format_number(report.lower_fid) << "\n";
  out << "upper_fid          " << format_number(report.upper_fid) << "\n";
  out << "upper_pure         "
      << (report.upper_pure ? format_number(*report.upper_pure)
                            : std::string("(rho0 not pure)"))
      << "\n";
  out << "rate_lower_fid     "
      << format_number(to_units(report.rate_lower_fid, bits)) << " " << units
      << "\n";
  out << "rate_upper_fid     "
      << format_number(to_units(report.rate_upper_fid, bits)) << " " << units
      << "\n";
  out << "rate_lower_relent  "
      << format_number(to_units(report.rate_lower_relent, bits)) << " "
      << units << "\n";
}

std::string report_json(const ErrorReport& report, bool bits) {
  nlohmann::json doc = {
      {"n", report.n},
      {"exact_error", json_optional(report.exact_error)},
      {"lower_fid", json_number(report.lower_fid)},
      {"upper_fid", json_number(report.upper_fid)},
      {"upper_pure", json_optional(report.upper_pure)},
      {"rate_lower_fid", json_number(to_units(report.rate_lower_fid, bits))},
      {"rate_upper_fid", json_number(to_units(report.rate_upper_fid, bits))},
      {"rate_lower_relent",
       json_number(to_units(report.rate_lower_relent, bits))},
  };
  return doc.dump(2);
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "qhtest: error probabilities, bounds and rates for quantum binary "
      "hypothesis testing"};
  app.require_subcommand(1);

  PairOptions opt;

  CLI::App* bounds = app.add_subcommand(
      "bounds", "exact joint error, fidelity bounds and rates for n copies");
  bounds->add_option("--rho0", opt.rho0_path, "state file for hypothesis 0")
      ->required();
  bounds->add_option("--rho1", opt.rho1_path, "state file for hypothesis 1")
      ->required();
  bounds->add_option("--n", opt.n, "number of copies")
      ->check(CLI::PositiveNumber);
  bounds->add_flag("--bits", opt.bits, "report rates in bits instead of nats");
  bounds->add_flag("--json", opt.json, "emit the report as JSON");
  add_pair_flags(bounds, opt);

  CLI::App* sweep =
      app.add_subcommand("sweep", "CSV table of errors and bounds for n = 1..N");
  sweep->add_option("--rho0", opt.rho0_path, "state file for hypothesis 0")
      ->required();
  sweep->add_option("--rho1", opt.rho1_path, "state file for hypothesis 1")
      ->required();
  sweep->add_option("--n-max", opt.n_max, "largest number of copies")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--trials", opt.trials,
                    "Monte Carlo trials per hypothesis (0 = none)");
  sweep->add_option("--seed", opt.seed, "simulation seed");
  sweep->add_option("--out", opt.out, "output CSV path (default stdout)");
  add_pair_flags(sweep, opt);

  std::string name;
  double a = 0.0;
  double b = 0.0;
  double theta = 0.0;
  std::uint64_t example_trials = 100000;
  CLI::App* example = app.add_subcommand(
      "example", "built-in state pairs: 'pauli' (qubit family) or 'entangle'");
  example->add_option("name", name, "pauli | entangle")
      ->required()
      ->check(CLI::IsMember({"pauli", "entangle"}));
  CLI::Option* a_opt = example->add_option("--a", a, "Bloch length of rho0");
  CLI::Option* b_opt = example->add_option("--b", b, "Bloch length of rho1");
  CLI::Option* theta_opt =
      example->add_option("--theta", theta, "angle between Bloch vectors");
  example->add_option("--n", opt.n, "number of copies")
      ->check(CLI::PositiveNumber);
  CLI::Option* n_max_opt =
      example->add_option("--n-max", opt.n_max, "emit a sweep up to this n")
          ->check(CLI::PositiveNumber);
  example->add_option("--trials", example_trials,
                      "Monte Carlo trials per hypothesis (0 = none)");
  example->add_option("--seed", opt.seed, "simulation seed");
  example->add_option("--out", opt.out, "CSV path for a sweep");
  example->add_flag("--bits", opt.bits, "report rates in bits instead of nats");
  example->add_flag("--json", opt.json, "emit the bounds report as JSON");
  add_pair_flags(example, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (bounds->parsed()) {
      const DensityMatrix rho0 = load_state(opt.rho0_path);
      const DensityMatrix rho1 = load_state(opt.rho1_path);
      emit_bounds(rho0, rho1, opt, out);
      return kExitOk;
    }
    if (sweep->parsed()) {
      const DensityMatrix rho0 = load_state(opt.rho0_path);
      const DensityMatrix rho1 = load_state(opt.rho1_path);
      return emit_sweep(rho0, rho1, opt, out, err);
    }

    // example
    opt.trials = example_trials;
    std::optional<std::pair<DensityMatrix, DensityMatrix>> pair;
    if (name == "pauli") {
      if (!a_opt->count() || !b_opt->count() || !theta_opt->count()) {
        err << "example pauli requires --a, --b and --theta\n";
        return kExitValidation;
      }
      pair.emplace(pauli_pair(a, b, theta));
    } else {
      pair.emplace(entanglement_pair());
    }
    const auto& [rho0, rho1] = *pair;
    if (n_max_opt->count() || !opt.out.empty()) {
      if (opt.n_max == 0) opt.n_max = opt.n;
      return emit_sweep(rho0, rho1, opt, out, err);
    }
    if (name == "entangle" && !opt.json) {
      out << "rho0: Bell state (|00> + |11>)/sqrt(2); rho1: equal mixture of "
             "|00> and |11>\n";
    }
    emit_bounds(rho0, rho1, opt, out);
    if (opt.json) return kExitOk;
    emit_separable(rho0, rho1, opt, out);
    if (name == "entangle") {
      out << "note: the optimal two-outcome measurement (projector onto the "
             "Bell state and its complement) acts jointly on both particles; "
             "rho0 and rho1 have identical single-particle marginals, so "
             "measurements on each particle separately cannot distinguish "
             "them.\n";
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace qht::cli
