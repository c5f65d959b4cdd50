// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief Command-line front end and figure data series.
 *
 * Exit codes: 0 ok, 1 verification or numerical failure, 2 usage error,
 * 3 domain error (invalid physical input).
 */

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dunkl/spectra.hpp"

namespace dunkl {

enum ExitCode : int { exit_ok = 0, exit_verification = 1, exit_usage = 2, exit_domain = 3 };

/// Malformed flags or flag combinations.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One plotted curve.
struct FigureSeries {
  std::string name;  ///< file stem, e.g. "fig1a_d3"
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::string x_column;
  std::string y_column;
  std::vector<std::pair<double, double>> rows;
};

/// "1a", "1b", "2a", "2b", "2c", "3a", "3b".
const std::vector<std::string>& figure_ids();

/**
 * 1a/1b: oscillator E vs n = 0..10, d = 3..6, mu_i = +0.4 / -0.4.
 * 2a/2b/2c: oscillator reduced density, n = 1, d = 3 / 4 / 5, mu_i in {-0.4, 0, 0.4}.
 * 3a/3b: Coulomb E/E_0 vs n = 0..100, d = 3..6, mu_i = +0.4 / -0.4.
 * All use l_i = 1 in the all-even sector, hbar = m = omega = e2 = 1.
 * Throws UsageError for an unknown id.
 */
std::vector<FigureSeries> figure_series(const std::string& id, int density_samples = 2000);

void write_figure_csv(std::ostream& os, const FigureSeries& series);

/// Upper end of the sampling interval for densities and wavefunctions of sol.
double default_sample_range(const RadialSolution& sol);

/// Angular state from --ell and --parity text; empty parity selects s_j = +1
/// wherever the quantum numbers allow.
AngularState parse_angular_state(int d, const std::string& ell, const std::string& parity);

/// Wigner parameters from a scalar (broadcast) or a comma list of d values.
std::vector<double> parse_mu(int d, const std::string& text);

/// Runs the command line; output goes to `out` unless --output is given.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl
