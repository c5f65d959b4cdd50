// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "dunkl/cli.hpp"
#include "dunkl/records.hpp"

namespace dunkl {

namespace {

// l_i = 1 for every level, all axes even
AngularState figure_state(int d) {
  return AngularState(std::vector<int>(static_cast<std::size_t>(d - 1), 2), ParityVector::all_even(d));
}

std::string mu_tag(double mu) {
  if (mu == 0.0) return "mu0";
  return std::string(mu > 0 ? "mup" : "mum") + std::to_string(static_cast<int>(std::lround(std::fabs(mu) * 10)));
}

nlohmann::ordered_json base_meta(const std::string& id, const std::string& potential, int d, double mu) {
  nlohmann::ordered_json m;
  m["figure"] = id;
  m["potential"] = potential;
  m["d"] = d;
  m["mu"] = mu;
  m["ell"] = 1;
  m["parity"] = "all even";
  m["L"] = d - 1;
  m["hbar"] = 1.0;
  m["mass"] = 1.0;
  return m;
}

std::vector<FigureSeries> energy_figure(const std::string& id, double mu) {
  std::vector<FigureSeries> out;
  for (int d : {3, 4, 5, 6}) {
    FigureSeries s;
    s.name = "fig" + id + "_d" + std::to_string(d);
    s.meta = base_meta(id, "oscillator", d, mu);
    s.meta["omega"] = 1.0;
    s.x_column = "n";
    s.y_column = "energy";
    const auto params = DeformationParams::symmetric(d, mu);
    const auto state = figure_state(d);
    for (int n = 0; n <= 10; ++n) s.rows.emplace_back(n, oscillator_energy(n, state, params, 1.0));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<FigureSeries> ratio_figure(const std::string& id, double mu) {
  std::vector<FigureSeries> out;
  for (int d : {3, 4, 5, 6}) {
    FigureSeries s;
    s.name = "fig" + id + "_d" + std::to_string(d);
    s.meta = base_meta(id, "coulomb", d, mu);
    s.meta["e2"] = 1.0;
    s.x_column = "n";
    s.y_column = "ratio";
    const auto params = DeformationParams::symmetric(d, mu);
    const auto state = figure_state(d);
    const double e0 = coulomb_energy(0, state, params, 1.0);
    s.meta["E0"] = e0;
    for (int n = 0; n <= 100; ++n) s.rows.emplace_back(n, coulomb_energy(n, state, params, 1.0) / e0);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<FigureSeries> density_figure(const std::string& id, int d, int samples) {
  std::vector<FigureSeries> out;
  std::vector<RadialSolution> sols;
  for (double mu : {-0.4, 0.0, 0.4}) {
    sols.push_back(radial_solution(Oscillator{1.0}, 1, figure_state(d), DeformationParams::symmetric(d, mu)));
  }
  double r_max = 0.0;
  for (const auto& s : sols) r_max = std::max(r_max, default_sample_range(s));
  const double mus[] = {-0.4, 0.0, 0.4};
  for (std::size_t i = 0; i < sols.size(); ++i) {
    FigureSeries s;
    s.name = "fig" + id + "_" + mu_tag(mus[i]);
    s.meta = base_meta(id, "oscillator", d, mus[i]);
    s.meta["omega"] = 1.0;
    s.meta["n"] = 1;
    s.meta["energy"] = sols[i].energy;
    s.meta["r_max"] = r_max;
    s.meta["samples"] = samples;
    s.x_column = "r";
    s.y_column = "rho";
    for (int k = 0; k < samples; ++k) {
      const double r = r_max * k / (samples - 1);
      s.rows.emplace_back(r, reduced_density(sols[i], r));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"1a", "1b", "2a", "2b", "2c", "3a", "3b"};
  return ids;
}

std::vector<FigureSeries> figure_series(const std::string& id, int density_samples) {
  if (density_samples < 2) throw UsageError("figure: at least 2 samples are required");
  if (id == "1a") return energy_figure(id, 0.4);
  if (id == "1b") return energy_figure(id, -0.4);
  if (id == "2a") return density_figure(id, 3, density_samples);
  if (id == "2b") return density_figure(id, 4, density_samples);
  if (id == "2c") return density_figure(id, 5, density_samples);
  if (id == "3a") return ratio_figure(id, 0.4);
  if (id == "3b") return ratio_figure(id, -0.4);
  throw UsageError("figure: unknown id '" + id + "' (expected 1a, 1b, 2a, 2b, 2c, 3a or 3b)");
}

void write_figure_csv(std::ostream& os, const FigureSeries& series) {
  for (const auto& [key, value] : series.meta.items()) {
    os << "# " << key << '=';
    if (value.is_string()) {
      os << value.get<std::string>();
    } else if (value.is_number_float()) {
      os << format_real(value.get<double>());
    } else {
      os << value.dump();
    }
    os << '\n';
  }
  os << series.x_column << ',' << series.y_column << '\n';
  const bool integer_x = series.x_column == "n";
  for (const auto& [x, y] : series.rows) {
    if (integer_x) {
      os << static_cast<long>(x);
    } else {
      os << format_real(x);
    }
    os << ',' << format_real(y) << '\n';
  }
}

double default_sample_range(const RadialSolution& sol) {
  // the density behaves as t^p e^{-t} in t = beta r^2 (harmonic) or t = 2 eta r (Coulomb);
  // t = 2p + 60 leaves a relative tail below e^{-40}
  if (sol.form == RadialSolution::Form::harmonic) {
    const double p = std::max(0.0, sol.exponent + 0.5 * sol.measure_exponent + 2.0 * sol.n);
    return std::sqrt((2.0 * p + 60.0) / sol.scale);
  }
  const double p = std::max(0.0, 2.0 * sol.exponent + sol.measure_exponent + 2.0 * sol.n);
  return (2.0 * p + 60.0) / (2.0 * sol.scale);
}

}  // namespace dunkl
