// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dunkl/cartesian.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/records.hpp"
#include "dunkl/verify.hpp"

namespace dunkl {

using nlohmann::ordered_json;

namespace {

struct Options {
  std::string potential = "oscillator";
  int d = 3;
  std::string mu = "0";
  std::string ell;
  std::string parity;
  std::string n = "0";
  int levels = 5;
  double hbar = 1.0, mass = 1.0, omega = 1.0, De = 1.0, re = 1.0, e2 = 1.0;
  double rmax = 0.0;
  std::string grid = "auto";
  std::string format = "csv";
  std::string output;
  std::string convention = "published";
  int samples = 2000;
  int index_base = 0;
  int axis = 0;

  // verify
  std::string sweep = "default";
  int points = 0;
  unsigned threads = 0;
  bool no_richardson = false;
  double tolerance = 0.0;

  // figure
  std::string figure_id;
  std::string output_dir = ".";
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError(flag + ": not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError(flag + ": not a number: '" + s + "'");
  return v;
}

int parse_integer(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError(flag + ": not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError(flag + ": not an integer: '" + s + "'");
  return v;
}

std::vector<int> parse_int_list(int count, const std::string& text, const std::string& flag) {
  const auto parts = split_list(text);
  std::vector<int> out;
  for (const auto& p : parts) out.push_back(parse_integer(p, flag));
  if (out.size() == 1) out.assign(static_cast<std::size_t>(count), out[0]);
  if (static_cast<int>(out.size()) != count) {
    throw UsageError(flag + ": expected 1 or " + std::to_string(count) + " values, got " + std::to_string(parts.size()));
  }
  return out;
}

PhoConvention convention_of(const Options& o) {
  return o.convention == "potential" ? PhoConvention::from_potential : PhoConvention::as_published;
}

PotentialSpec potential_of(const Options& o) {
  PotentialSpec p;
  if (o.potential == "oscillator") {
    p = Oscillator{o.omega};
  } else if (o.potential == "pho") {
    p = Pseudoharmonic{o.De, o.re};
  } else {
    p = Coulomb{o.e2};
  }
  validate(p);
  return p;
}

Units units_of(const Options& o) {
  if (!(o.hbar > 0.0) || !(o.mass > 0.0) || !std::isfinite(o.hbar) || !std::isfinite(o.mass)) {
    throw DomainError("hbar and mass must be positive and finite");
  }
  return Units{o.hbar, o.mass};
}

std::vector<std::string> ell_strings(const AngularState& s) {
  std::vector<std::string> out;
  for (int t : s.two_ell()) out.push_back(HalfInteger::from_twice(t).to_string());
  return out;
}

OutputRecord record_of(const std::string& potential, const DeformationParams& params, const AngularState& state,
                       int n, double energy) {
  OutputRecord r;
  r.potential = potential;
  r.d = params.dimension();
  r.mu = params.mu();
  r.n = n;
  r.ell = ell_strings(state);
  r.parity = state.parity().values();
  r.energy = energy;
  return r;
}

ordered_json physics_meta(const std::string& command, const Options& o) {
  ordered_json m;
  m["command"] = command;
  m["potential"] = o.potential;
  m["d"] = o.d;
  m["hbar"] = o.hbar;
  m["mass"] = o.mass;
  if (o.potential == "oscillator") m["omega"] = o.omega;
  if (o.potential == "pho") {
    m["De"] = o.De;
    m["re"] = o.re;
    m["pho_convention"] = o.convention;
  }
  if (o.potential == "coulomb") m["e2"] = o.e2;
  return m;
}

void emit(const OutputDocument& doc, const Options& o, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw UsageError("--output: cannot open '" + o.output + "' for writing");
    os = &file;
  }
  if (o.format == "json") {
    *os << to_json(doc).dump(2) << '\n';
  } else {
    write_csv(*os, doc);
  }
  if (!*os) throw std::runtime_error("write failed");
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  if (o.levels < 1) throw UsageError("--levels: must be at least 1");
  const PotentialSpec pot = potential_of(o);
  const DeformationParams params(parse_mu(o.d, o.mu));
  const AngularState state = parse_angular_state(o.d, o.ell, o.parity);
  const Units units = units_of(o);
  OutputDocument doc;
  doc.meta = physics_meta("spectrum", o);
  doc.meta["levels"] = o.levels;
  for (const auto& lvl : spectrum(pot, state, params, o.levels, units, convention_of(o))) {
    doc.levels.push_back(record_of(lvl.potential, params, state, lvl.n, lvl.energy));
  }
  emit(doc, o, out);
  return exit_ok;
}

int cmd_radial_samples(const Options& o, std::ostream& out, bool density) {
  if (o.samples < 2) throw UsageError("--samples: must be at least 2");
  const int n = parse_integer(o.n, "--n");
  const PotentialSpec pot = potential_of(o);
  const DeformationParams params(parse_mu(o.d, o.mu));
  const AngularState state = parse_angular_state(o.d, o.ell, o.parity);
  const RadialSolution sol = radial_solution(pot, n, state, params, units_of(o), convention_of(o));
  const double r_max = o.rmax > 0.0 ? o.rmax : default_sample_range(sol);

  OutputDocument doc;
  doc.meta = physics_meta(density ? "density" : "wavefunction", o);
  doc.meta["r_max"] = r_max;
  doc.meta["samples"] = o.samples;
  doc.sample_column = density ? "rho" : "U";
  doc.meta["sample_column"] = doc.sample_column;
  doc.levels.push_back(record_of(potential_name(pot), params, state, n, sol.energy));
  for (int i = 0; i < o.samples; ++i) {
    const double r = r_max * i / (o.samples - 1);
    doc.samples.push_back({r, density ? reduced_density(sol, r) : radial_wavefunction(sol, r)});
  }
  emit(doc, o, out);
  return exit_ok;
}

int cmd_cartesian(const Options& o, std::ostream& out) {
  if (o.d < 1) throw UsageError("--d: must be at least 1");
  const std::vector<double> mu = parse_mu(o.d, o.mu);
  const std::vector<int> n = parse_int_list(o.d, o.n, "--n");
  const std::vector<int> s = o.parity.empty() ? std::vector<int>(static_cast<std::size_t>(o.d), 1)
                                              : parse_int_list(o.d, o.parity, "--parity");
  const Units units = units_of(o);
  const IndexBase base = o.index_base == 1 ? IndexBase::one : IndexBase::zero;
  if (o.axis < 0 || o.axis > o.d) throw UsageError("--axis: must be between 1 and d");

  OutputDocument doc;
  doc.meta["command"] = "cartesian";
  doc.meta["potential"] = "oscillator";
  doc.meta["d"] = o.d;
  doc.meta["hbar"] = o.hbar;
  doc.meta["mass"] = o.mass;
  doc.meta["omega"] = o.omega;
  doc.meta["index_base"] = o.index_base;
  for (int j = 0; j < o.d; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    if (o.axis != 0 && o.axis != j + 1) continue;
    OutputRecord r;
    r.potential = "oscillator";
    r.d = 1;
    r.mu = {mu[ju]};
    r.n = n[ju];
    r.parity = {s[ju]};
    r.energy = energy_1d(n[ju], mu[ju], s[ju], o.omega, units, base);
    doc.levels.push_back(r);
  }
  if (o.d >= 2) {
    const DeformationParams params(mu);
    const CartesianState state(n, ParityVector(s));
    doc.meta["total_energy"] = total_energy(state, params, o.omega, units, base);
    doc.meta["total_energy_closed_form"] = total_energy_closed_form(state, params, o.omega, units, base);
  } else {
    doc.meta["total_energy"] = doc.levels.front().energy;
  }
  if (o.axis != 0) {
    if (o.samples < 2) throw UsageError("--samples: must be at least 2");
    const auto ju = static_cast<std::size_t>(o.axis - 1);
    const Wavefunction1D psi(n[ju], mu[ju], s[ju], o.omega, units, base);
    const int nr = base == IndexBase::one ? n[ju] - 1 : n[ju];
    const double x_max = o.rmax > 0.0 ? o.rmax : std::sqrt((2.0 * (2.0 * nr + mu[ju] + 1.0) + 60.0) / psi.beta());
    doc.meta["axis"] = o.axis;
    doc.meta["x_max"] = x_max;
    doc.meta["samples"] = o.samples;
    doc.sample_column = "psi";
    doc.meta["sample_column"] = doc.sample_column;
    for (int i = 0; i < o.samples; ++i) {
      const double x = -x_max + 2.0 * x_max * i / (o.samples - 1);
      doc.samples.push_back({x, psi(x)});
    }
  }
  emit(doc, o, out);
  return exit_ok;
}

std::string case_label(const OracleCase& c) {
  std::ostringstream os;
  os << c.kind << " d=" << (c.kind == "cartesian" ? 1 : static_cast<int>(c.mu.size())) << " mu=" << c.mu.front();
  if (c.kind != "cartesian") os << " L=" << HalfInteger::from_twice(c.two_ell.front()).to_string();
  os << " s=" << c.parity.front();
  return os.str();
}

std::vector<OracleCase> selected_sweep(const Options& o) {
  if (o.sweep == "default") return default_sweep();
  if (o.sweep == "oscillator") return oscillator_sweep();
  if (o.sweep == "coulomb") return coulomb_sweep();
  if (o.sweep == "pho") return pho_sweep();
  if (o.sweep == "cartesian") return cartesian_sweep();

  // single: one radial case from the state flags
  const PotentialSpec pot = potential_of(o);
  const DeformationParams params(parse_mu(o.d, o.mu));
  const AngularState state = parse_angular_state(o.d, o.ell, o.parity);
  OracleCase c;
  c.kind = potential_name(pot);
  c.potential = pot;
  c.mu = params.mu();
  c.two_ell = state.two_ell();
  c.parity = state.parity().values();
  c.levels = o.levels;
  c.tolerance = c.kind == "coulomb" ? 1e-3 : 1e-4;
  c.cfg = c.kind == "coulomb" ? DiscretizationConfig::coulomb_default() : DiscretizationConfig::oscillator_default();
  return {c};
}

int cmd_verify(const Options& o, bool format_given, std::ostream& out, std::ostream& err) {
  if (o.levels < 1) throw UsageError("--levels: must be at least 1");
  std::vector<OracleCase> cases = selected_sweep(o);
  for (auto& c : cases) {
    if (o.points > 0) c.cfg.points = o.points;
    if (o.rmax > 0.0) c.cfg.r_max = o.rmax;
    if (o.grid == "uniform") c.cfg.grid = GridKind::uniform;
    if (o.grid == "quadratic") c.cfg.grid = GridKind::quadratic;
    if (o.no_richardson) c.cfg.richardson = false;
    if (o.tolerance > 0.0) c.tolerance = o.tolerance;
    c.cfg.validate();
  }
  const Units units = units_of(o);
  const OracleReport rep = run_sweep(cases, units, o.threads);

  OutputDocument doc;
  doc.meta["command"] = "verify";
  doc.meta["sweep"] = o.sweep;
  doc.meta["hbar"] = o.hbar;
  doc.meta["mass"] = o.mass;
  doc.meta["cases"] = static_cast<int>(rep.cases.size());
  doc.meta["passed"] = rep.passed;
  doc.meta["seconds"] = rep.seconds;
  for (std::size_t i = 0; i < rep.cases.size(); ++i) {
    const OracleCaseResult& r = rep.cases[i];
    const OracleCase& c = r.spec;
    ordered_json cj;
    cj["index"] = static_cast<int>(i);
    cj["kind"] = c.kind;
    cj["potential"] = potential_name(c.potential);
    cj["d"] = c.kind == "cartesian" ? 1 : static_cast<int>(c.mu.size());
    cj["mu"] = c.mu;
    std::vector<std::string> ell;
    for (int t : c.two_ell) ell.push_back(HalfInteger::from_twice(t).to_string());
    cj["ell"] = ell;
    cj["parity"] = c.parity;
    cj["levels"] = c.levels;
    cj["tolerance"] = c.tolerance;
    cj["points"] = r.points;
    cj["r_max"] = r.r_max;
    cj["grid"] = c.cfg.grid == GridKind::quadratic ? "quadratic" : "uniform";
    cj["richardson"] = c.cfg.richardson;
    cj["tail_warning"] = r.tail_warning;
    cj["passed"] = r.passed;
    cj["error"] = r.error;
    doc.cases.push_back(cj);

    if (!r.error.empty()) err << "FAIL " << case_label(c) << ": " << r.error << '\n';
    for (std::size_t k = 0; k < r.analytic.size() && k < r.numeric.size(); ++k) {
      OutputRecord rec;
      rec.potential = c.kind == "cartesian" ? "cartesian" : potential_name(c.potential);
      rec.d = cj["d"].get<int>();
      rec.mu = c.mu;
      rec.n = static_cast<int>(k);
      rec.ell = ell;
      rec.parity = c.parity;
      rec.energy = r.analytic[k];
      OracleFields f;
      f.numeric = r.numeric[k];
      f.abs_error = r.abs_error[k];
      f.rel_error = r.rel_error[k];
      f.passed = r.rel_error[k] <= c.tolerance;
      rec.oracle = f;
      doc.levels.push_back(rec);
      if (!f.passed) {
        err << "FAIL " << case_label(c) << " n=" << k << " analytic=" << format_real(r.analytic[k])
            << " numeric=" << format_real(r.numeric[k]) << " rel_error=" << format_real(r.rel_error[k])
            << " tolerance=" << format_real(c.tolerance) << '\n';
      }
    }
  }
  Options eff = o;
  if (!format_given) eff.format = "json";
  emit(doc, eff, out);
  return rep.passed ? exit_ok : exit_verification;
}

int cmd_figure(const Options& o, std::ostream& out) {
  namespace fs = std::filesystem;
  const auto series = figure_series(o.figure_id, o.samples);
  std::error_code ec;
  fs::create_directories(o.output_dir, ec);
  if (ec) throw UsageError("--output-dir: cannot create '" + o.output_dir + "': " + ec.message());
  for (const auto& s : series) {
    const fs::path path = fs::path(o.output_dir) / (s.name + ".csv");
    std::ofstream f(path);
    if (!f) throw UsageError("--output-dir: cannot write '" + path.string() + "'");
    write_figure_csv(f, s);
    out << path.string() << '\n';
  }
  return exit_ok;
}

void add_state_options(CLI::App* sub, Options& o) {
  sub->add_option("--potential", o.potential, "oscillator, pho or coulomb")
      ->check(CLI::IsMember({"oscillator", "pho", "coulomb"}))
      ->capture_default_str();
  sub->add_option("--d", o.d, "dimension")->capture_default_str();
  sub->add_option("--mu", o.mu, "mu_i: scalar or comma list of d values")->capture_default_str();
  sub->add_option("--ell", o.ell, "l_1..l_{d-1}: comma list of half-integers (p/2 or decimals); default all 0");
  sub->add_option("--parity", o.parity, "s_1..s_d: comma list of +-1; default +1 wherever allowed");
  sub->add_option("--levels", o.levels, "number of levels")->capture_default_str();
  sub->add_option("--pho-convention", o.convention, "published or potential")
      ->check(CLI::IsMember({"published", "potential"}))
      ->capture_default_str();
}

void add_unit_options(CLI::App* sub, Options& o) {
  sub->add_option("--hbar", o.hbar)->capture_default_str();
  sub->add_option("--mass", o.mass)->capture_default_str();
  sub->add_option("--omega", o.omega)->capture_default_str();
  sub->add_option("--De", o.De)->capture_default_str();
  sub->add_option("--re", o.re)->capture_default_str();
  sub->add_option("--e2", o.e2)->capture_default_str();
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--output", o.output, "write to PATH instead of stdout");
}

void add_grid_options(CLI::App* sub, Options& o) {
  sub->add_option("--rmax", o.rmax, "domain or sampling length; 0 selects the automatic rule")->capture_default_str();
  sub->add_option("--grid", o.grid, "auto, uniform or quadratic")
      ->check(CLI::IsMember({"auto", "uniform", "quadratic"}))
      ->capture_default_str();
}

}  // namespace

std::vector<double> parse_mu(int d, const std::string& text) {
  if (d < 1) throw UsageError("--d: must be positive");
  std::vector<double> mu;
  const auto parts = split_list(text);
  for (const auto& p : parts) mu.push_back(parse_number(p, "--mu"));
  if (mu.size() == 1) mu.assign(static_cast<std::size_t>(d), mu[0]);
  if (static_cast<int>(mu.size()) != d) {
    throw UsageError("--mu: expected 1 or " + std::to_string(d) + " values, got " + std::to_string(parts.size()));
  }
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (!(mu[j] > -0.5) || !std::isfinite(mu[j])) {
      std::ostringstream os;
      os << "mu_" << j + 1 << " = " << mu[j] << " violates mu > -1/2";
      throw DomainError(os.str());
    }
  }
  return mu;
}

AngularState parse_angular_state(int d, const std::string& ell, const std::string& parity) {
  if (d < 2) throw UsageError("--d: must be at least 2");
  std::vector<int> two_ell(static_cast<std::size_t>(d - 1), 0);
  if (!ell.empty()) {
    const auto parts = split_list(ell);
    if (static_cast<int>(parts.size()) != d - 1) {
      throw UsageError("--ell: expected " + std::to_string(d - 1) + " values, got " + std::to_string(parts.size()));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      try {
        two_ell[i] = HalfInteger::parse(parts[i]).twice;
      } catch (const DomainError& e) {
        throw UsageError("--ell: cannot parse '" + parts[i] + "' as a half-integer");
      }
    }
  }
  std::vector<int> s(static_cast<std::size_t>(d), 1);
  if (parity.empty()) {
    for (int j = 1; j < d; ++j) {
      if (two_ell[static_cast<std::size_t>(j - 1)] % 2 != 0) s[static_cast<std::size_t>(j)] = -1;
    }
  } else {
    s = parse_int_list(d, parity, "--parity");
  }
  return AngularState(two_ell, ParityVector(s));
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Closed-form spectra of the Dunkl-Schroedinger equation and a numerical oracle", "dunkl"};
  app.require_subcommand(1);

  auto* spec_cmd = app.add_subcommand("spectrum", "energy levels n = 0..levels-1 of one angular state");
  add_state_options(spec_cmd, o);
  add_unit_options(spec_cmd, o);
  add_output_options(spec_cmd, o);

  auto* dens = app.add_subcommand("density", "reduced density |U|^2 r^c on a uniform grid");
  auto* wave = app.add_subcommand("wavefunction", "radial function U on a uniform grid");
  for (auto* sub : {dens, wave}) {
    add_state_options(sub, o);
    add_unit_options(sub, o);
    add_output_options(sub, o);
    sub->add_option("--n", o.n, "radial quantum number")->capture_default_str();
    sub->add_option("--rmax", o.rmax, "sampling interval [0, rmax]; 0 selects it from the tail")->capture_default_str();
    sub->add_option("--samples", o.samples)->capture_default_str();
  }

  auto* cart = app.add_subcommand("cartesian", "separable oscillator: per-axis parity levels");
  cart->add_option("--d", o.d)->capture_default_str();
  cart->add_option("--mu", o.mu, "scalar or comma list of d values")->capture_default_str();
  cart->add_option("--n", o.n, "scalar or comma list of d values")->capture_default_str();
  cart->add_option("--parity", o.parity, "scalar or comma list of d values, default +1");
  cart->add_option("--index-base", o.index_base, "0 or 1")->check(CLI::IsMember({0, 1}))->capture_default_str();
  cart->add_option("--axis", o.axis, "sample the 1D eigenfunction of this axis (1-based)");
  cart->add_option("--rmax", o.rmax, "sampling interval [-rmax, rmax]; 0 selects it from the tail");
  cart->add_option("--samples", o.samples)->capture_default_str();
  add_unit_options(cart, o);
  add_output_options(cart, o);

  auto* ver = app.add_subcommand("verify", "compare closed forms with the numerical oracle");
  ver->add_option("--sweep", o.sweep, "default, oscillator, coulomb, pho, cartesian or single")
      ->check(CLI::IsMember({"default", "oscillator", "coulomb", "pho", "cartesian", "single"}))
      ->capture_default_str();
  add_state_options(ver, o);
  add_unit_options(ver, o);
  add_output_options(ver, o);
  add_grid_options(ver, o);
  ver->add_option("--points", o.points, "grid size N; 0 keeps the per-potential default")->capture_default_str();
  ver->add_option("--threads", o.threads, "worker threads; 0 uses all cores")->capture_default_str();
  ver->add_flag("--no-richardson", o.no_richardson, "report the N-grid values without extrapolation");
  ver->add_option("--tolerance", o.tolerance, "relative tolerance; 0 keeps the per-potential default");

  auto* fig = app.add_subcommand("figure", "write the data series of one figure as CSV files");
  fig->add_option("--id", o.figure_id, "1a, 1b, 2a, 2b, 2c, 3a or 3b")
      ->required()
      ->check(CLI::IsMember(figure_ids()));
  fig->add_option("--output-dir", o.output_dir)->capture_default_str();
  fig->add_option("--samples", o.samples, "density samples for 2a-2c")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (spec_cmd->parsed()) return cmd_spectrum(o, out);
    if (dens->parsed()) return cmd_radial_samples(o, out, true);
    if (wave->parsed()) return cmd_radial_samples(o, out, false);
    if (cart->parsed()) return cmd_cartesian(o, out);
    if (ver->parsed()) return cmd_verify(o, ver->count("--format") > 0, out, err);
    if (fig->parsed()) return cmd_figure(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_domain;
  } catch (const std::out_of_range& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_domain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_verification;
  }
  return exit_usage;
}

}  // namespace dunkl
