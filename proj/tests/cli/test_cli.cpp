// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/cartesian.hpp"
#include "dunkl/cli.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/records.hpp"

using namespace dunkl;
using nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dunkl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

OutputDocument csv_doc(const std::string& text) {
  std::istringstream is(text);
  return parse_csv(is);
}

double trapezoid(const std::vector<Sample>& s) {
  double sum = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) sum += 0.5 * (s[i].r - s[i - 1].r) * (s[i].value + s[i - 1].value);
  return sum;
}

bool agree12(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b)); }

}  // namespace

TEST_CASE("spectrum examples", "[cli]") {
  const Run h = run({"spectrum", "--potential", "coulomb", "--d", "3", "--mu", "0", "--levels", "3"});
  REQUIRE(h.code == exit_ok);
  const OutputDocument doc = csv_doc(h.out);
  REQUIRE(doc.levels.size() == 3);
  CHECK(doc.levels[0].energy == -0.5);
  CHECK(doc.levels[1].energy == -0.125);
  CHECK(std::fabs(doc.levels[2].energy + 1.0 / 18.0) < 1e-15);

  const Run o = run({"spectrum", "--potential", "oscillator", "--d", "4", "--mu", "0.4", "--levels", "2", "--format",
                     "json"});
  REQUIRE(o.code == exit_ok);
  const auto j = ordered_json::parse(o.out);
  const auto params = DeformationParams::symmetric(4, 0.4);
  const auto state = AngularState::ground(4);
  for (int n = 0; n < 2; ++n) {
    CHECK(j["levels"][static_cast<std::size_t>(n)]["energy"].get<double>() == oscillator_energy(n, state, params, 1.0));
  }
}

TEST_CASE("values equal the library calls bit for bit", "[cli]") {
  const Run r = run({"spectrum", "--potential", "pho", "--d", "3", "--mu", "0.1,0.2,0.3", "--ell", "1/2,1",
                     "--De", "8", "--re", "1.3", "--hbar", "1.1", "--mass", "0.7", "--levels", "4"});
  REQUIRE(r.code == exit_ok);
  const OutputDocument doc = csv_doc(r.out);
  const DeformationParams params({0.1, 0.2, 0.3});
  const AngularState state({1, 2}, ParityVector({1, -1, 1}));
  const Units units{1.1, 0.7};
  REQUIRE(doc.levels.size() == 4);
  for (int n = 0; n < 4; ++n) {
    CHECK(doc.levels[static_cast<std::size_t>(n)].energy == pho_energy(n, state, params, 8.0, 1.3, units));
  }
  CHECK(doc.levels[0].parity == std::vector<int>{1, -1, 1});
  CHECK(doc.levels[0].ell == std::vector<std::string>{"1/2", "1"});

  const Run d = run({"density", "--potential", "coulomb", "--d", "4", "--mu", "0.4", "--n", "2", "--samples", "50",
                     "--format", "json"});
  REQUIRE(d.code == exit_ok);
  const auto j = ordered_json::parse(d.out);
  const RadialSolution sol = radial_solution(Coulomb{1.0}, 2, AngularState::ground(4), DeformationParams::symmetric(4, 0.4));
  for (const auto& s : j["samples"]) {
    CHECK(s["value"].get<double>() == reduced_density(sol, s["r"].get<double>()));
  }
}

TEST_CASE("domain and usage errors map to exit codes", "[cli]") {
  const Run mu = run({"spectrum", "--mu", "-0.6"});
  CHECK(mu.code == exit_domain);
  CHECK(mu.err.find("mu > -1/2") != std::string::npos);
  CHECK(run({"spectrum", "--potential", "morse"}).code == exit_usage);
  CHECK(run({"spectrum", "--frobnicate"}).code == exit_usage);
  CHECK(run({"spectrum", "--d", "3", "--mu", "0.1,0.2"}).code == exit_usage);
  CHECK(run({"spectrum", "--d", "3", "--ell", "1"}).code == exit_usage);
  CHECK(run({"spectrum", "--d", "3", "--ell", "x,0"}).code == exit_usage);
  CHECK(run({"spectrum", "--d", "3", "--ell", "1/2,0", "--parity", "1,1,1"}).code == exit_domain);
  CHECK(run({"spectrum", "--potential", "coulomb", "--omega", "-1"}).code == exit_ok);
  CHECK(run({"spectrum", "--potential", "coulomb", "--e2", "-1"}).code == exit_domain);
  CHECK(run({"figure", "--id", "4a"}).code == exit_usage);
  CHECK(run({}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("default parity follows the quantum numbers", "[cli]") {
  CHECK(parse_angular_state(4, "1/2,3/2,1", "").parity().values() == std::vector<int>{1, -1, -1, 1});
  CHECK(parse_angular_state(3, "", "").parity().values() == std::vector<int>{1, 1, 1});
  CHECK(parse_angular_state(3, "0.5,2", "").two_ell() == std::vector<int>{1, 4});
  CHECK(parse_mu(3, "0.2") == std::vector<double>{0.2, 0.2, 0.2});
  CHECK_THROWS_AS(parse_mu(3, "0.2,0.1"), UsageError);
  CHECK_THROWS_AS(parse_mu(2, "0.2,-0.5"), DomainError);
}

TEST_CASE("density columns integrate to one", "[cli]") {
  for (const std::string pot : {"oscillator", "coulomb", "pho"}) {
    for (const std::string d : {"3", "4", "5"}) {
      for (const std::string mu : {"-0.4", "0", "0.4"}) {
        const Run r = run({"density", "--potential", pot, "--d", d, "--mu", mu, "--n", "1", "--ell", "1," + std::string(d == "3" ? "1" : d == "4" ? "1,1" : "1,1,1")});
        REQUIRE(r.code == exit_ok);
        const OutputDocument doc = csv_doc(r.out);
        REQUIRE(doc.samples.size() == 2000);
        CHECK(std::fabs(trapezoid(doc.samples) - 1.0) < 1e-4);
        for (const auto& s : doc.samples) CHECK(s.value >= 0.0);
      }
    }
  }
}

TEST_CASE("JSON and CSV round trips are lossless", "[cli]") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"spectrum", "--potential", "coulomb", "--d", "5", "--mu", "0.1,0.2,0.3,0.05,0.4", "--ell", "1,1/2,0,3/2"},
           {"wavefunction", "--potential", "pho", "--d", "3", "--n", "2", "--samples", "300"},
           {"cartesian", "--d", "3", "--mu", "0.3,-0.2,0", "--n", "1,0,2", "--parity", "1,-1,-1"},
           {"cartesian", "--d", "2", "--mu", "0.3", "--n", "1", "--axis", "2", "--samples", "101"},
           {"verify", "--sweep", "cartesian", "--points", "400"}}) {
    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    auto csv_args = args;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const Run j = run(json_args);
    const Run c = run(csv_args);
    REQUIRE(j.code != exit_usage);
    REQUIRE(c.code == j.code);

    const OutputDocument from_json = document_from_json(ordered_json::parse(j.out));
    CHECK(to_json(from_json).dump(2) + "\n" == j.out);
    const OutputDocument from_csv = csv_doc(c.out);
    REQUIRE(from_csv.levels.size() == from_json.levels.size());
    for (std::size_t i = 0; i < from_json.levels.size(); ++i) CHECK(from_csv.levels[i] == from_json.levels[i]);
    CHECK(from_csv.samples == from_json.samples);
    for (const auto& [key, value] : from_json.meta.items()) {
      if (key == "seconds") continue;
      REQUIRE(from_csv.meta.contains(key));
      if (value.is_number()) {
        CHECK(agree12(from_csv.meta[key].get<double>(), value.get<double>()));
      } else {
        CHECK(from_csv.meta[key] == value);
      }
    }
    std::ostringstream again;
    write_csv(again, from_csv);
    if (!from_json.meta.contains("seconds")) CHECK(again.str() == c.out);
  }
}

TEST_CASE("cartesian command reports per-axis levels and the total", "[cli]") {
  const Run r = run({"cartesian", "--d", "3", "--mu", "0.3,-0.2,0", "--n", "1,0,2", "--parity", "1,-1,-1", "--format",
                     "json"});
  REQUIRE(r.code == exit_ok);
  const auto j = ordered_json::parse(r.out);
  REQUIRE(j["levels"].size() == 3);
  CHECK(j["levels"][1]["energy"].get<double>() == energy_1d(0, -0.2, -1, 1.0));
  const CartesianState st({1, 0, 2}, ParityVector({1, -1, -1}));
  const DeformationParams p({0.3, -0.2, 0.0});
  CHECK(j["meta"]["total_energy"].get<double>() == total_energy(st, p, 1.0));
  CHECK(j["meta"]["total_energy_closed_form"].get<double>() == total_energy_closed_form(st, p, 1.0));
  CHECK(run({"cartesian", "--d", "2", "--n", "0", "--index-base", "1"}).code == exit_domain);
}

TEST_CASE("verify exit status follows the tolerances", "[cli]") {
  const Run ok = run({"verify", "--sweep", "cartesian"});
  CHECK(ok.code == exit_ok);
  const auto j = ordered_json::parse(ok.out);
  CHECK(j["meta"]["passed"].get<bool>());
  CHECK(j["cases"].size() == 6);
  CHECK(j["levels"].size() == 18);

  const Run coarse = run({"verify", "--sweep", "cartesian", "--points", "200", "--no-richardson"});
  CHECK(coarse.code == exit_verification);
  CHECK(coarse.err.find("FAIL cartesian") != std::string::npos);
  const auto jc = ordered_json::parse(coarse.out);
  double worst_fine = 0.0, worst_coarse = 0.0;
  for (const auto& l : j["levels"]) worst_fine = std::max(worst_fine, l["rel_error"].get<double>());
  for (const auto& l : jc["levels"]) worst_coarse = std::max(worst_coarse, l["rel_error"].get<double>());
  CHECK(worst_coarse > 10.0 * worst_fine);

  const Run single = run({"verify", "--sweep", "single", "--potential", "coulomb", "--d", "4", "--mu", "0.2", "--ell",
                          "1/2,0,0", "--levels", "2"});
  CHECK(single.code == exit_ok);
}

TEST_CASE("figure command writes one file per curve", "[cli]") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "dunkl_fig_test";
  fs::remove_all(dir);
  const Run r = run({"figure", "--id", "1a", "--output-dir", dir.string()});
  REQUIRE(r.code == exit_ok);
  for (int d = 3; d <= 6; ++d) CHECK(fs::exists(dir / ("fig1a_d" + std::to_string(d) + ".csv")));
  std::ifstream f(dir / "fig1a_d3.csv");
  std::string line, header;
  int rows = 0;
  while (std::getline(f, line)) {
    if (line.rfind('#', 0) == 0) continue;
    if (header.empty()) {
      header = line;
    } else {
      ++rows;
    }
  }
  CHECK(header == "n,energy");
  CHECK(rows == 11);

  const auto series = figure_series("2a");
  REQUIRE(series.size() == 3);
  for (const auto& s : series) {
    double sum = 0.0;
    for (std::size_t i = 1; i < s.rows.size(); ++i) {
      sum += 0.5 * (s.rows[i].first - s.rows[i - 1].first) * (s.rows[i].second + s.rows[i - 1].second);
    }
    CHECK(std::fabs(sum - 1.0) < 1e-4);
  }
  for (const auto& id : {"3a", "3b"}) {
    for (const auto& s : figure_series(id)) CHECK(s.rows.front().second == 1.0);
  }
  CHECK_THROWS_AS(figure_series("2d"), UsageError);
  fs::remove_all(dir);
}
