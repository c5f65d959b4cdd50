// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/records.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dunkl {

using nlohmann::ordered_json;

namespace {

template <class T, class F>
std::string join(const std::vector<T>& v, F fmt) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += fmt(v[i]);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw std::runtime_error("csv: not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size()) throw std::runtime_error("csv: not an integer: '" + s + "'");
  return static_cast<int>(v);
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  for (const auto& p : split(s, ';')) out.push_back(parse_real(p));
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const auto& p : split(s, ';')) out.push_back(parse_int(p));
  return out;
}

std::vector<std::string> parse_strings(const std::string& s) {
  if (s.empty()) return {};
  return split(s, ';');
}

std::string meta_value(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_real(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

ordered_json meta_from_text(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  char* end = nullptr;
  const long long i = std::strtoll(s.c_str(), &end, 10);
  if (!s.empty() && end == s.c_str() + s.size()) return i;
  const double d = std::strtod(s.c_str(), &end);
  if (!s.empty() && end == s.c_str() + s.size()) return d;
  return s;
}

bool same_state(const OutputRecord& a, const OutputRecord& b) {
  return a.potential == b.potential && a.d == b.d && a.mu == b.mu && a.ell == b.ell && a.parity == b.parity;
}

std::string mu_text(const std::vector<double>& mu) { return join(mu, format_real); }
std::string int_text(const std::vector<int>& v) {
  return join(v, [](int x) { return std::to_string(x); });
}
std::string str_text(const std::vector<std::string>& v) {
  return join(v, [](const std::string& x) { return x; });
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json to_json(const OutputRecord& r) {
  ordered_json j;
  j["potential"] = r.potential;
  j["d"] = r.d;
  j["mu"] = r.mu;
  j["n"] = r.n;
  j["ell"] = r.ell;
  j["parity"] = r.parity;
  j["energy"] = r.energy;
  if (r.oracle) {
    j["numeric"] = r.oracle->numeric;
    j["abs_error"] = r.oracle->abs_error;
    j["rel_error"] = r.oracle->rel_error;
    j["passed"] = r.oracle->passed;
  }
  if (!r.samples.empty()) {
    ordered_json s = ordered_json::array();
    for (const auto& p : r.samples) s.push_back({{"r", p.r}, {"value", p.value}});
    j["samples"] = s;
  }
  return j;
}

OutputRecord record_from_json(const ordered_json& j) {
  OutputRecord r;
  r.potential = j.at("potential").get<std::string>();
  r.d = j.at("d").get<int>();
  r.mu = j.at("mu").get<std::vector<double>>();
  r.n = j.at("n").get<int>();
  r.ell = j.at("ell").get<std::vector<std::string>>();
  r.parity = j.at("parity").get<std::vector<int>>();
  r.energy = j.at("energy").get<double>();
  if (j.contains("numeric")) {
    OracleFields o;
    o.numeric = j.at("numeric").get<double>();
    o.abs_error = j.at("abs_error").get<double>();
    o.rel_error = j.at("rel_error").get<double>();
    o.passed = j.at("passed").get<bool>();
    r.oracle = o;
  }
  if (j.contains("samples")) {
    for (const auto& s : j.at("samples")) r.samples.push_back({s.at("r").get<double>(), s.at("value").get<double>()});
  }
  return r;
}

ordered_json to_json(const OutputDocument& doc) {
  ordered_json j;
  j["meta"] = doc.meta;
  j["levels"] = ordered_json::array();
  for (const auto& r : doc.levels) j["levels"].push_back(to_json(r));
  j["samples"] = ordered_json::array();
  for (const auto& s : doc.samples) j["samples"].push_back({{"r", s.r}, {"value", s.value}});
  if (!doc.cases.empty()) j["cases"] = doc.cases;
  return j;
}

OutputDocument document_from_json(const ordered_json& j) {
  OutputDocument doc;
  doc.meta = j.at("meta");
  for (const auto& r : j.at("levels")) doc.levels.push_back(record_from_json(r));
  for (const auto& s : j.at("samples")) doc.samples.push_back({s.at("r").get<double>(), s.at("value").get<double>()});
  if (j.contains("cases")) doc.cases = j.at("cases");
  if (doc.meta.contains("sample_column")) doc.sample_column = doc.meta["sample_column"].get<std::string>();
  return doc;
}

void write_csv(std::ostream& os, const OutputDocument& doc) {
  for (const auto& [key, value] : doc.meta.items()) os << "# " << key << '=' << meta_value(value) << '\n';

  bool uniform = !doc.levels.empty();
  for (const auto& r : doc.levels) uniform = uniform && same_state(r, doc.levels.front());
  const bool with_samples = !doc.samples.empty() || doc.levels.empty();
  if (with_samples && doc.levels.size() > 1) {
    throw std::logic_error("write_csv: samples can accompany at most one level");
  }
  if (uniform) {
    const auto& r = doc.levels.front();
    os << "# state.potential=" << r.potential << '\n';
    os << "# state.d=" << r.d << '\n';
    os << "# state.mu=" << mu_text(r.mu) << '\n';
    os << "# state.ell=" << str_text(r.ell) << '\n';
    os << "# state.parity=" << int_text(r.parity) << '\n';
  }

  if (with_samples) {
    if (!doc.levels.empty()) {
      os << "# level.n=" << doc.levels.front().n << '\n';
      os << "# level.energy=" << format_real(doc.levels.front().energy) << '\n';
    }
    os << "r," << doc.sample_column << '\n';
    for (const auto& s : doc.samples) os << format_real(s.r) << ',' << format_real(s.value) << '\n';
    return;
  }

  const bool oracle = doc.levels.front().oracle.has_value();
  if (!uniform) os << "potential,d,mu,ell,parity,";
  os << "n,energy";
  if (oracle) os << ",numeric,abs_error,rel_error,passed";
  os << '\n';
  for (const auto& r : doc.levels) {
    if (!uniform) {
      os << r.potential << ',' << r.d << ',' << mu_text(r.mu) << ',' << str_text(r.ell) << ',' << int_text(r.parity)
         << ',';
    }
    os << r.n << ',' << format_real(r.energy);
    if (oracle) {
      const OracleFields o = r.oracle.value_or(OracleFields{});
      os << ',' << format_real(o.numeric) << ',' << format_real(o.abs_error) << ',' << format_real(o.rel_error) << ','
         << (o.passed ? 1 : 0);
    }
    os << '\n';
  }
}

OutputDocument parse_csv(std::istream& is) {
  OutputDocument doc;
  OutputRecord state;
  bool have_state = false, have_level = false;
  OutputRecord level;
  std::string line;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2), value = line.substr(eq + 1);
      if (key == "state.potential") {
        state.potential = value;
        have_state = true;
      } else if (key == "state.d") {
        state.d = parse_int(value);
      } else if (key == "state.mu") {
        state.mu = parse_reals(value);
      } else if (key == "state.ell") {
        state.ell = parse_strings(value);
      } else if (key == "state.parity") {
        state.parity = parse_ints(value);
      } else if (key == "level.n") {
        level.n = parse_int(value);
        have_level = true;
      } else if (key == "level.energy") {
        level.energy = parse_real(value);
      } else {
        doc.meta[key] = meta_from_text(value);
      }
      continue;
    }
    if (header.empty()) {
      header = split(line, ',');
    } else {
      rows.push_back(split(line, ','));
      if (rows.back().size() != header.size()) throw std::runtime_error("csv: row width differs from header");
    }
  }
  if (header.empty()) throw std::runtime_error("csv: missing header");

  if (header.size() == 2 && header[0] == "r") {
    doc.sample_column = header[1];
    for (const auto& row : rows) doc.samples.push_back({parse_real(row[0]), parse_real(row[1])});
    if (have_level) {
      OutputRecord r = state;
      r.n = level.n;
      r.energy = level.energy;
      doc.levels.push_back(r);
    }
    return doc;
  }

  auto col = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
  };
  const int c_n = col("n"), c_e = col("energy");
  if (c_n < 0 || c_e < 0) throw std::runtime_error("csv: expected n and energy columns");
  const bool oracle = col("numeric") >= 0;
  if (!have_state && (col("potential") < 0 || col("d") < 0 || col("mu") < 0 || col("ell") < 0 || col("parity") < 0)) {
    throw std::runtime_error("csv: state columns missing");
  }
  for (const auto& row : rows) {
    OutputRecord r = state;
    if (!have_state) {
      r.potential = row[static_cast<std::size_t>(col("potential"))];
      r.d = parse_int(row[static_cast<std::size_t>(col("d"))]);
      r.mu = parse_reals(row[static_cast<std::size_t>(col("mu"))]);
      r.ell = parse_strings(row[static_cast<std::size_t>(col("ell"))]);
      r.parity = parse_ints(row[static_cast<std::size_t>(col("parity"))]);
    }
    r.n = parse_int(row[static_cast<std::size_t>(c_n)]);
    r.energy = parse_real(row[static_cast<std::size_t>(c_e)]);
    if (oracle) {
      OracleFields o;
      o.numeric = parse_real(row[static_cast<std::size_t>(col("numeric"))]);
      o.abs_error = parse_real(row[static_cast<std::size_t>(col("abs_error"))]);
      o.rel_error = parse_real(row[static_cast<std::size_t>(col("rel_error"))]);
      o.passed = row[static_cast<std::size_t>(col("passed"))] == "1";
      r.oracle = o;
    }
    doc.levels.push_back(r);
  }
  return doc;
}

}  // namespace dunkl
