// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file records.hpp
 * @brief Output records and their JSON / CSV forms.
 *
 * JSON: {"meta": {...}, "levels": [record...], "samples": [{"r", "value"}...]}
 * plus "cases" for oracle reports. The schema is docs/output.schema.json.
 *
 * CSV: "# key=value" metadata lines, one header line, then comma-separated
 * rows. List-valued fields use ';' as separator. Reals are written with
 * %.17g, so parsing returns the same doubles.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dunkl {

struct Sample {
  double r = 0.0;
  double value = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct OracleFields {
  double numeric = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  bool passed = false;

  friend bool operator==(const OracleFields&, const OracleFields&) = default;
};

struct OutputRecord {
  std::string potential;
  int d = 0;
  std::vector<double> mu;
  int n = 0;
  std::vector<std::string> ell;  ///< half-integers as "p/2" or integers
  std::vector<int> parity;
  double energy = 0.0;
  std::optional<OracleFields> oracle;
  std::vector<Sample> samples;  ///< optional per-record samples

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

struct OutputDocument {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<OutputRecord> levels;
  std::vector<Sample> samples;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();  ///< oracle case summaries, may be empty
  std::string sample_column = "value";                             ///< CSV column name of Sample::value
};

/// %.17g
std::string format_real(double v);

nlohmann::ordered_json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const OutputDocument& doc);
OutputDocument document_from_json(const nlohmann::ordered_json& j);

/**
 * Writes the CSV form. Levels are emitted when present (columns n, energy and,
 * when the records differ in state, potential/d/mu/ell/parity; oracle columns
 * when present); otherwise samples are emitted as r,<sample_column>.
 */
void write_csv(std::ostream& os, const OutputDocument& doc);

/// Inverse of write_csv. Throws std::runtime_error on malformed input.
OutputDocument parse_csv(std::istream& is);

}  // namespace dunkl
