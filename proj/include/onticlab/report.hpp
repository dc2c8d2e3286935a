// Copyright 2026 The onticlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "onticlab/property_suite.hpp"

namespace onticlab {

/// One line of a battery report. Fields that do not apply to a check stay
/// empty (blank CSV cell, JSON null).
struct ReportRow {
  std::string check;
  std::string model;
  std::optional<int> dimension;  ///< CSV column "N"; not part of the JSON row.
  std::optional<std::int64_t> n;
  std::optional<double> estimate;
  std::optional<double> exact;
  std::optional<double> z_score;
  std::optional<std::int64_t> overlap_count;
  std::uint64_t seed = 0;
  bool pass = false;

  bool operator==(const ReportRow&) const = default;
};

ReportRow born_row(std::string check, const BornTestReport& report, std::optional<int> dimension,
                   bool pass);
ReportRow overlap_row(std::string check, const SupportOverlapReport& report,
                      std::optional<int> dimension, bool pass);

/// A contextuality witness found for one chi.
struct WitnessRecord {
  int index = 0;
  std::vector<int> ordering;
  double lambda = 0.0;
  int outcome_original = 0;
  int outcome_permuted = 0;

  bool operator==(const WitnessRecord&) const = default;
};

/// Everything an experiment run produces.
struct ReportDocument {
  std::string experiment;
  std::uint64_t master_seed = 0;
  std::vector<ReportRow> rows;
  std::vector<WitnessRecord> witnesses;
  std::vector<DimensionAudit> audits;

  bool all_passed() const noexcept;
};

inline constexpr std::string_view kCsvHeader =
    "check,model,N,n,estimate,exact,z_score,overlap_count,seed,pass";

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// Header plus one line per row, '\n'-terminated.
std::string emit_csv(std::span<const ReportRow> rows);

/// Row object with exactly the keys check, model, n, estimate, exact,
/// z_score, overlap_count, seed, pass.
nlohmann::json row_to_json(const ReportRow& row);
ReportRow row_from_json(const nlohmann::json& j);

nlohmann::json document_to_json(const ReportDocument& doc);
ReportDocument document_from_json(const nlohmann::json& j);

/// Pretty-printed JSON document with a trailing newline.
std::string emit_json(const ReportDocument& doc);

/// Writes bytes to path; throws std::runtime_error if the file cannot be written.
void write_report(const std::filesystem::path& path, std::string_view bytes);

}  // namespace onticlab
