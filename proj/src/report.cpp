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

#include "onticlab/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <utility>

namespace onticlab {
namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const nlohmann::json& j, const char* key) {
  const auto& value = j.at(key);
  if (value.is_null()) return std::nullopt;
  return value.get<T>();
}

template <typename T>
std::string optional_cell(const std::optional<T>& value) {
  if (!value) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(*value);
  } else {
    return std::to_string(*value);
  }
}

}  // namespace

ReportRow born_row(std::string check, const BornTestReport& report, std::optional<int> dimension,
                   bool pass) {
  ReportRow row;
  row.check = std::move(check);
  row.model = report.model;
  row.dimension = dimension;
  row.n = report.n;
  row.estimate = report.estimate;
  row.exact = report.exact;
  row.z_score = report.z_score;
  row.seed = report.seed;
  row.pass = pass;
  return row;
}

ReportRow overlap_row(std::string check, const SupportOverlapReport& report,
                      std::optional<int> dimension, bool pass) {
  ReportRow row;
  row.check = std::move(check);
  row.model = report.model;
  row.dimension = dimension;
  row.n = report.n_samples;
  row.estimate = report.max_foreign_density;
  row.overlap_count = report.overlap_count;
  row.seed = report.seed;
  row.pass = pass;
  return row;
}

bool ReportDocument::all_passed() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string emit_csv(std::span<const ReportRow> rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : rows) {
    out += row.check;
    out += ',';
    out += row.model;
    out += ',';
    out += optional_cell(row.dimension);
    out += ',';
    out += optional_cell(row.n);
    out += ',';
    out += optional_cell(row.estimate);
    out += ',';
    out += optional_cell(row.exact);
    out += ',';
    out += optional_cell(row.z_score);
    out += ',';
    out += optional_cell(row.overlap_count);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += row.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

nlohmann::json row_to_json(const ReportRow& row) {
  return {
      {"check", row.check},
      {"model", row.model},
      {"n", optional_json(row.n)},
      {"estimate", optional_json(row.estimate)},
      {"exact", optional_json(row.exact)},
      {"z_score", optional_json(row.z_score)},
      {"overlap_count", optional_json(row.overlap_count)},
      {"seed", row.seed},
      {"pass", row.pass},
  };
}

ReportRow row_from_json(const nlohmann::json& j) {
  ReportRow row;
  row.check = j.at("check").get<std::string>();
  row.model = j.at("model").get<std::string>();
  row.n = optional_from_json<std::int64_t>(j, "n");
  row.estimate = optional_from_json<double>(j, "estimate");
  row.exact = optional_from_json<double>(j, "exact");
  row.z_score = optional_from_json<double>(j, "z_score");
  row.overlap_count = optional_from_json<std::int64_t>(j, "overlap_count");
  row.seed = j.at("seed").get<std::uint64_t>();
  row.pass = j.at("pass").get<bool>();
  return row;
}

nlohmann::json document_to_json(const ReportDocument& doc) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : doc.rows) rows.push_back(row_to_json(row));
  nlohmann::json j = {
      {"experiment", doc.experiment},
      {"master_seed", doc.master_seed},
      {"reports", std::move(rows)},
  };
  if (!doc.witnesses.empty()) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : doc.witnesses) {
      witnesses.push_back({{"index", w.index},
                           {"ordering", w.ordering},
                           {"lambda", w.lambda},
                           {"outcome_original", w.outcome_original},
                           {"outcome_permuted", w.outcome_permuted}});
    }
    j["witnesses"] = std::move(witnesses);
  }
  if (!doc.audits.empty()) {
    nlohmann::json audits = nlohmann::json::array();
    for (const auto& a : doc.audits) {
      audits.push_back({{"model", a.model},
                        {"N", optional_json(a.hilbert_dimension)},
                        {"ontic_dim", a.ontic_dimension},
                        {"bound", optional_json(a.bound)},
                        {"satisfies", a.satisfies},
                        {"restricted_manifold", a.restricted_manifold}});
    }
    j["audits"] = std::move(audits);
  }
  return j;
}

ReportDocument document_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.experiment = j.at("experiment").get<std::string>();
  doc.master_seed = j.at("master_seed").get<std::uint64_t>();
  for (const auto& row : j.at("reports")) doc.rows.push_back(row_from_json(row));
  if (j.contains("witnesses")) {
    for (const auto& w : j.at("witnesses")) {
      doc.witnesses.push_back({w.at("index").get<int>(), w.at("ordering").get<std::vector<int>>(),
                               w.at("lambda").get<double>(), w.at("outcome_original").get<int>(),
                               w.at("outcome_permuted").get<int>()});
    }
  }
  if (j.contains("audits")) {
    for (const auto& a : j.at("audits")) {
      DimensionAudit audit;
      audit.model = a.at("model").get<std::string>();
      audit.hilbert_dimension = optional_from_json<int>(a, "N");
      audit.ontic_dimension = a.at("ontic_dim").get<int>();
      audit.bound = optional_from_json<int>(a, "bound");
      audit.satisfies = a.at("satisfies").get<bool>();
      audit.restricted_manifold = a.at("restricted_manifold").get<bool>();
      doc.audits.push_back(std::move(audit));
    }
  }
  return doc;
}

std::string emit_json(const ReportDocument& doc) {
  return document_to_json(doc).dump(2) + '\n';
}

void write_report(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open report file for writing: " + path.string());
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("failed to write report file: " + path.string());
  }
}

}  // namespace onticlab
