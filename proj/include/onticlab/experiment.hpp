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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "onticlab/report.hpp"

namespace onticlab {

enum class Experiment { born_test, contextuality_demo, property_suite, wigner_demo, dimension_audit };
enum class ModelKind { qubit_df, qubit_b0, bell_df, bell_ndf, wigner_gaussian };
enum class ReportFormat { csv, json };

std::string_view to_string(Experiment e) noexcept;
std::string_view to_string(ModelKind m) noexcept;
std::string_view to_string(ReportFormat f) noexcept;

/// Invalid configuration; the CLI maps it to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Experiment parse_experiment(std::string_view text);
ModelKind parse_model(std::string_view text);
ReportFormat parse_format(std::string_view text);

struct ExperimentConfig {
  Experiment experiment = Experiment::born_test;
  std::optional<ModelKind> model;  ///< unset: every compatible model
  std::optional<int> dimension;    ///< N for the Bell models; qubit models are N = 2
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string output_path;  ///< empty: onticlab-<experiment>.<format>
  ReportFormat format = ReportFormat::csv;
  int threads = 0;  ///< 0: hardware concurrency
};

using ConfigValues = std::map<std::string, std::string, std::less<>>;

/// Parses flat `key = value` lines; blank lines and lines starting with '#'
/// are skipped. Throws ConfigError on malformed lines or repeated keys.
ConfigValues parse_config_text(std::string_view text);
ConfigValues read_config_file(const std::filesystem::path& path);

/// Applies known keys (experiment, model, N, samples, seed, out, format,
/// threads) on top of `config`. Unknown keys are rejected.
void apply_config_values(ExperimentConfig& config, const ConfigValues& values);

/// Throws ConfigError for out-of-range values or incompatible
/// experiment/model/N combinations.
void validate(const ExperimentConfig& config);

std::filesystem::path output_path_for(const ExperimentConfig& config);

/// Runs the configured battery. The result depends only on the configuration
/// (not on `threads`).
ReportDocument run_experiment(const ExperimentConfig& config);

/// Serializes in the configured format.
std::string render_report(const ReportDocument& doc, ReportFormat format);

}  // namespace onticlab
