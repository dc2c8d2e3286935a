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

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "onticlab/experiment.hpp"
#include "onticlab/report.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void print_audit_table(const onticlab::ReportDocument& doc) {
  if (doc.audits.empty()) return;
  std::cout << std::left << std::setw(18) << "model" << std::setw(6) << "N" << std::setw(11)
            << "ontic_dim" << std::setw(8) << "bound" << "satisfies\n";
  for (const auto& a : doc.audits) {
    std::cout << std::left << std::setw(18) << a.model << std::setw(6)
              << (a.hilbert_dimension ? std::to_string(*a.hilbert_dimension) : "-")
              << std::setw(11) << a.ontic_dimension << std::setw(8)
              << (a.bound ? std::to_string(*a.bound) : "-")
              << (a.satisfies ? "yes" : "NO")
              << (a.restricted_manifold ? " (Gaussian manifold)" : "") << '\n';
  }
}

std::size_t failing_rows(const onticlab::ReportDocument& doc) {
  std::size_t count = 0;
  for (const auto& row : doc.rows) count += row.pass ? 0 : 1;
  return count;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontological-model simulations and property checks"};
  app.set_version_flag("--version", "onticlab 0.1.0");

  std::optional<std::string> experiment;
  std::optional<std::string> model;
  std::optional<int> dimension;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> config_path;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<int> threads;

  app.add_option("experiment_name", experiment,
                 "born-test | contextuality-demo | property-suite | wigner-demo | dimension-audit");
  app.add_option("--experiment", experiment, "Experiment to run (same as the positional name)");
  app.add_option("--model", model, "qubit-df | qubit-b0 | bell-df | bell-ndf | wigner-gaussian");
  app.add_option("--N", dimension, "Hilbert-space dimension for the Bell models");
  app.add_option("--samples", samples, "Monte Carlo samples per check");
  app.add_option("--seed", seed, "Master seed (default: $ONTICLAB_SEED, else 1)");
  app.add_option("--config", config_path, "Flat key=value config file; flags override it");
  app.add_option("--out", out, "Report path (default: onticlab-<experiment>.<format>)");
  app.add_option("--format", format, "csv | json");
  app.add_option("--threads", threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  onticlab::ExperimentConfig config;
  try {
    if (const char* env = std::getenv("ONTICLAB_SEED"); env != nullptr && *env != '\0') {
      onticlab::apply_config_values(config, {{"seed", env}});
    }
    if (config_path) {
      onticlab::apply_config_values(config, onticlab::read_config_file(*config_path));
    }
    if (experiment) config.experiment = onticlab::parse_experiment(*experiment);
    if (model) config.model = onticlab::parse_model(*model);
    if (dimension) config.dimension = *dimension;
    if (samples) config.samples = *samples;
    if (seed) config.seed = *seed;
    if (out) config.output_path = *out;
    if (format) config.format = onticlab::parse_format(*format);
    if (threads) config.threads = *threads;
    onticlab::validate(config);
  } catch (const onticlab::ConfigError& e) {
    std::cerr << "onticlab: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }

  const auto path = onticlab::output_path_for(config);
  onticlab::ReportDocument doc;
  try {
    doc = onticlab::run_experiment(config);
    onticlab::write_report(path, onticlab::render_report(doc, config.format));
  } catch (const std::exception& e) {
    std::cerr << "onticlab: " << e.what() << '\n';
    return kExitFailure;
  }

  print_audit_table(doc);
  const std::size_t failed = failing_rows(doc);
  std::cout << onticlab::to_string(config.experiment) << ": " << doc.rows.size() << " checks, "
            << failed << " failed, seed " << config.seed << '\n';
  if (failed > 0) {
    std::cout << "failing report: " << path.string() << '\n';
    return kExitFailure;
  }
  std::cout << "report: " << path.string() << '\n';
  return 0;
}
