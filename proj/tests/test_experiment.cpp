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

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "onticlab/experiment.hpp"

namespace onticlab {
namespace {

TEST(ConfigText, ParsesKeyValueLines) {
  const auto values = parse_config_text("# comment\nexperiment = born-test\n\n model=qubit-b0 \nN=2\n");
  ASSERT_EQ(values.size(), 3u);
  EXPECT_EQ(values.at("model"), "qubit-b0");
  EXPECT_THROW(parse_config_text("samples\n"), ConfigError);
  EXPECT_THROW(parse_config_text("seed=1\nseed=2\n"), ConfigError);
}

TEST(ConfigText, AppliesAndRejects) {
  ExperimentConfig config;
  apply_config_values(config, parse_config_text("experiment=wigner-demo\nsamples=5000\nseed=9\n"
                                                "format=json\nout=x.json\nthreads=2\n"));
  EXPECT_EQ(config.experiment, Experiment::wigner_demo);
  EXPECT_EQ(config.samples, 5000);
  EXPECT_EQ(config.seed, 9u);
  EXPECT_EQ(config.format, ReportFormat::json);
  EXPECT_EQ(config.threads, 2);
  EXPECT_THROW(apply_config_values(config, {{"colour", "red"}}), ConfigError);
  EXPECT_THROW(apply_config_values(config, {{"samples", "12abc"}}), ConfigError);
  EXPECT_THROW(apply_config_values(config, {{"model", "qutrit"}}), ConfigError);
}

TEST(Validate, CompatibilityRules) {
  ExperimentConfig config;
  EXPECT_NO_THROW(validate(config));
  config.samples = 999;
  EXPECT_THROW(validate(config), ConfigError);
  config.experiment = Experiment::dimension_audit;
  EXPECT_NO_THROW(validate(config));

  ExperimentConfig qubit;
  qubit.model = ModelKind::qubit_df;
  qubit.dimension = 3;
  EXPECT_THROW(validate(qubit), ConfigError);

  ExperimentConfig context;
  context.experiment = Experiment::contextuality_demo;
  context.dimension = 2;
  EXPECT_THROW(validate(context), ConfigError);
  context.dimension = 3;
  context.model = ModelKind::bell_ndf;
  EXPECT_THROW(validate(context), ConfigError);

  ExperimentConfig wigner;
  wigner.experiment = Experiment::wigner_demo;
  wigner.model = ModelKind::bell_df;
  EXPECT_THROW(validate(wigner), ConfigError);

  ExperimentConfig small;
  small.dimension = 1;
  EXPECT_THROW(validate(small), ConfigError);
}

TEST(OutputPath, DefaultsFromExperimentAndFormat) {
  ExperimentConfig config;
  config.experiment = Experiment::contextuality_demo;
  config.format = ReportFormat::json;
  EXPECT_EQ(output_path_for(config), "onticlab-contextuality-demo.json");
  config.output_path = "a/b.csv";
  EXPECT_EQ(output_path_for(config), "a/b.csv");
}

TEST(Run, BornTestQubitBattery) {
  ExperimentConfig config;
  config.model = ModelKind::qubit_df;
  config.samples = 100000;
  config.seed = 7;
  const ReportDocument doc = run_experiment(config);
  ASSERT_EQ(doc.rows.size(), 20u);
  for (const auto& row : doc.rows) {
    EXPECT_EQ(row.check, "born-test");
    ASSERT_TRUE(row.z_score.has_value());
    EXPECT_LT(std::abs(*row.z_score), 4.0);
  }
  EXPECT_TRUE(doc.all_passed());
}

TEST(Run, ContextualityDemoHasWitnesses) {
  ExperimentConfig config;
  config.experiment = Experiment::contextuality_demo;
  config.dimension = 3;
  const ReportDocument doc = run_experiment(config);
  EXPECT_FALSE(doc.witnesses.empty());
  EXPECT_TRUE(doc.all_passed());
  for (const auto& w : doc.witnesses) EXPECT_NE(w.outcome_original, w.outcome_permuted);
}

TEST(Run, DimensionAuditCoversShippedModels) {
  ExperimentConfig config;
  config.experiment = Experiment::dimension_audit;
  const ReportDocument doc = run_experiment(config);
  EXPECT_EQ(doc.audits.size(), 5u);
  EXPECT_TRUE(doc.all_passed());
}

TEST(Run, IndependentOfThreadCount) {
  ExperimentConfig config;
  config.experiment = Experiment::wigner_demo;
  config.samples = 2000;
  config.seed = 123;
  config.threads = 1;
  const std::string serial = render_report(run_experiment(config), ReportFormat::json);
  config.threads = 4;
  const std::string parallel = render_report(run_experiment(config), ReportFormat::json);
  EXPECT_EQ(serial, parallel);
  config.seed = 124;
  EXPECT_NE(serial, render_report(run_experiment(config), ReportFormat::json));
}

}  // namespace
}  // namespace onticlab
