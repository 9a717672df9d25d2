// Copyright 2026 The relaxbandit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// relaxbandit run    --config exp.json --out results/ [--reps R] [--seed S]
//                    [--learner relax|exp4|uniform] [--serial]
// relaxbandit verify [--seed S]

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "relaxbandit/config.h"
#include "relaxbandit/experiment.h"
#include "relaxbandit/output.h"
#include "relaxbandit/verify.h"

namespace {

using relaxbandit::ConfigError;

int Run(const std::string& config_path, const std::string& out_dir,
        std::optional<int> reps, std::optional<std::uint64_t> seed,
        std::optional<std::string> learner, bool serial) {
  relaxbandit::ExperimentConfig config;
  try {
    config = relaxbandit::LoadConfig(config_path);
    if (reps) config.reps = *reps;
    if (seed) config.seed = *seed;
    if (learner) {
      try {
        config.learner = relaxbandit::ParseLearnerKind(*learner);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("--learner", e.what());
      }
    }
    config.Validate();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  const relaxbandit::ExperimentResult result = relaxbandit::RunExperiment(
      config, serial ? relaxbandit::Execution::kSerial
                     : relaxbandit::Execution::kParallel);
  try {
    relaxbandit::WriteOutputs(result, out_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "output error: %s\n", e.what());
    return 1;
  }
  const int t = config.horizon;
  std::printf("learner=%s K=%d T=%d N=%d L=%.6g%s reps=%d\n",
              relaxbandit::LearnerName(config.learner).c_str(),
              config.num_actions, t, result.num_policies, result.level,
              result.in_regime ? "" : " (out of regime)", config.reps);
  std::printf("final regret %.4f +/- %.4f, bound %.4f, oracle calls %lld\n",
              result.mean_regret[t - 1], result.stderr_regret[t - 1],
              result.bound[t - 1],
              static_cast<long long>(result.total_oracle_calls()));
  return 0;
}

int Verify(std::uint64_t seed) {
  bool all = true;
  for (const auto& report : relaxbandit::RunVerifySuite(seed)) {
    std::printf("%s  %s  %s\n", report.passed ? "PASS" : "FAIL",
                report.name.c_str(), report.detail.c_str());
    all = all && report.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oracle-efficient relaxation learner for contextual bandits"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a replicated regret experiment");
  std::string config_path;
  std::string out_dir;
  std::optional<int> reps;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> learner;
  bool serial = false;
  run->add_option("--config", config_path, "Experiment JSON")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--reps", reps, "Override replication count")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Override master seed");
  run->add_option("--learner", learner, "Override learner")
      ->check(CLI::IsMember({"relax", "exp4", "uniform"}));
  run->add_flag("--serial", serial, "Run replications on one thread");

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  std::uint64_t verify_seed = 20260101;
  verify->add_option("--seed", verify_seed, "Seed for the property suites");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return Run(config_path, out_dir, reps, seed, learner, serial);
    if (*verify) return Verify(verify_seed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
