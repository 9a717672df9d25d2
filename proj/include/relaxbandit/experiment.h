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

// Replicated regret experiments.
//
// Random streams for replication r (see rng.h for the derivation):
//   policy class   ForStream(policyClass.seed, 0, kPolicies), shared by all r
//   contexts       ForStream(context.seed or seed, r, kContexts)
//   cost schedule  ForStream(adversary.seed or seed, r, kAdversary)
//   learner        ForStream(seed, r, kFuture | kAction | kCoin)
// The context sequence and the cost schedule are materialized before the
// first round, so the adversary never sees the learner's actions.

#ifndef RELAXBANDIT_EXPERIMENT_H_
#define RELAXBANDIT_EXPERIMENT_H_

#include <cstdint>
#include <vector>

#include "relaxbandit/config.h"
#include "relaxbandit/core.h"
#include "relaxbandit/kernels.h"
#include "relaxbandit/learner.h"
#include "relaxbandit/policy.h"

namespace relaxbandit {

struct RoundRecord {
  int round;
  ActionIndex played;
  double expected_cost;  // q_t . c_t
  double realized_cost;  // c_t(played)
  double cumulative_regret;
  double cumulative_realized_regret;
  double min_prob;          // smallest coordinate of q_t
  double coin_probability;  // 0 for learners without an estimator coin
};

struct RunResult {
  int replication = 0;
  std::uint64_t seed = 0;
  std::vector<RoundRecord> rounds;
  double comparator_loss = 0.0;  // best policy over all T rounds
  double total_expected_cost = 0.0;
  std::int64_t oracle_calls = 0;

  double final_regret() const {
    return rounds.empty() ? 0.0 : rounds.back().cumulative_regret;
  }
};

struct ExperimentResult {
  ExperimentConfig config;
  double level = 0.0;
  bool in_regime = true;
  int num_policies = 0;
  std::vector<RunResult> runs;
  // Per-round aggregates over replications (index t - 1).
  std::vector<double> mean_regret;
  std::vector<double> stderr_regret;
  std::vector<double> mean_realized_regret;
  std::vector<double> stderr_realized_regret;
  // Bound evaluated at horizon t with the run's L; NaN when N < 2.
  std::vector<double> bound;
  double wall_seconds = 0.0;

  std::int64_t total_oracle_calls() const;
  double min_played_prob() const;
  double max_coin_probability() const;
};

// Level used by the run: the configured L, or TuneLevel(K, T, N) ("auto").
// With N = 1 and "auto", L = K and the run is flagged out of regime.
LevelChoice ResolveLevel(const ExperimentConfig& config, int num_policies);

RunResult RunReplication(const ExperimentConfig& config,
                         const PolicyClass& policies, double level,
                         int replication);

// Runs every replication, in parallel when exec is kParallel. Results are
// identical for both modes: each replication owns its streams and the
// aggregation walks replications in index order.
ExperimentResult RunExperiment(const ExperimentConfig& config,
                               Execution exec = Execution::kParallel);

}  // namespace relaxbandit

#endif  // RELAXBANDIT_EXPERIMENT_H_
