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

#include "relaxbandit/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>

#include "relaxbandit/baselines.h"
#include "relaxbandit/bounds.h"
#include "relaxbandit/environment.h"
#include "relaxbandit/oracle.h"

namespace relaxbandit {
namespace {

void MeanAndStderr(const std::vector<RunResult>& runs, int round,
                   double RoundRecord::*field, double& mean, double& se) {
  const double n = static_cast<double>(runs.size());
  double sum = 0.0;
  for (const RunResult& r : runs) sum += r.rounds[round].*field;
  mean = sum / n;
  if (runs.size() < 2) {
    se = 0.0;
    return;
  }
  double ss = 0.0;
  for (const RunResult& r : runs) {
    const double d = r.rounds[round].*field - mean;
    ss += d * d;
  }
  se = std::sqrt(ss / (n - 1) / n);
}

}  // namespace

std::int64_t ExperimentResult::total_oracle_calls() const {
  std::int64_t total = 0;
  for (const RunResult& r : runs) total += r.oracle_calls;
  return total;
}

double ExperimentResult::min_played_prob() const {
  double m = std::numeric_limits<double>::infinity();
  for (const RunResult& r : runs) {
    for (const RoundRecord& rec : r.rounds) m = std::min(m, rec.min_prob);
  }
  return m;
}

double ExperimentResult::max_coin_probability() const {
  double m = 0.0;
  for (const RunResult& r : runs) {
    for (const RoundRecord& rec : r.rounds) {
      m = std::max(m, rec.coin_probability);
    }
  }
  return m;
}

LevelChoice ResolveLevel(const ExperimentConfig& config, int num_policies) {
  if (config.level) return {*config.level, true};
  if (num_policies < 2) return {static_cast<double>(config.num_actions), false};
  return TuneLevel(config.num_actions, config.horizon, num_policies);
}

RunResult RunReplication(const ExperimentConfig& config,
                         const PolicyClass& policies, double level,
                         int replication) {
  const int k = config.num_actions;
  const int horizon = config.horizon;
  const EnvironmentSpec& env = config.environment;

  Rng context_rng = Rng::ForStream(env.context.seed.value_or(config.seed),
                                   replication, Stream::kContexts);
  const ContextDistribution dist = env.context.Distribution();
  const std::vector<Context> contexts =
      dist.SampleSequence(horizon, context_rng);
  Rng adversary_rng = Rng::ForStream(env.adversary_seed.value_or(config.seed),
                                     replication, Stream::kAdversary);
  const CostSchedule schedule =
      MakeAdversary(env.adversary, policies, contexts, adversary_rng);

  ValueOracle oracle(policies);
  Rng action_rng = Rng::ForStream(config.seed, replication, Stream::kAction);
  std::unique_ptr<BanditLearner> learner;
  switch (config.learner) {
    case LearnerKind::kRelax: {
      LearnerConfig lc{k, horizon, level,
                       env.transductive ? ContextMode::kTransductive
                                        : ContextMode::kIidSampler};
      ContextSource source = env.transductive ? ContextSource::Known(contexts)
                                              : ContextSource::Sampler(dist);
      learner = std::make_unique<RelaxationLearner>(
          lc, oracle, std::move(source),
          RelaxationLearner::Streams{
              Rng::ForStream(config.seed, replication, Stream::kFuture),
              std::move(action_rng),
              Rng::ForStream(config.seed, replication, Stream::kCoin)});
      break;
    }
    case LearnerKind::kExp4:
      learner = std::make_unique<Exp4Learner>(
          policies, horizon, std::move(action_rng), config.exp4_gamma_scale);
      break;
    case LearnerKind::kUniform:
      learner = std::make_unique<UniformLearner>(k, std::move(action_rng));
      break;
  }

  RunResult result;
  result.replication = replication;
  result.seed = config.seed;
  result.rounds.reserve(horizon);
  // Running per-policy losses give the comparator for every prefix.
  std::vector<double> policy_totals(policies.size(), 0.0);
  double expected_total = 0.0;
  double realized_total = 0.0;
  for (int t = 1; t <= horizon; ++t) {
    const Context x = contexts[t - 1];
    const CostVector& c = schedule.at_round(t);
    const StepOutcome out =
        learner->Step(x, [&c](ActionIndex a) { return c[a]; });
    const double expected = out.played_dist.Dot(c);
    expected_total += expected;
    realized_total += out.observed_cost;
    double comparator = std::numeric_limits<double>::infinity();
    for (int p = 0; p < policies.size(); ++p) {
      policy_totals[p] += c.entries()[policies.slot(p, x.id)];
      comparator = std::min(comparator, policy_totals[p]);
    }
    result.rounds.push_back(RoundRecord{
        t, out.action, expected, out.observed_cost, expected_total - comparator,
        realized_total - comparator, out.played_dist.min(),
        out.coin_probability});
  }
  result.comparator_loss = BestPolicyLoss(policies, contexts, schedule.costs);
  result.total_expected_cost = expected_total;
  result.oracle_calls = oracle.calls();
  return result;
}

ExperimentResult RunExperiment(const ExperimentConfig& config,
                               Execution exec) {
  config.Validate();
  const auto start = std::chrono::steady_clock::now();
  const PolicyClass policies = config.policy_class.Build();

  ExperimentResult out;
  out.config = config;
  out.num_policies = policies.size();
  const LevelChoice choice = ResolveLevel(config, policies.size());
  out.level = choice.level;
  out.in_regime = choice.in_regime;
  out.runs.resize(config.reps);

  const int reps = config.reps;
  std::vector<std::exception_ptr> errors(reps);
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < reps; ++r) {
      try {
        out.runs[r] = RunReplication(config, policies, out.level, r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  } else {
    for (int r = 0; r < reps; ++r) {
      try {
        out.runs[r] = RunReplication(config, policies, out.level, r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const int horizon = config.horizon;
  out.mean_regret.resize(horizon);
  out.stderr_regret.resize(horizon);
  out.mean_realized_regret.resize(horizon);
  out.stderr_realized_regret.resize(horizon);
  out.bound.resize(horizon);
  for (int t = 0; t < horizon; ++t) {
    MeanAndStderr(out.runs, t, &RoundRecord::cumulative_regret,
                  out.mean_regret[t], out.stderr_regret[t]);
    MeanAndStderr(out.runs, t, &RoundRecord::cumulative_realized_regret,
                  out.mean_realized_regret[t], out.stderr_realized_regret[t]);
    out.bound[t] =
        policies.size() >= 2
            ? TheoreticalBound(config.num_actions, t + 1, out.level,
                               policies.size())
                  .total()
            : std::numeric_limits<double>::quiet_NaN();
  }
  out.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return out;
}

}  // namespace relaxbandit
