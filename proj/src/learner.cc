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

#include "relaxbandit/learner.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "relaxbandit/estimator.h"

namespace relaxbandit {

void LearnerConfig::Validate() const {
  if (num_actions < 2 || num_actions > 64) {
    throw std::domain_error("LearnerConfig: K must lie in [2, 64], got " +
                            std::to_string(num_actions));
  }
  if (horizon < 1) throw std::domain_error("LearnerConfig: T must be >= 1");
  if (!(level >= num_actions)) {
    throw std::domain_error("LearnerConfig: L = " + std::to_string(level) +
                            " is below K = " + std::to_string(num_actions));
  }
}

LevelChoice TuneLevel(int num_actions, int horizon, int num_policies) {
  if (num_policies < 2) {
    throw std::domain_error("TuneLevel: need N >= 2 so that log N > 0");
  }
  const double k = num_actions;
  const double t = horizon;
  const double log_n = std::log(static_cast<double>(num_policies));
  if (t < k * k * log_n) return {k, false};
  return {std::max(k, std::cbrt(k * t / log_n)), true};
}

FutureDraw SampleFuture(int t, const LearnerConfig& config,
                        const ContextSource& source, Rng& rng) {
  if (t < 0 || t > config.horizon) {
    throw std::domain_error("SampleFuture: round " + std::to_string(t) +
                            " outside [0, T]");
  }
  const int k = config.num_actions;
  const double z_prob = k / config.level;
  const std::size_t remaining = static_cast<std::size_t>(config.horizon - t);
  const ContextDistribution* sampler = source.sampler();
  if (!sampler && source.sequence().size() <
                      static_cast<std::size_t>(config.horizon)) {
    throw std::domain_error("SampleFuture: known context sequence too short");
  }

  FutureDraw rho;
  rho.num_actions = k;
  rho.contexts.reserve(remaining);
  rho.zvals.reserve(remaining);
  rho.signs.resize(remaining * k);
  for (std::size_t j = 0; j < remaining; ++j) {
    rho.contexts.push_back(sampler ? sampler->Sample(rng)
                                   : source.sequence()[t + j]);
    rho.zvals.push_back(rng.Bernoulli(z_prob) ? config.level : 0.0);
    const std::uint64_t bits = rng.Bits();
    for (int i = 0; i < k; ++i) {
      rho.signs[j * k + i] = ((bits >> i) & 1ULL) ? 1 : -1;
    }
  }
  return rho;
}

OracleScores OracleScores::FromPsi(std::vector<double> psi, double level) {
  OracleScores scores;
  scores.phi.reserve(psi.size() - 1);
  for (std::size_t i = 1; i < psi.size(); ++i) {
    scores.phi.push_back((psi[i] - psi[0]) / level);
  }
  scores.psi = std::move(psi);
  return scores;
}

LossTable PastLossTable(std::span<const HistoryRecord> history,
                        int num_contexts, int num_actions) {
  LossTable past(num_contexts, num_actions);
  for (const HistoryRecord& h : history) {
    if (!h.estimate.is_zero()) {
      past.at(h.context, ActionIndex{h.estimate.coordinate()}) +=
          h.estimate.scale();
    }
  }
  return past;
}

LossTable FutureLossTable(const FutureDraw& rho, int num_contexts) {
  const int k = rho.num_actions;
  LossTable future(num_contexts, k);
  std::vector<double> row(k);
  for (std::size_t j = 0; j < rho.size(); ++j) {
    if (rho.zvals[j] == 0.0) continue;
    for (int i = 0; i < k; ++i) {
      row[i] = 2.0 * rho.signs[j * k + i] * rho.zvals[j];
    }
    future.AddRow(rho.contexts[j], row);
  }
  return future;
}

OracleScores ComputeOracleScores(std::span<const HistoryRecord> history,
                                 Context current, const FutureDraw& rho,
                                 const LearnerConfig& config,
                                 ValueOracle& oracle) {
  const int k = config.num_actions;
  std::vector<WeightedExample> examples;
  examples.reserve(history.size() + 1 + rho.size());
  for (const HistoryRecord& h : history) {
    examples.push_back({h.context, h.estimate.Dense(k)});
  }
  const std::size_t current_slot = examples.size();
  examples.push_back({current, std::vector<double>(k, 0.0)});
  for (std::size_t j = 0; j < rho.size(); ++j) {
    std::vector<double> loss(k);
    for (int i = 0; i < k; ++i) {
      loss[i] = 2.0 * rho.signs[j * k + i] * rho.zvals[j];
    }
    examples.push_back({rho.contexts[j], std::move(loss)});
  }

  std::vector<double> psi(k + 1);
  // The all-zero current term contributes nothing, matching e_0 = 0.
  psi[0] = oracle.Value(examples);
  for (int i = 1; i <= k; ++i) {
    std::vector<double>& term = examples[current_slot].loss;
    std::fill(term.begin(), term.end(), 0.0);
    term[i - 1] = config.level;
    psi[i] = oracle.Value(examples);
  }
  return OracleScores::FromPsi(std::move(psi), config.level);
}

OracleScores ComputeOracleScores(const LossTable& past, const LossTable& future,
                                 Context current, const LearnerConfig& config,
                                 ValueOracle& oracle) {
  const int k = config.num_actions;
  LossTable base = past;
  base += future;
  std::vector<double> psi(k + 1);
  psi[0] = oracle.Value(base);
  for (int i = 1; i <= k; ++i) {
    double& cell = base.at(current, ActionIndex{i});
    const double saved = cell;
    cell += config.level;
    psi[i] = oracle.Value(base);
    cell = saved;
  }
  return OracleScores::FromPsi(std::move(psi), config.level);
}

ActionDistribution WaterFill(std::span<const double> phi, RemainderRule rule) {
  const std::size_t k = phi.size();
  if (k == 0) throw std::invalid_argument("WaterFill: empty score vector");
  std::vector<double> q(k, 0.0);
  double m = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    q[i] = std::min(std::max(phi[i], 0.0), m);
    m -= q[i];
  }
  if (m > 0.0) {
    if (rule == RemainderRule::kArgmaxPhi) {
      const auto best = std::max_element(phi.begin(), phi.end());
      q[static_cast<std::size_t>(best - phi.begin())] += m;
    } else {
      for (double& v : q) v += m / static_cast<double>(k);
    }
  }
  return ActionDistribution(std::move(q));
}

double InnerSupValue(const ActionDistribution& q, const OracleScores& scores,
                     double level) {
  const int k = q.num_actions();
  if (level < k) {
    throw std::domain_error("InnerSupValue: L = " + std::to_string(level) +
                            " is below K = " + std::to_string(k));
  }
  if (scores.num_actions() != k) {
    throw std::invalid_argument("InnerSupValue: score/distribution mismatch");
  }
  const double z0 = -scores.psi[0];
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    const double zi = level * q.probs()[i] - scores.psi[i + 1];
    total += std::max(zi - z0, 0.0);
  }
  return total / level + z0;
}

ActionDistribution MixedStrategy(const OracleScores& scores,
                                 const LearnerConfig& config,
                                 RemainderRule rule) {
  const ActionDistribution inner = WaterFill(scores.phi, rule);
  const double k = config.num_actions;
  const double keep = 1.0 - k / config.level;
  const double floor = 1.0 / config.level;
  std::vector<double> q(inner.probs().begin(), inner.probs().end());
  for (double& v : q) v = keep * v + floor;
  return ActionDistribution(std::move(q));
}

double RelaxationValue(std::span<const HistoryRecord> history,
                       const FutureDraw& rho, const LearnerConfig& config,
                       ValueOracle& oracle) {
  const int t = static_cast<int>(history.size());
  if (t > config.horizon ||
      rho.size() != static_cast<std::size_t>(config.horizon - t)) {
    throw std::domain_error("RelaxationValue: future draw does not cover "
                            "rounds t+1..T");
  }
  const PolicyClass& policies = oracle.policies();
  LossTable totals = PastLossTable(history, policies.num_contexts(),
                                   config.num_actions);
  totals += FutureLossTable(rho, policies.num_contexts());
  return -oracle.Value(totals) +
         (config.horizon - t) * config.num_actions / config.level;
}

RelaxationLearner::RelaxationLearner(const LearnerConfig& config,
                                     ValueOracle& oracle, ContextSource source,
                                     Streams streams, RemainderRule rule)
    : config_(config),
      oracle_(oracle),
      source_(std::move(source)),
      streams_(std::move(streams)),
      rule_(rule),
      past_(oracle.policies().num_contexts(), config.num_actions) {
  config_.Validate();
  if (oracle.policies().num_actions() != config.num_actions) {
    throw std::invalid_argument(
        "RelaxationLearner: policy class action count differs from K");
  }
  config_.mode = source_.mode();
  history_.reserve(config.horizon);
}

StepOutcome RelaxationLearner::Step(Context x, const CostFeedback& feedback) {
  const int t = static_cast<int>(history_.size()) + 1;
  if (t > config_.horizon) {
    throw std::domain_error("RelaxationLearner: all rounds already played");
  }
  const FutureDraw rho = SampleFuture(t, config_, source_, streams_.future);
  const LossTable future =
      FutureLossTable(rho, oracle_.policies().num_contexts());
  last_scores_ = ComputeOracleScores(past_, future, x, config_, oracle_);
  ActionDistribution q = MixedStrategy(last_scores_, config_, rule_);

  const ActionIndex played = q.Sample(streams_.action);
  const double cost = feedback(played);
  const double coin_prob = CoinProbability(cost, q[played], config_.level);
  const int coin =
      DrawEstimatorCoin(cost, q[played], config_.level, streams_.coin);
  const EstimatedCost estimate = BuildEstimate(played, coin, config_.level);
  if (coin) past_.at(x, played) += config_.level;

  history_.push_back(HistoryRecord{x, q, played, cost, estimate});
  return StepOutcome{std::move(q), played, cost, coin_prob};
}

}  // namespace relaxbandit
