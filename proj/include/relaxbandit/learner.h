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

// Oracle-efficient relaxation learner for adversarial contextual bandits.
//
// Each round the learner draws a random future rho = (x, eps, Z)_{t+1..T},
// queries the value oracle K + 1 times to score the current context, solves
// the inner minimax problem by water-filling, mixes the solution with the
// uniform distribution at rate K/L and plays. The observed cost is turned
// into a discretized importance-weighted estimate in {0, L e_i}.

#ifndef RELAXBANDIT_LEARNER_H_
#define RELAXBANDIT_LEARNER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relaxbandit/bandit_learner.h"
#include "relaxbandit/core.h"
#include "relaxbandit/environment.h"
#include "relaxbandit/oracle.h"
#include "relaxbandit/policy.h"
#include "relaxbandit/rng.h"

namespace relaxbandit {

enum class ContextMode { kIidSampler, kTransductive };

struct LearnerConfig {
  int num_actions = 2;  // K
  int horizon = 1;      // T
  double level = 2.0;   // L, kept real-valued
  ContextMode mode = ContextMode::kIidSampler;

  // Throws std::domain_error unless K >= 2, K <= 64, T >= 1 and L >= K.
  void Validate() const;
};

struct LevelChoice {
  double level;
  // False when T < K^2 ln N and the level was clamped to K.
  bool in_regime;
};

// L = max(K, (K T / ln N)^(1/3)), natural log. Throws std::domain_error for
// N < 2.
LevelChoice TuneLevel(int num_actions, int horizon, int num_policies);

// Where future contexts come from: a sampler for the i.i.d. setting or the
// full known sequence x_1..x_T for the transductive one.
class ContextSource {
 public:
  static ContextSource Sampler(ContextDistribution dist) {
    return ContextSource(std::move(dist), {});
  }
  static ContextSource Known(std::vector<Context> sequence) {
    return ContextSource(std::nullopt, std::move(sequence));
  }

  ContextMode mode() const {
    return sampler_ ? ContextMode::kIidSampler : ContextMode::kTransductive;
  }
  const ContextDistribution* sampler() const {
    return sampler_ ? &*sampler_ : nullptr;
  }
  std::span<const Context> sequence() const { return sequence_; }

 private:
  ContextSource(std::optional<ContextDistribution> sampler,
                std::vector<Context> sequence)
      : sampler_(std::move(sampler)), sequence_(std::move(sequence)) {}

  std::optional<ContextDistribution> sampler_;
  std::vector<Context> sequence_;
};

// Draws rho_t for rounds t+1..T. Per future round, in order: the context
// (one Uniform01() in sampler mode, none in transductive mode), Z (one
// Bernoulli(K/L)), then the sign vector (one Bits() word, bit i-1 set means
// eps(i) = +1). Throws std::domain_error if t is outside [0, T].
FutureDraw SampleFuture(int t, const LearnerConfig& config,
                        const ContextSource& source, Rng& rng);

// Scores psi_0..psi_K from K + 1 oracle queries, and
// phi_i = (psi_i - psi_0) / L.
struct OracleScores {
  std::vector<double> psi;  // size K + 1, psi[0] is the zero-vector score
  std::vector<double> phi;  // size K, phi[i - 1] for action i

  static OracleScores FromPsi(std::vector<double> psi, double level);
  int num_actions() const { return static_cast<int>(phi.size()); }
};

// Sum of past estimates per (context, action).
LossTable PastLossTable(std::span<const HistoryRecord> history,
                        int num_contexts, int num_actions);
// Sum of the future terms 2 eps_tau Z_tau per (context, action).
LossTable FutureLossTable(const FutureDraw& rho, int num_contexts);

// psi_i = min_p [ past(p) + L e_i(p(x_t)) + future(p) ], one oracle call
// per i = 0..K. This overload feeds the oracle the literal example
// sequence: past estimates, the single term (x_t, L e_i) (absent for i = 0),
// then (x_tau, 2 eps_tau Z_tau) for every future round.
OracleScores ComputeOracleScores(std::span<const HistoryRecord> history,
                                 Context current, const FutureDraw& rho,
                                 const LearnerConfig& config,
                                 ValueOracle& oracle);
// Same scores from pre-summed past and future totals.
OracleScores ComputeOracleScores(const LossTable& past, const LossTable& future,
                                 Context current, const LearnerConfig& config,
                                 ValueOracle& oracle);

// Rule for mass left over after the sequential fill.
enum class RemainderRule {
  kArgmaxPhi,  // all of it on the largest phi, ties to the lowest action
  kUniform,    // spread evenly over all actions
};

// Sequential capped fill: for i = 1..K, q(i) = min(max(phi_i, 0), m) and
// m -= q(i), starting from m = 1. Leftover m goes by `rule`.
ActionDistribution WaterFill(std::span<const double> phi,
                             RemainderRule rule = RemainderRule::kArgmaxPhi);

// sup over p in the capped domain distributions of
// sum_i p(i) (L q(i) - psi_i) - p(0) psi_0, in closed form
// sum_i (z_i - z_0)^+ / L + z_0. Throws std::domain_error if L < K.
double InnerSupValue(const ActionDistribution& q, const OracleScores& scores,
                     double level);

// (1 - K/L) WaterFill(phi) + 1/L. Every coordinate is at least 1/L.
ActionDistribution MixedStrategy(const OracleScores& scores,
                                 const LearnerConfig& config,
                                 RemainderRule rule = RemainderRule::kArgmaxPhi);

// R((x, c_hat)_{1..t}, rho) = -oracle(past + future) + (T - t) K / L with
// t = history.size(). One oracle call. Throws std::domain_error if rho does
// not cover exactly rounds t+1..T.
double RelaxationValue(std::span<const HistoryRecord> history,
                       const FutureDraw& rho, const LearnerConfig& config,
                       ValueOracle& oracle);

class RelaxationLearner : public BanditLearner {
 public:
  struct Streams {
    Rng future;
    Rng action;
    Rng coin;
  };

  RelaxationLearner(const LearnerConfig& config, ValueOracle& oracle,
                    ContextSource source, Streams streams,
                    RemainderRule rule = RemainderRule::kArgmaxPhi);

  // Plays round t = history().size() + 1. Throws std::domain_error once all
  // T rounds have been played.
  StepOutcome Step(Context x, const CostFeedback& feedback) override;
  std::string name() const override { return "relax"; }

  const LearnerConfig& config() const { return config_; }
  std::span<const HistoryRecord> history() const { return history_; }
  // Scores computed on the most recent step.
  const OracleScores& last_scores() const { return last_scores_; }

 private:
  LearnerConfig config_;
  ValueOracle& oracle_;
  ContextSource source_;
  Streams streams_;
  RemainderRule rule_;
  std::vector<HistoryRecord> history_;
  LossTable past_;
  OracleScores last_scores_;
};

}  // namespace relaxbandit

#endif  // RELAXBANDIT_LEARNER_H_
