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

#ifndef RELAXBANDIT_BASELINES_H_
#define RELAXBANDIT_BASELINES_H_

#include <span>
#include <string>
#include <vector>

#include "relaxbandit/bandit_learner.h"
#include "relaxbandit/core.h"
#include "relaxbandit/policy.h"
#include "relaxbandit/rng.h"

namespace relaxbandit {

// Exp4 over an explicit policy table, loss version.
//
// Exploration gamma = min(1, scale * sqrt(K ln N / (T K))), learning rate
// eta = gamma / K, so eta times any importance-weighted cost is at most 1.
class Exp4Learner : public BanditLearner {
 public:
  Exp4Learner(const PolicyClass& policies, int horizon, Rng action_rng,
              double gamma_scale = 1.0);

  // Policy-weighted action profile mixed with gamma-uniform.
  ActionDistribution Distribution(Context x) const;

  StepOutcome Step(Context x, const CostFeedback& feedback) override;
  std::string name() const override { return "exp4"; }

  double gamma() const { return gamma_; }
  double learning_rate() const { return eta_; }
  std::span<const double> log_weights() const { return log_weights_; }

 private:
  const PolicyClass& policies_;
  Rng action_rng_;
  double gamma_;
  double eta_;
  // Shifted so the largest entry is 0 after every update.
  std::vector<double> log_weights_;
};

class UniformLearner : public BanditLearner {
 public:
  UniformLearner(int num_actions, Rng action_rng);

  StepOutcome Step(Context x, const CostFeedback& feedback) override;
  std::string name() const override { return "uniform"; }

 private:
  ActionDistribution uniform_;
  Rng action_rng_;
};

// One uniform round: the uniform distribution and an action drawn from it.
StepOutcome UniformStep(int num_actions, Rng& rng);

}  // namespace relaxbandit

#endif  // RELAXBANDIT_BASELINES_H_
