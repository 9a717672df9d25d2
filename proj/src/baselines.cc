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

#include "relaxbandit/baselines.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relaxbandit {

Exp4Learner::Exp4Learner(const PolicyClass& policies, int horizon,
                         Rng action_rng, double gamma_scale)
    : policies_(policies),
      action_rng_(std::move(action_rng)),
      log_weights_(policies.size(), 0.0) {
  if (horizon < 1) throw std::domain_error("Exp4: T must be >= 1");
  if (!(gamma_scale > 0.0)) {
    throw std::domain_error("Exp4: gamma scale must be positive");
  }
  const double k = policies.num_actions();
  const double log_n = std::log(static_cast<double>(policies.size()));
  gamma_ = std::min(1.0, gamma_scale * std::sqrt(k * log_n / (horizon * k)));
  eta_ = gamma_ / k;
}

ActionDistribution Exp4Learner::Distribution(Context x) const {
  const int k = policies_.num_actions();
  std::vector<double> profile(k, 0.0);
  double total = 0.0;
  for (int p = 0; p < policies_.size(); ++p) {
    const double w = std::exp(log_weights_[p]);
    profile[policies_.slot(p, x.id)] += w;
    total += w;
  }
  for (double& v : profile) v = (1.0 - gamma_) * v / total + gamma_ / k;
  return ActionDistribution::Normalized(std::move(profile));
}

StepOutcome Exp4Learner::Step(Context x, const CostFeedback& feedback) {
  ActionDistribution q = Distribution(x);
  const ActionIndex played = q.Sample(action_rng_);
  const double cost = feedback(played);
  const double weighted = cost / q[played];
  double top = -INFINITY;
  for (int p = 0; p < policies_.size(); ++p) {
    if (policies_.Act(p, x) == played) log_weights_[p] -= eta_ * weighted;
    top = std::max(top, log_weights_[p]);
  }
  for (double& lw : log_weights_) lw -= top;
  return StepOutcome{std::move(q), played, cost, 0.0};
}

UniformLearner::UniformLearner(int num_actions, Rng action_rng)
    : uniform_(ActionDistribution::Uniform(num_actions)),
      action_rng_(std::move(action_rng)) {}

StepOutcome UniformLearner::Step(Context, const CostFeedback& feedback) {
  const ActionIndex played = uniform_.Sample(action_rng_);
  return StepOutcome{uniform_, played, feedback(played), 0.0};
}

StepOutcome UniformStep(int num_actions, Rng& rng) {
  ActionDistribution q = ActionDistribution::Uniform(num_actions);
  const ActionIndex played = q.Sample(rng);
  return StepOutcome{std::move(q), played, 0.0, 0.0};
}

}  // namespace relaxbandit
