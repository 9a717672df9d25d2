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

#ifndef RELAXBANDIT_BANDIT_LEARNER_H_
#define RELAXBANDIT_BANDIT_LEARNER_H_

#include <functional>
#include <string>

#include "relaxbandit/core.h"

namespace relaxbandit {

// Reveals the cost of the played action only.
using CostFeedback = std::function<double(ActionIndex)>;

struct StepOutcome {
  ActionDistribution played_dist;
  ActionIndex action;
  double observed_cost = 0.0;
  // Success probability of the estimator coin, or 0 for learners without
  // one.
  double coin_probability = 0.0;
};

// A learner that plays one round at a time against bandit feedback.
class BanditLearner {
 public:
  virtual ~BanditLearner() = default;
  virtual StepOutcome Step(Context x, const CostFeedback& feedback) = 0;
  virtual std::string name() const = 0;
};

}  // namespace relaxbandit

#endif  // RELAXBANDIT_BANDIT_LEARNER_H_
