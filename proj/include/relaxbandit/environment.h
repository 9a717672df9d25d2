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

#ifndef RELAXBANDIT_ENVIRONMENT_H_
#define RELAXBANDIT_ENVIRONMENT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relaxbandit/core.h"
#include "relaxbandit/policy.h"
#include "relaxbandit/rng.h"

namespace relaxbandit {

// Distribution over the context universe {0, .., U-1}.
class ContextDistribution {
 public:
  // Throws std::domain_error unless probs is a simplex point (1e-9).
  explicit ContextDistribution(std::vector<double> probs);
  static ContextDistribution Uniform(int num_contexts);
  static ContextDistribution PointMass(int num_contexts, Context x);

  int size() const { return static_cast<int>(probs_.size()); }
  std::span<const double> probs() const { return probs_; }

  // Inverse CDF on one Uniform01() draw.
  Context Sample(Rng& rng) const;
  std::vector<Context> SampleSequence(int length, Rng& rng) const;

 private:
  std::vector<double> probs_;
};

// Oblivious adversary: all T cost vectors are fixed before play starts.
struct CostSchedule {
  std::vector<CostVector> costs;

  int horizon() const { return static_cast<int>(costs.size()); }
  const CostVector& at_round(int t) const { return costs[t - 1]; }
};

enum class AdversaryType { kStochasticGap, kDrifting, kPolicyTargeted };

// Throws std::invalid_argument for unknown names. Accepts "stochastic-gap",
// "drifting" and "policy-targeted".
AdversaryType ParseAdversaryType(std::string_view name);
std::string AdversaryName(AdversaryType type);

struct AdversarySpec {
  AdversaryType type = AdversaryType::kStochasticGap;
  double gap = 0.3;  // cost margin between the favoured action and the rest
  int period = 1;    // rounds per phase for the phased adversaries
};

// Builds the schedule for the realized context sequence `contexts` (one
// entry per round).
//
//  stochastic-gap  One hidden best action for the whole run. Every round
//                  each cost is an independent Bernoulli draw with mean
//                  (1 - gap) / 2 for the best action, (1 + gap) / 2 for the
//                  rest.
//  drifting        Deterministic costs; the cheap action, (1 - gap) / 2,
//                  rotates through the actions once per `period` rounds and
//                  every other action costs (1 + gap) / 2.
//  policy-targeted A hidden target policy's action costs (1 - gap) / 2 on
//                  every round. A decoy policy's action alternates between
//                  (1 + gap) / 2 and 1 each `period` rounds while the
//                  remaining actions take the opposite phase, so the target
//                  stays best by at least `gap` per disagreement.
CostSchedule MakeAdversary(const AdversarySpec& spec,
                           const PolicyClass& policies,
                           std::span<const Context> contexts, Rng& rng);

}  // namespace relaxbandit

#endif  // RELAXBANDIT_ENVIRONMENT_H_
