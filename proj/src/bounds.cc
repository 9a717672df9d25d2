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

#include "relaxbandit/bounds.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaxbandit/environment.h"
#include "relaxbandit/rng.h"

namespace relaxbandit {

RegretBound TheoreticalBound(int num_actions, int horizon, double level,
                             int num_policies) {
  if (!(level >= num_actions)) {
    throw std::domain_error("TheoreticalBound: L = " + std::to_string(level) +
                            " is below K = " + std::to_string(num_actions));
  }
  if (num_policies < 2) {
    throw std::domain_error("TheoreticalBound: need N >= 2");
  }
  const double t = horizon;
  const double k = num_actions;
  const double log_n = std::log(static_cast<double>(num_policies));
  return RegretBound{2.0 * std::sqrt(2.0 * t * k * level * log_n),
                     t * k / level};
}

RademacherCheck RademacherBoundCheck(const PolicyClass& policies,
                                     std::span<const Context> contexts,
                                     double level, double level_prob,
                                     int samples, std::uint64_t seed,
                                     Execution exec) {
  if (samples < 2) {
    throw std::invalid_argument("RademacherBoundCheck: need >= 2 samples");
  }
  const std::vector<double> sups =
      exec == Execution::kParallel
          ? kernels::RademacherSupSamplesParallel(policies, contexts, level,
                                                  level_prob, samples, seed)
          : kernels::RademacherSupSamplesSerial(policies, contexts, level,
                                                level_prob, samples, seed);
  double mean = 0.0;
  for (double v : sups) mean += v;
  mean /= samples;
  double ss = 0.0;
  for (double v : sups) ss += (v - mean) * (v - mean);
  const double se = std::sqrt(ss / (samples - 1) / samples);

  const double m = level * level * level_prob;
  const double bound =
      std::sqrt(2.0 * static_cast<double>(contexts.size()) * m *
                std::log(static_cast<double>(policies.size())));
  return RademacherCheck{mean, se, bound};
}

RademacherCheck RademacherBoundCheck(int num_actions, double level,
                                     int horizon, int num_policies,
                                     int num_contexts, int samples,
                                     std::uint64_t seed, Execution exec) {
  Rng policy_rng = Rng::ForStream(seed, 0, Stream::kPolicies);
  const PolicyClass policies = PolicyClass::Random(
      num_policies, num_contexts, num_actions, policy_rng);
  Rng context_rng = Rng::ForStream(seed, 0, Stream::kContexts);
  const std::vector<Context> contexts =
      ContextDistribution::Uniform(num_contexts)
          .SampleSequence(horizon, context_rng);
  return RademacherBoundCheck(policies, contexts, level, num_actions / level,
                              samples, seed, exec);
}

}  // namespace relaxbandit
