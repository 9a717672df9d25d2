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

#include "relaxbandit/environment.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace relaxbandit {

ContextDistribution::ContextDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::domain_error("ContextDistribution: empty support");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      throw std::domain_error("ContextDistribution: negative probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw std::domain_error("ContextDistribution: probabilities sum to " +
                            std::to_string(sum));
  }
}

ContextDistribution ContextDistribution::Uniform(int num_contexts) {
  if (num_contexts < 1) {
    throw std::domain_error("ContextDistribution: empty support");
  }
  return ContextDistribution(
      std::vector<double>(num_contexts, 1.0 / num_contexts));
}

ContextDistribution ContextDistribution::PointMass(int num_contexts,
                                                   Context x) {
  std::vector<double> probs(num_contexts, 0.0);
  probs.at(x.id) = 1.0;
  return ContextDistribution(std::move(probs));
}

Context ContextDistribution::Sample(Rng& rng) const {
  const double u = rng.Uniform01();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] <= 0.0) continue;
    last_positive = i;
    cumulative += probs_[i];
    if (u < cumulative) return Context{static_cast<std::uint32_t>(i)};
  }
  return Context{static_cast<std::uint32_t>(last_positive)};
}

std::vector<Context> ContextDistribution::SampleSequence(int length,
                                                         Rng& rng) const {
  std::vector<Context> out;
  out.reserve(length);
  for (int t = 0; t < length; ++t) out.push_back(Sample(rng));
  return out;
}

AdversaryType ParseAdversaryType(std::string_view name) {
  if (name == "stochastic-gap") return AdversaryType::kStochasticGap;
  if (name == "drifting") return AdversaryType::kDrifting;
  if (name == "policy-targeted") return AdversaryType::kPolicyTargeted;
  throw std::invalid_argument("unknown adversary '" + std::string(name) +
                              "'");
}

std::string AdversaryName(AdversaryType type) {
  switch (type) {
    case AdversaryType::kStochasticGap:
      return "stochastic-gap";
    case AdversaryType::kDrifting:
      return "drifting";
    case AdversaryType::kPolicyTargeted:
      return "policy-targeted";
  }
  return "unknown";
}

CostSchedule MakeAdversary(const AdversarySpec& spec,
                           const PolicyClass& policies,
                           std::span<const Context> contexts, Rng& rng) {
  if (!(spec.gap >= 0.0 && spec.gap <= 1.0)) {
    throw std::domain_error("adversary gap must lie in [0, 1]");
  }
  if (spec.period < 1) throw std::domain_error("adversary period must be >= 1");
  const int k = policies.num_actions();
  const double cheap = (1.0 - spec.gap) / 2.0;
  const double dear = (1.0 + spec.gap) / 2.0;

  CostSchedule schedule;
  schedule.costs.reserve(contexts.size());
  switch (spec.type) {
    case AdversaryType::kStochasticGap: {
      const std::size_t best = rng.Index(k);
      for (std::size_t t = 0; t < contexts.size(); ++t) {
        std::vector<double> c(k);
        for (int i = 0; i < k; ++i) {
          const double mean = static_cast<std::size_t>(i) == best ? cheap : dear;
          c[i] = rng.Bernoulli(mean) ? 1.0 : 0.0;
        }
        schedule.costs.emplace_back(std::move(c));
      }
      break;
    }
    case AdversaryType::kDrifting: {
      const std::size_t offset = rng.Index(k);
      for (std::size_t t = 0; t < contexts.size(); ++t) {
        const std::size_t phase = t / spec.period;
        const std::size_t best = (offset + phase) % k;
        std::vector<double> c(k, dear);
        c[best] = cheap;
        schedule.costs.emplace_back(std::move(c));
      }
      break;
    }
    case AdversaryType::kPolicyTargeted: {
      const int target = static_cast<int>(rng.Index(policies.size()));
      const int decoy = static_cast<int>(rng.Index(policies.size()));
      for (std::size_t t = 0; t < contexts.size(); ++t) {
        const bool lure = (t / spec.period) % 2 == 0;
        const std::size_t target_slot = policies.slot(target, contexts[t].id);
        const std::size_t decoy_slot = policies.slot(decoy, contexts[t].id);
        std::vector<double> c(k);
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
          if (i == target_slot) {
            c[i] = cheap;
          } else if (i == decoy_slot) {
            c[i] = lure ? dear : 1.0;
          } else {
            c[i] = lure ? 1.0 : dear;
          }
        }
        schedule.costs.emplace_back(std::move(c));
      }
      break;
    }
  }
  return schedule;
}

}  // namespace relaxbandit
