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

#include "relaxbandit/core.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace relaxbandit {

CostVector::CostVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("CostVector: empty");
  for (double c : entries_) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw std::domain_error("CostVector: entry " + std::to_string(c) +
                              " outside [0, 1]");
    }
  }
}

ActionDistribution::ActionDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("ActionDistribution: empty");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::domain_error("ActionDistribution: negative or non-finite "
                              "probability " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw std::domain_error("ActionDistribution: probabilities sum to " +
                            std::to_string(sum));
  }
}

ActionDistribution ActionDistribution::Normalized(std::vector<double> weights) {
  double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(sum > 0.0)) {
    throw std::domain_error("ActionDistribution: weights have no mass");
  }
  for (double& w : weights) w /= sum;
  return ActionDistribution(std::move(weights));
}

ActionDistribution ActionDistribution::Uniform(int num_actions) {
  if (num_actions < 1) {
    throw std::invalid_argument("ActionDistribution: need at least 1 action");
  }
  return ActionDistribution(
      std::vector<double>(num_actions, 1.0 / num_actions));
}

double ActionDistribution::min() const {
  return *std::min_element(probs_.begin(), probs_.end());
}

double ActionDistribution::Dot(const CostVector& costs) const {
  if (costs.num_actions() != num_actions()) {
    throw std::invalid_argument("ActionDistribution::Dot: size mismatch");
  }
  double v = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    v += probs_[i] * costs.entries()[i];
  }
  return v;
}

ActionIndex ActionDistribution::Sample(Rng& rng) const {
  const double u = rng.Uniform01();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] <= 0.0) continue;
    last_positive = i;
    cumulative += probs_[i];
    if (u < cumulative) return ActionIndex::FromSlot(i);
  }
  // Rounding left u above the final cumulative sum.
  return ActionIndex::FromSlot(last_positive);
}

std::vector<double> EstimatedCost::Dense(int num_actions) const {
  std::vector<double> v(num_actions, 0.0);
  if (coordinate_ > 0) v[coordinate_ - 1] = scale_;
  return v;
}

void FutureDraw::Validate(double level) const {
  const std::size_t n = contexts.size();
  if (zvals.size() != n ||
      signs.size() != n * static_cast<std::size_t>(num_actions)) {
    throw std::logic_error("FutureDraw: list lengths disagree");
  }
  for (double z : zvals) {
    if (z != 0.0 && z != level) {
      throw std::logic_error("FutureDraw: Z outside {0, L}");
    }
  }
  for (std::int8_t s : signs) {
    if (s != 1 && s != -1) {
      throw std::logic_error("FutureDraw: sign outside {-1, +1}");
    }
  }
}

}  // namespace relaxbandit
