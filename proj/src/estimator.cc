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

#include "relaxbandit/estimator.h"

#include <stdexcept>
#include <string>

namespace relaxbandit {

double CoinProbability(double cost, double prob, double level) {
  if (!(cost >= 0.0 && cost <= 1.0)) {
    throw std::domain_error("estimator coin: cost " + std::to_string(cost) +
                            " outside [0, 1]");
  }
  if (!(prob >= 1.0 / level - kFloorTolerance)) {
    throw std::domain_error("estimator coin: probability " +
                            std::to_string(prob) + " below 1/L = " +
                            std::to_string(1.0 / level));
  }
  return cost / (level * prob);
}

int DrawEstimatorCoin(double cost, double prob, double level, Rng& rng) {
  const double p = CoinProbability(cost, prob, level);
  const double u = rng.Uniform01();
  // p may exceed 1 by a rounding ulp when prob sits on the floor.
  return (u < p || p >= 1.0) ? 1 : 0;
}

EstimatedCost BuildEstimate(ActionIndex played, int coin, double level) {
  return coin ? EstimatedCost::Basis(level, played)
              : EstimatedCost::Zero(level);
}

}  // namespace relaxbandit
