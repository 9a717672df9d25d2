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

#ifndef RELAXBANDIT_ESTIMATOR_H_
#define RELAXBANDIT_ESTIMATOR_H_

#include "relaxbandit/core.h"
#include "relaxbandit/rng.h"

namespace relaxbandit {

// Slack allowed below the 1/L exploration floor before the coin is rejected.
inline constexpr double kFloorTolerance = 1e-12;

// Success probability cost / (level * prob) of the estimator coin. Throws
// std::domain_error if cost is outside [0, 1] or prob < 1/level - 1e-12.
double CoinProbability(double cost, double prob, double level);

// Draws the discretization coin X: 1 with probability cost / (level * prob).
// Consumes exactly one Uniform01() from `rng`.
int DrawEstimatorCoin(double cost, double prob, double level, Rng& rng);

// level * coin * e_played.
EstimatedCost BuildEstimate(ActionIndex played, int coin, double level);

}  // namespace relaxbandit

#endif  // RELAXBANDIT_ESTIMATOR_H_
