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

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version; both produce bit-identical results because the per-item
// arithmetic is the same and the reductions are exact (min) or ordered.

#ifndef RELAXBANDIT_KERNELS_H_
#define RELAXBANDIT_KERNELS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "relaxbandit/core.h"
#include "relaxbandit/policy.h"

namespace relaxbandit {

enum class Execution { kSerial, kParallel };

namespace kernels {

// min over policies p of sum_x table[x][p(x)].
double MinPolicyLossSerial(const PolicyClass& policies, const LossTable& table);
double MinPolicyLossParallel(const PolicyClass& policies,
                             const LossTable& table);

inline double MinPolicyLoss(const PolicyClass& policies, const LossTable& table,
                            Execution exec) {
  return exec == Execution::kParallel ? MinPolicyLossParallel(policies, table)
                                      : MinPolicyLossSerial(policies, table);
}

// Per-policy cumulative loss sum_t costs[t][p(x_t)], summed round by round.
// Reference for the aggregated path above and for prefix comparators.
std::vector<double> PolicyLossesSerial(const PolicyClass& policies,
                                       std::span<const Context> contexts,
                                       std::span<const CostVector> costs);
std::vector<double> PolicyLossesParallel(const PolicyClass& policies,
                                         std::span<const Context> contexts,
                                         std::span<const CostVector> costs);

// Monte Carlo samples of sup_p sum_t eps_t(p(x_t)) * Z_t, where Z_t is
// `level` with probability `level_prob` and 0 otherwise. Sample s uses its
// own stream Rng::ForStream(seed, s, Stream::kVerify), so the result does
// not depend on the thread count.
std::vector<double> RademacherSupSamplesSerial(
    const PolicyClass& policies, std::span<const Context> contexts,
    double level, double level_prob, int samples, std::uint64_t seed);
std::vector<double> RademacherSupSamplesParallel(
    const PolicyClass& policies, std::span<const Context> contexts,
    double level, double level_prob, int samples, std::uint64_t seed);

}  // namespace kernels
}  // namespace relaxbandit

#endif  // RELAXBANDIT_KERNELS_H_
