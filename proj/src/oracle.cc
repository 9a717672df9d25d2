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

#include "relaxbandit/oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relaxbandit {

double ValueOracle::Value(std::span<const WeightedExample> examples) {
  LossTable totals(policies_.num_contexts(), policies_.num_actions());
  for (const WeightedExample& ex : examples) {
    for (double v : ex.loss) {
      if (!std::isfinite(v)) {
        throw std::domain_error("ValueOracle: non-finite loss");
      }
    }
    totals.AddRow(ex.context, ex.loss);
  }
  return Value(totals);
}

double ValueOracle::Value(const LossTable& totals) {
  stats_.Record();
  return kernels::MinPolicyLoss(policies_, totals, exec_);
}

double BestPolicyLoss(const PolicyClass& policies,
                      std::span<const Context> contexts,
                      std::span<const CostVector> costs) {
  if (contexts.empty() && costs.empty()) return 0.0;
  std::vector<double> totals =
      kernels::PolicyLossesSerial(policies, contexts, costs);
  return *std::min_element(totals.begin(), totals.end());
}

}  // namespace relaxbandit
