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

#ifndef RELAXBANDIT_ORACLE_H_
#define RELAXBANDIT_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <span>

#include "relaxbandit/core.h"
#include "relaxbandit/kernels.h"
#include "relaxbandit/policy.h"

namespace relaxbandit {

// Number of value-oracle invocations. Concurrent increments are not lost.
class OracleStats {
 public:
  void Record() { calls_.fetch_add(1, std::memory_order_relaxed); }
  std::int64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::int64_t> calls_{0};
};

// Offline value oracle over a finite policy class: given weighted examples
// (x, c)_{1..n} it returns min_p sum_i c_i(p(x_i)) and nothing else. Each
// Value() call counts as exactly one oracle access.
class ValueOracle {
 public:
  explicit ValueOracle(const PolicyClass& policies,
                       Execution exec = Execution::kSerial)
      : policies_(policies), exec_(exec) {}

  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  double Value(std::span<const WeightedExample> examples);
  // Same query with the examples already summed per (context, action).
  double Value(const LossTable& totals);

  const PolicyClass& policies() const { return policies_; }
  const OracleStats& stats() const { return stats_; }
  std::int64_t calls() const { return stats_.calls(); }

 private:
  const PolicyClass& policies_;
  Execution exec_;
  OracleStats stats_;
};

// Comparator term min_p sum_t costs[t](p(x_t)) by direct enumeration. This
// is harness-side ground truth and does not touch any oracle counter.
// Throws std::domain_error on a length mismatch.
double BestPolicyLoss(const PolicyClass& policies,
                      std::span<const Context> contexts,
                      std::span<const CostVector> costs);

}  // namespace relaxbandit

#endif  // RELAXBANDIT_ORACLE_H_
