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

#ifndef RELAXBANDIT_POLICY_H_
#define RELAXBANDIT_POLICY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "relaxbandit/core.h"
#include "relaxbandit/rng.h"

namespace relaxbandit {

// Finite policy class stored as an explicit N x U action table.
class PolicyClass {
 public:
  // table[p][x] is the action (1..K) that policy p takes on context x.
  // Throws std::domain_error for an empty class and std::invalid_argument
  // for ragged rows or out-of-range actions.
  PolicyClass(int num_actions, int num_contexts,
              const std::vector<std::vector<int>>& table);

  // N tables with i.i.d. uniform entries, redrawn until every action is used
  // by some policy on some context.
  static PolicyClass Random(int num_policies, int num_contexts,
                            int num_actions, Rng& rng);

  // Threshold rules x < theta ? a : b over theta in [0, U] and all action
  // pairs, expanded to a table. (U + 1) * K^2 policies.
  static PolicyClass Thresholds(int num_contexts, int num_actions);

  int size() const { return num_policies_; }
  int num_actions() const { return num_actions_; }
  int num_contexts() const { return num_contexts_; }

  ActionIndex Act(int policy, Context x) const {
    return ActionIndex::FromSlot(slot(policy, x.id));
  }
  // Zero-based action slot, for kernels.
  std::uint16_t slot(int policy, std::uint32_t context) const {
    return slots_[static_cast<std::size_t>(policy) * num_contexts_ + context];
  }
  std::span<const std::uint16_t> slots() const { return slots_; }

 private:
  PolicyClass() = default;

  int num_actions_ = 0;
  int num_contexts_ = 0;
  int num_policies_ = 0;
  std::vector<std::uint16_t> slots_;  // row-major N x U
};

// Dense U x K matrix of accumulated losses. A weighted example sequence is
// summarized exactly by the per-(context, action) totals because every
// policy's cumulative loss only reads those totals.
class LossTable {
 public:
  LossTable(int num_contexts, int num_actions)
      : num_contexts_(num_contexts),
        num_actions_(num_actions),
        cells_(static_cast<std::size_t>(num_contexts) * num_actions, 0.0) {}

  int num_contexts() const { return num_contexts_; }
  int num_actions() const { return num_actions_; }

  double& at(Context x, ActionIndex a) {
    return cells_[static_cast<std::size_t>(x.id) * num_actions_ + a.slot()];
  }
  double at(Context x, ActionIndex a) const {
    return cells_[static_cast<std::size_t>(x.id) * num_actions_ + a.slot()];
  }
  std::span<const double> row(std::uint32_t context) const {
    return std::span<const double>(cells_).subspan(
        static_cast<std::size_t>(context) * num_actions_, num_actions_);
  }
  std::span<const double> cells() const { return cells_; }

  void AddRow(Context x, std::span<const double> loss);
  LossTable& operator+=(const LossTable& other);

 private:
  int num_contexts_;
  int num_actions_;
  std::vector<double> cells_;
};

// One oracle input pair (x, c): a context with a dense K-vector of losses.
struct WeightedExample {
  Context context;
  std::vector<double> loss;
};

}  // namespace relaxbandit

#endif  // RELAXBANDIT_POLICY_H_
