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

#include "relaxbandit/policy.h"

#include <limits>
#include <stdexcept>
#include <string>

namespace relaxbandit {

PolicyClass::PolicyClass(int num_actions, int num_contexts,
                         const std::vector<std::vector<int>>& table)
    : num_actions_(num_actions),
      num_contexts_(num_contexts),
      num_policies_(static_cast<int>(table.size())) {
  if (table.empty()) throw std::domain_error("PolicyClass: no policies");
  if (num_actions < 1 ||
      num_actions > std::numeric_limits<std::uint16_t>::max()) {
    throw std::invalid_argument("PolicyClass: bad action count");
  }
  if (num_contexts < 1) {
    throw std::invalid_argument("PolicyClass: need at least one context");
  }
  slots_.reserve(table.size() * num_contexts);
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (static_cast<int>(table[p].size()) != num_contexts) {
      throw std::invalid_argument("PolicyClass: policy " + std::to_string(p) +
                                  " has " + std::to_string(table[p].size()) +
                                  " entries, expected " +
                                  std::to_string(num_contexts));
    }
    for (int a : table[p]) {
      if (a < 1 || a > num_actions) {
        throw std::invalid_argument("PolicyClass: policy " +
                                    std::to_string(p) + " maps to action " +
                                    std::to_string(a));
      }
      slots_.push_back(static_cast<std::uint16_t>(a - 1));
    }
  }
}

PolicyClass PolicyClass::Random(int num_policies, int num_contexts,
                                int num_actions, Rng& rng) {
  if (num_policies < 1) throw std::domain_error("PolicyClass: no policies");
  if (num_policies * num_contexts < num_actions) {
    throw std::invalid_argument(
        "PolicyClass::Random: N * U < K, cannot cover every action");
  }
  std::vector<std::vector<int>> table(num_policies,
                                      std::vector<int>(num_contexts));
  for (;;) {
    std::vector<bool> used(num_actions, false);
    for (auto& row : table) {
      for (int& a : row) {
        a = static_cast<int>(rng.Index(num_actions)) + 1;
        used[a - 1] = true;
      }
    }
    bool covered = true;
    for (bool u : used) covered = covered && u;
    if (covered) break;
  }
  return PolicyClass(num_actions, num_contexts, table);
}

PolicyClass PolicyClass::Thresholds(int num_contexts, int num_actions) {
  std::vector<std::vector<int>> table;
  for (int theta = 0; theta <= num_contexts; ++theta) {
    for (int below = 1; below <= num_actions; ++below) {
      for (int above = 1; above <= num_actions; ++above) {
        std::vector<int> row(num_contexts);
        for (int x = 0; x < num_contexts; ++x) {
          row[x] = x < theta ? below : above;
        }
        table.push_back(std::move(row));
      }
    }
  }
  PolicyClass policies(num_actions, num_contexts, table);
  // Expanded table must agree with the parametric rule everywhere.
  int p = 0;
  for (int theta = 0; theta <= num_contexts; ++theta) {
    for (int below = 1; below <= num_actions; ++below) {
      for (int above = 1; above <= num_actions; ++above, ++p) {
        for (int x = 0; x < num_contexts; ++x) {
          const int rule = x < theta ? below : above;
          if (policies.Act(p, Context{static_cast<std::uint32_t>(x)}).value !=
              rule) {
            throw std::logic_error("PolicyClass::Thresholds: table mismatch");
          }
        }
      }
    }
  }
  return policies;
}

void LossTable::AddRow(Context x, std::span<const double> loss) {
  if (static_cast<int>(loss.size()) != num_actions_) {
    throw std::invalid_argument("LossTable: loss vector has wrong length");
  }
  if (static_cast<int>(x.id) >= num_contexts_) {
    throw std::out_of_range("LossTable: context " + std::to_string(x.id) +
                            " outside universe");
  }
  double* row = &cells_[static_cast<std::size_t>(x.id) * num_actions_];
  for (int i = 0; i < num_actions_; ++i) row[i] += loss[i];
}

LossTable& LossTable::operator+=(const LossTable& other) {
  if (other.num_contexts_ != num_contexts_ ||
      other.num_actions_ != num_actions_) {
    throw std::invalid_argument("LossTable: shape mismatch");
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
  return *this;
}

}  // namespace relaxbandit
