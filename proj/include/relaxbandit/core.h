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

// Value types shared by the learners, the oracle and the harness.

#ifndef RELAXBANDIT_CORE_H_
#define RELAXBANDIT_CORE_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "relaxbandit/rng.h"

namespace relaxbandit {

inline constexpr double kSimplexTolerance = 1e-9;

// Opaque context identifier into a finite universe {0, .., U-1}.
struct Context {
  std::uint32_t id = 0;
  auto operator<=>(const Context&) const = default;
};

// Action in [1..K]. The value 0 is reserved for the zero element of the
// discretized cost domain and never names a played action.
struct ActionIndex {
  int value = 0;

  // Zero-based position in K-length arrays.
  std::size_t slot() const { return static_cast<std::size_t>(value - 1); }
  static ActionIndex FromSlot(std::size_t slot) {
    return ActionIndex{static_cast<int>(slot) + 1};
  }
  auto operator<=>(const ActionIndex&) const = default;
};

// Per-action losses for one round, each in [0, 1].
class CostVector {
 public:
  explicit CostVector(std::vector<double> entries);

  int num_actions() const { return static_cast<int>(entries_.size()); }
  double operator[](ActionIndex a) const { return entries_[a.slot()]; }
  std::span<const double> entries() const { return entries_; }

 private:
  std::vector<double> entries_;
};

// Probability vector over K actions. Validated at construction: entries are
// non-negative and sum to one within kSimplexTolerance.
class ActionDistribution {
 public:
  explicit ActionDistribution(std::vector<double> probs);

  // Rescales non-negative weights to sum to one before validating.
  static ActionDistribution Normalized(std::vector<double> weights);
  static ActionDistribution Uniform(int num_actions);

  int num_actions() const { return static_cast<int>(probs_.size()); }
  double operator[](ActionIndex a) const { return probs_[a.slot()]; }
  std::span<const double> probs() const { return probs_; }
  double min() const;

  // Expected cost q . c.
  double Dot(const CostVector& costs) const;

  // Inverse-CDF draw using exactly one Uniform01() from `rng`. Never returns
  // a zero-probability action.
  ActionIndex Sample(Rng& rng) const;

 private:
  std::vector<double> probs_;
};

// Discretized importance-weighted cost estimate: either the zero vector or
// scale * e_coordinate.
class EstimatedCost {
 public:
  static EstimatedCost Zero(double scale) { return EstimatedCost(scale, 0); }
  static EstimatedCost Basis(double scale, ActionIndex a) {
    return EstimatedCost(scale, a.value);
  }

  double scale() const { return scale_; }
  bool is_zero() const { return coordinate_ == 0; }
  // 0 for the zero vector, otherwise the action carrying the mass.
  int coordinate() const { return coordinate_; }

  double operator[](ActionIndex a) const {
    return a.value == coordinate_ ? scale_ : 0.0;
  }
  std::vector<double> Dense(int num_actions) const;

 private:
  EstimatedCost(double scale, int coordinate)
      : scale_(scale), coordinate_(coordinate) {}

  double scale_;
  int coordinate_;
};

// Sampled future (x, eps, Z)_{t+1..T} used by the randomized relaxation.
struct FutureDraw {
  int num_actions = 0;
  std::vector<Context> contexts;
  // Row-major (T - t) x K matrix of +/-1 entries.
  std::vector<std::int8_t> signs;
  // Each entry is 0 or the discretization level L.
  std::vector<double> zvals;

  std::size_t size() const { return contexts.size(); }
  int sign(std::size_t round, ActionIndex a) const {
    return signs[round * static_cast<std::size_t>(num_actions) + a.slot()];
  }
  // Throws std::logic_error if the lists disagree or hold invalid values.
  void Validate(double level) const;
};

// What the learner retains from one round of play.
struct HistoryRecord {
  Context context;
  ActionDistribution played_dist;
  ActionIndex played_action;
  double observed_cost = 0.0;
  EstimatedCost estimate;
};

}  // namespace relaxbandit

#endif  // RELAXBANDIT_CORE_H_
