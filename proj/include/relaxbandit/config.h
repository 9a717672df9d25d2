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

// Experiment configuration and its JSON form:
//
//   {
//     "K": 5, "T": 2000, "L": "auto" | 13.5,
//     "learner": "relax" | "exp4" | "uniform",
//     "policyClass": {"type": "table", "seed": 7, "N": 50, "U": 10, "K": 5}
//                  | {"type": "explicit", "table": [[1, 2, ...], ...]},
//     "environment": {
//       "context": {"U": 10, "probs": [...] | "uniform", "seed": 3},
//       "adversary": {"type": "stochastic-gap", "delta": 0.3,
//                     "period": 200, "seed": 11},
//       "transductive": false
//     },
//     "reps": 20, "seed": 1,
//     "exp4": {"gamma_scale": 1.0}          (optional)
//   }

#ifndef RELAXBANDIT_CONFIG_H_
#define RELAXBANDIT_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "relaxbandit/environment.h"
#include "relaxbandit/policy.h"

namespace relaxbandit {

// Validation failure; what() starts with the offending field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class LearnerKind { kRelax, kExp4, kUniform };

// Throws std::invalid_argument for unknown names.
LearnerKind ParseLearnerKind(std::string_view name);
std::string LearnerName(LearnerKind kind);

struct PolicyClassSpec {
  enum class Kind { kTable, kExplicit };
  Kind kind = Kind::kTable;
  std::uint64_t seed = 0;
  int num_policies = 0;
  int num_contexts = 0;
  int num_actions = 0;
  std::vector<std::vector<int>> table;  // explicit classes only

  PolicyClass Build() const;
};

struct ContextSpec {
  int num_contexts = 1;
  std::vector<double> probs;          // empty means uniform
  std::optional<std::uint64_t> seed;  // falls back to the master seed

  ContextDistribution Distribution() const;
};

struct EnvironmentSpec {
  ContextSpec context;
  AdversarySpec adversary;
  std::optional<std::uint64_t> adversary_seed;
  bool transductive = false;
};

struct ExperimentConfig {
  int num_actions = 2;
  int horizon = 1;
  std::optional<double> level;  // nullopt means tuned from K, T, N
  LearnerKind learner = LearnerKind::kRelax;
  PolicyClassSpec policy_class;
  EnvironmentSpec environment;
  int reps = 1;
  std::uint64_t seed = 0;
  double exp4_gamma_scale = 1.0;

  // Cross-field checks. Throws ConfigError.
  void Validate() const;
};

ExperimentConfig ParseConfig(const nlohmann::json& j);
// Reads and parses a JSON file. Throws ConfigError (field "config") for I/O
// and syntax errors.
ExperimentConfig LoadConfig(const std::string& path);
// Canonical JSON echo of a parsed config.
nlohmann::json ToJson(const ExperimentConfig& config);

}  // namespace relaxbandit

#endif  // RELAXBANDIT_CONFIG_H_
