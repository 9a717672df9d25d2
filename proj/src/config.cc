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

#include "relaxbandit/config.h"

#include <fstream>

#include "relaxbandit/rng.h"

namespace relaxbandit {
namespace {

using nlohmann::json;

const json& Require(const json& obj, const std::string& key,
                    const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ConfigError(path.empty() ? key : path + "." + key, "missing");
  }
  return *it;
}

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

int GetInt(const json& obj, const std::string& key, const std::string& path,
           int min_value) {
  const json& v = Require(obj, key, path);
  if (!v.is_number_integer()) {
    throw ConfigError(Join(path, key), "expected an integer");
  }
  const auto value = v.get<long long>();
  if (value < min_value || value > 1'000'000'000) {
    throw ConfigError(Join(path, key),
                      "must be >= " + std::to_string(min_value) + ", got " +
                          std::to_string(value));
  }
  return static_cast<int>(value);
}

std::uint64_t GetSeed(const json& v, const std::string& field) {
  if (!v.is_number_integer() ||
      (!v.is_number_unsigned() && v.get<long long>() < 0)) {
    throw ConfigError(field, "expected a non-negative integer seed");
  }
  return v.get<std::uint64_t>();
}

std::optional<std::uint64_t> OptionalSeed(const json& obj,
                                          const std::string& path) {
  auto it = obj.find("seed");
  if (it == obj.end()) return std::nullopt;
  return GetSeed(*it, Join(path, "seed"));
}

double GetNumber(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "expected a number");
  return v.get<double>();
}

PolicyClassSpec ParsePolicyClass(const json& j) {
  const std::string path = "policyClass";
  PolicyClassSpec spec;
  const json& type = Require(j, "type", path);
  if (type == "table") {
    spec.kind = PolicyClassSpec::Kind::kTable;
    spec.seed = GetSeed(Require(j, "seed", path), path + ".seed");
    spec.num_policies = GetInt(j, "N", path, 1);
    spec.num_contexts = GetInt(j, "U", path, 1);
    spec.num_actions = GetInt(j, "K", path, 2);
  } else if (type == "explicit") {
    spec.kind = PolicyClassSpec::Kind::kExplicit;
    const json& table = Require(j, "table", path);
    if (!table.is_array() || table.empty()) {
      throw ConfigError(path + ".table", "expected a non-empty array of rows");
    }
    for (std::size_t p = 0; p < table.size(); ++p) {
      const std::string row_path = path + ".table[" + std::to_string(p) + "]";
      if (!table[p].is_array() || table[p].empty()) {
        throw ConfigError(row_path, "expected a non-empty array of actions");
      }
      std::vector<int> row;
      for (const json& a : table[p]) {
        if (!a.is_number_integer()) {
          throw ConfigError(row_path, "actions must be integers");
        }
        row.push_back(a.get<int>());
      }
      if (!spec.table.empty() && row.size() != spec.table.front().size()) {
        throw ConfigError(row_path, "all rows must have one action per context");
      }
      spec.table.push_back(std::move(row));
    }
    spec.num_policies = static_cast<int>(spec.table.size());
    spec.num_contexts = static_cast<int>(spec.table.front().size());
  } else {
    throw ConfigError(path + ".type",
                      "expected \"table\" or \"explicit\", got " + type.dump());
  }
  return spec;
}

ContextSpec ParseContext(const json& j) {
  const std::string path = "environment.context";
  ContextSpec spec;
  spec.num_contexts = GetInt(j, "U", path, 1);
  auto probs = j.find("probs");
  if (probs != j.end() && !(probs->is_string() && *probs == "uniform")) {
    if (!probs->is_array()) {
      throw ConfigError(path + ".probs", "expected an array or \"uniform\"");
    }
    for (const json& p : *probs) {
      spec.probs.push_back(GetNumber(p, path + ".probs"));
    }
  }
  spec.seed = OptionalSeed(j, path);
  return spec;
}

EnvironmentSpec ParseEnvironment(const json& j) {
  EnvironmentSpec spec;
  spec.context = ParseContext(Require(j, "context", "environment"));
  const json& adv = Require(j, "adversary", "environment");
  const std::string path = "environment.adversary";
  const json& type = Require(adv, "type", path);
  if (!type.is_string()) throw ConfigError(path + ".type", "expected a string");
  try {
    spec.adversary.type = ParseAdversaryType(type.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path + ".type", e.what());
  }
  if (auto it = adv.find("delta"); it != adv.end()) {
    spec.adversary.gap = GetNumber(*it, path + ".delta");
  }
  if (auto it = adv.find("period"); it != adv.end()) {
    spec.adversary.period = GetInt(adv, "period", path, 1);
  }
  spec.adversary_seed = OptionalSeed(adv, path);
  if (auto it = j.find("transductive"); it != j.end()) {
    if (!it->is_boolean()) {
      throw ConfigError("environment.transductive", "expected a boolean");
    }
    spec.transductive = it->get<bool>();
  }
  return spec;
}

}  // namespace

LearnerKind ParseLearnerKind(std::string_view name) {
  if (name == "relax") return LearnerKind::kRelax;
  if (name == "exp4") return LearnerKind::kExp4;
  if (name == "uniform") return LearnerKind::kUniform;
  throw std::invalid_argument("unknown learner '" + std::string(name) + "'");
}

std::string LearnerName(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::kRelax:
      return "relax";
    case LearnerKind::kExp4:
      return "exp4";
    case LearnerKind::kUniform:
      return "uniform";
  }
  return "unknown";
}

PolicyClass PolicyClassSpec::Build() const {
  if (kind == Kind::kExplicit) {
    return PolicyClass(num_actions, num_contexts, table);
  }
  Rng rng = Rng::ForStream(seed, 0, Stream::kPolicies);
  return PolicyClass::Random(num_policies, num_contexts, num_actions, rng);
}

ContextDistribution ContextSpec::Distribution() const {
  if (probs.empty()) return ContextDistribution::Uniform(num_contexts);
  return ContextDistribution(probs);
}

void ExperimentConfig::Validate() const {
  if (num_actions < 2 || num_actions > 64) {
    throw ConfigError("K", "must lie in [2, 64]");
  }
  if (horizon < 1) throw ConfigError("T", "must be >= 1");
  if (level && !(*level >= num_actions)) {
    throw ConfigError("L", "must be >= K");
  }
  if (reps < 1) throw ConfigError("reps", "must be >= 1");
  if (policy_class.num_actions != num_actions) {
    throw ConfigError(policy_class.kind == PolicyClassSpec::Kind::kTable
                          ? "policyClass.K"
                          : "policyClass.table",
                      "policy class uses K = " +
                          std::to_string(policy_class.num_actions) +
                          " but the experiment has K = " +
                          std::to_string(num_actions));
  }
  if (policy_class.num_contexts != environment.context.num_contexts) {
    throw ConfigError("environment.context.U",
                      "context universe size " +
                          std::to_string(environment.context.num_contexts) +
                          " differs from the policy class (" +
                          std::to_string(policy_class.num_contexts) + ")");
  }
  if (!environment.context.probs.empty() &&
      static_cast<int>(environment.context.probs.size()) !=
          environment.context.num_contexts) {
    throw ConfigError("environment.context.probs", "expected U entries");
  }
  try {
    environment.context.Distribution();
  } catch (const std::domain_error& e) {
    throw ConfigError("environment.context.probs", e.what());
  }
  if (!(environment.adversary.gap >= 0.0 && environment.adversary.gap <= 1.0)) {
    throw ConfigError("environment.adversary.delta", "must lie in [0, 1]");
  }
  if (policy_class.kind == PolicyClassSpec::Kind::kTable &&
      policy_class.num_policies * policy_class.num_contexts < num_actions) {
    throw ConfigError("policyClass.N", "N * U must be at least K");
  }
  if (!(exp4_gamma_scale > 0.0)) {
    throw ConfigError("exp4.gamma_scale", "must be positive");
  }
}

ExperimentConfig ParseConfig(const json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  ExperimentConfig config;
  config.num_actions = GetInt(j, "K", "", 2);
  config.horizon = GetInt(j, "T", "", 1);
  const json& level = Require(j, "L", "");
  if (level.is_string()) {
    if (level != "auto") {
      throw ConfigError("L", "expected a number or \"auto\"");
    }
  } else {
    config.level = GetNumber(level, "L");
  }
  const json& learner = Require(j, "learner", "");
  if (!learner.is_string()) throw ConfigError("learner", "expected a string");
  try {
    config.learner = ParseLearnerKind(learner.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("learner", e.what());
  }
  config.policy_class = ParsePolicyClass(Require(j, "policyClass", ""));
  if (config.policy_class.kind == PolicyClassSpec::Kind::kExplicit) {
    config.policy_class.num_actions = config.num_actions;
  }
  config.environment = ParseEnvironment(Require(j, "environment", ""));
  config.reps = GetInt(j, "reps", "", 1);
  config.seed = GetSeed(Require(j, "seed", ""), "seed");
  if (auto it = j.find("exp4"); it != j.end()) {
    if (auto g = it->find("gamma_scale"); g != it->end()) {
      config.exp4_gamma_scale = GetNumber(*g, "exp4.gamma_scale");
    }
  }
  config.Validate();
  return config;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return ParseConfig(j);
}

json ToJson(const ExperimentConfig& config) {
  json pc;
  if (config.policy_class.kind == PolicyClassSpec::Kind::kTable) {
    pc = {{"type", "table"},
          {"seed", config.policy_class.seed},
          {"N", config.policy_class.num_policies},
          {"U", config.policy_class.num_contexts},
          {"K", config.policy_class.num_actions}};
  } else {
    pc = {{"type", "explicit"}, {"table", config.policy_class.table}};
  }
  json context = {{"U", config.environment.context.num_contexts}};
  if (config.environment.context.probs.empty()) {
    context["probs"] = "uniform";
  } else {
    context["probs"] = config.environment.context.probs;
  }
  if (config.environment.context.seed) {
    context["seed"] = *config.environment.context.seed;
  }
  json adversary = {
      {"type", AdversaryName(config.environment.adversary.type)},
      {"delta", config.environment.adversary.gap},
      {"period", config.environment.adversary.period}};
  if (config.environment.adversary_seed) {
    adversary["seed"] = *config.environment.adversary_seed;
  }
  json out = {
      {"K", config.num_actions},
      {"T", config.horizon},
      {"learner", LearnerName(config.learner)},
      {"policyClass", pc},
      {"environment",
       {{"context", context},
        {"adversary", adversary},
        {"transductive", config.environment.transductive}}},
      {"reps", config.reps},
      {"seed", config.seed},
      {"exp4", {{"gamma_scale", config.exp4_gamma_scale}}}};
  if (config.level) {
    out["L"] = *config.level;
  } else {
    out["L"] = "auto";
  }
  return out;
}

}  // namespace relaxbandit
