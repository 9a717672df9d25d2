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


#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "relaxbandit/bounds.h"
#include "relaxbandit/config.h"
#include "relaxbandit/estimator.h"
#include "relaxbandit/experiment.h"
#include "relaxbandit/learner.h"
#include "relaxbandit/oracle.h"
#include "relaxbandit/output.h"
#include "relaxbandit/verify.h"

namespace relaxbandit {
namespace {

using nlohmann::json;

TEST(BoundTest, Examples) {
  const RegretBound b = TheoreticalBound(2, 100, 2.0, 4);
  EXPECT_DOUBLE_EQ(b.exploration, 100.0);
  EXPECT_DOUBLE_EQ(b.deviation, 2.0 * std::sqrt(2.0 * 100 * 2 * 2 * std::log(4.0)));
  const RegretBound n = TheoreticalBound(4, 1000, 9.0, 10);
  const RegretBound n2 = TheoreticalBound(4, 1000, 9.0, 100);
  EXPECT_NEAR(n2.deviation / n.deviation, std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(n.exploration, n2.exploration);
  EXPECT_THROW(TheoreticalBound(4, 10, 3.0, 10), std::domain_error);
  EXPECT_THROW(TheoreticalBound(4, 10, 4.0, 1), std::domain_error);
}

TEST(RademacherTest, SinglePolicyIsCentred) {
  const PolicyClass pc(2, 1, {{1}});
  const std::vector<Context> x(100, Context{0});
  const RademacherCheck c =
      RademacherBoundCheck(pc, x, 4.0, 0.5, 20000, 1, Execution::kSerial);
  EXPECT_LE(std::abs(c.empirical), 4 * c.std_error);
  EXPECT_EQ(c.bound, 0.0);
}

TEST(RademacherTest, SilentLevelGivesZero) {
  Rng rng(1);
  const PolicyClass pc = PolicyClass::Random(10, 3, 2, rng);
  const std::vector<Context> x(50, Context{1});
  const RademacherCheck c =
      RademacherBoundCheck(pc, x, 4.0, 0.0, 1000, 2, Execution::kSerial);
  EXPECT_EQ(c.empirical, 0.0);
  EXPECT_EQ(c.std_error, 0.0);
}

TEST(RademacherTest, SuiteExampleHolds) {
  const RademacherCheck c = RademacherBoundCheck(2, 4.0, 200, 16, 8, 10000, 3);
  EXPECT_TRUE(c.passed()) << c.empirical << " vs " << c.bound;
  EXPECT_NEAR(c.bound, std::sqrt(2.0 * 200 * 8.0 * std::log(16.0)), 1e-9);
  EXPECT_GT(c.empirical, 0.0);
}

TEST(RademacherTest, SerialAndParallelAgree) {
  const RademacherCheck a =
      RademacherBoundCheck(3, 6.0, 150, 40, 5, 3000, 4, Execution::kSerial);
  const RademacherCheck b =
      RademacherBoundCheck(3, 6.0, 150, 40, 5, 3000, 4, Execution::kParallel);
  EXPECT_EQ(a.empirical, b.empirical);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(BruteForceMinimaxTest, ZeroScores) {
  // With psi = 0 every q gives sum_i q_i = 1.
  const OracleScores s = OracleScores::FromPsi({0.0, 0.0, 0.0}, 2.0);
  EXPECT_NEAR(BruteForceMinimax(s, 2.0, 0.01).value, 1.0, 1e-12);
}

TEST(BruteForceMinimaxTest, FollowsLargeScore) {
  // phi = (1, 0): q = (1, 0) leaves nothing uncovered.
  const OracleScores s = OracleScores::FromPsi({0.0, 4.0, 0.0}, 4.0);
  const MinimaxPoint m = BruteForceMinimax(s, 4.0, 0.01);
  EXPECT_NEAR(m.value, 0.0, 1e-12);
  EXPECT_NEAR(m.q[0], 1.0, 1e-12);
}

// Every future over one or two rounds of a two-context, two-action instance,
// with its probability.
std::vector<std::pair<FutureDraw, double>> EnumerateFutures(
    int rounds, const LearnerConfig& config, const ContextDistribution& dist) {
  const int k = config.num_actions;
  const double zp = k / config.level;
  std::vector<std::pair<FutureDraw, double>> out;
  FutureDraw empty;
  empty.num_actions = k;
  out.push_back({empty, 1.0});
  for (int r = 0; r < rounds; ++r) {
    std::vector<std::pair<FutureDraw, double>> next;
    for (const auto& [rho, p] : out) {
      for (int x = 0; x < dist.size(); ++x) {
        for (int z = 0; z < 2; ++z) {
          const double pz = z ? zp : 1.0 - zp;
          if (pz == 0.0) continue;
          for (int mask = 0; mask < (1 << k); ++mask) {
            FutureDraw d = rho;
            d.contexts.push_back(Context{static_cast<std::uint32_t>(x)});
            d.zvals.push_back(z ? config.level : 0.0);
            for (int i = 0; i < k; ++i) {
              d.signs.push_back((mask >> i) & 1 ? 1 : -1);
            }
            next.push_back({d, p * dist.probs()[x] * pz / (1 << k)});
          }
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

double ExactRelaxation(const std::vector<HistoryRecord>& history,
                       const AdmissibilityInstance& inst, ValueOracle& oracle) {
  const int rounds = inst.config.horizon - static_cast<int>(history.size());
  double total = 0.0;
  for (const auto& [rho, p] :
       EnumerateFutures(rounds, inst.config, inst.contexts)) {
    total += p * RelaxationValue(history, rho, inst.config, oracle);
  }
  return total;
}

TEST(AdmissibilityTest, ExactEnumerationOnTinyInstances) {
  Rng rng(31);
  for (int n = 0; n < 20; ++n) {
    const AdmissibilityInstance inst = RandomTinyInstance(rng);
    const LearnerConfig& c = inst.config;
    const int k = c.num_actions;
    const int t = static_cast<int>(inst.history.size()) + 1;
    ValueOracle oracle(inst.policies);
    const double rhs = ExactRelaxation(inst.history, inst, oracle);

    double lhs = 0.0;
    for (int x = 0; x < inst.contexts.size(); ++x) {
      const Context ctx{static_cast<std::uint32_t>(x)};
      std::vector<double> q_bar(k, 0.0);
      for (const auto& [rho, p] :
           EnumerateFutures(c.horizon - t, c, inst.contexts)) {
        const ActionDistribution q = MixedStrategy(
            ComputeOracleScores(inst.history, ctx, rho, c, oracle), c);
        for (int i = 0; i < k; ++i) q_bar[i] += p * q.probs()[i];
      }
      std::vector<double> rel(k + 1);
      for (int i = 0; i <= k; ++i) {
        std::vector<HistoryRecord> h = inst.history;
        const ActionIndex a{i == 0 ? 1 : i};
        h.push_back({ctx, ActionDistribution::Uniform(k), a, 0.0,
                     BuildEstimate(a, i == 0 ? 0 : 1, c.level)});
        rel[i] = ExactRelaxation(h, inst, oracle);
      }
      // Linear in c, so the sup over [0, 1]^K sits at a vertex.
      double worst = -INFINITY;
      for (const CostVector& cv : CostGrid(k, 1.0)) {
        double v = rel[0];
        for (int i = 0; i < k; ++i) {
          const double ci = cv.entries()[i];
          v += q_bar[i] * ci + ci / c.level * (rel[i + 1] - rel[0]);
        }
        worst = std::max(worst, v);
      }
      lhs += inst.contexts.probs()[x] * worst;
    }
    EXPECT_LE(lhs, rhs + 1e-9) << "instance " << n << " L=" << c.level
                               << " t=" << t;
  }
}

TEST(AdmissibilityTest, MonteCarloCheckPasses) {
  Rng rng(41);
  const std::vector<CostVector> grid = CostGrid(2, 0.5);
  for (int n = 0; n < 4; ++n) {
    AdmissibilityInstance inst = RandomTinyInstance(rng);
    // Alternate between the last round (no future, exact LHS) and the first.
    if (n % 2 == 1) inst.history.clear();
    const AdmissibilityCheck check =
        CheckOneStepAdmissibility(inst, grid, 4000, 50 + n);
    EXPECT_TRUE(check.passed()) << check.lhs << " vs " << check.rhs;
    if (inst.history.empty()) {
      EXPECT_GT(check.lhs_se, 0.0);
    } else if (inst.history.size() + 1 ==
               static_cast<std::size_t>(inst.config.horizon)) {
      EXPECT_EQ(check.lhs_se, 0.0);
    }
  }
}

TEST(CostGridTest, CoversCube) {
  EXPECT_EQ(CostGrid(2, 0.25).size(), 25u);
  EXPECT_EQ(CostGrid(3, 1.0).size(), 8u);
}

json SmallConfigJson() {
  return json::parse(R"({
    "K": 3, "T": 50, "L": "auto", "learner": "relax",
    "policyClass": {"type": "table", "seed": 7, "N": 12, "U": 4, "K": 3},
    "environment": {
      "context": {"U": 4, "probs": "uniform"},
      "adversary": {"type": "stochastic-gap", "delta": 0.3, "period": 10}
    },
    "reps": 3, "seed": 5
  })");
}

TEST(ConfigTest, ParsesAndRoundTrips) {
  const ExperimentConfig c = ParseConfig(SmallConfigJson());
  EXPECT_EQ(c.num_actions, 3);
  EXPECT_EQ(c.horizon, 50);
  EXPECT_FALSE(c.level.has_value());
  EXPECT_EQ(c.environment.adversary.type, AdversaryType::kStochasticGap);
  EXPECT_EQ(c.environment.adversary.period, 10);
  EXPECT_FALSE(c.environment.transductive);
  EXPECT_EQ(ToJson(ParseConfig(ToJson(c))), ToJson(c));
}

void ExpectFieldError(json j, const std::string& field) {
  try {
    ParseConfig(j);
    ADD_FAILURE() << "expected a ConfigError on " << field;
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), field) << e.what();
  }
}

TEST(ConfigTest, FieldLevelErrors) {
  json j = SmallConfigJson();
  j["K"] = 1;
  ExpectFieldError(j, "K");
  j = SmallConfigJson();
  j["L"] = 2.0;
  ExpectFieldError(j, "L");
  j = SmallConfigJson();
  j["L"] = "tuned";
  ExpectFieldError(j, "L");
  j = SmallConfigJson();
  j["learner"] = "epsilon-greedy";
  ExpectFieldError(j, "learner");
  j = SmallConfigJson();
  j["policyClass"]["N"] = 0;
  ExpectFieldError(j, "policyClass.N");
  j = SmallConfigJson();
  j["policyClass"]["K"] = 4;
  ExpectFieldError(j, "policyClass.K");
  j = SmallConfigJson();
  j["environment"]["context"]["U"] = 5;
  ExpectFieldError(j, "environment.context.U");
  j = SmallConfigJson();
  j["environment"]["context"]["probs"] = {0.5, 0.5, 0.5, 0.5};
  ExpectFieldError(j, "environment.context.probs");
  j = SmallConfigJson();
  j["environment"]["adversary"]["delta"] = 1.5;
  ExpectFieldError(j, "environment.adversary.delta");
  j = SmallConfigJson();
  j["environment"]["adversary"]["type"] = "adaptive";
  ExpectFieldError(j, "environment.adversary.type");
  j = SmallConfigJson();
  j["environment"]["transductive"] = "yes";
  ExpectFieldError(j, "environment.transductive");
  j = SmallConfigJson();
  j["seed"] = -3;
  ExpectFieldError(j, "seed");
  j = SmallConfigJson();
  j.erase("reps");
  ExpectFieldError(j, "reps");
}

ExperimentConfig SmallConfig() { return ParseConfig(SmallConfigJson()); }

TEST(ExperimentTest, SingleRoundRegretIsNonNegative) {
  ExperimentConfig c = SmallConfig();
  c.horizon = 1;
  c.level = 3.0;
  // K = 3 policies over one context, each picking a different action.
  c.policy_class.kind = PolicyClassSpec::Kind::kExplicit;
  c.policy_class.table = {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}};
  c.policy_class.num_policies = 3;
  const ExperimentResult r = RunExperiment(c, Execution::kSerial);
  for (const RunResult& run : r.runs) EXPECT_GE(run.final_regret(), 0.0);
}

TEST(ExperimentTest, RegretIdentityAndCallCount) {
  const ExperimentConfig c = SmallConfig();
  const ExperimentResult r = RunExperiment(c, Execution::kSerial);
  ASSERT_EQ(r.runs.size(), 3u);
  for (const RunResult& run : r.runs) {
    EXPECT_NEAR(run.final_regret(),
                run.total_expected_cost - run.comparator_loss, 1e-9);
    EXPECT_EQ(run.oracle_calls, c.horizon * (c.num_actions + 1));
    EXPECT_GE(run.rounds.back().min_prob, 1.0 / r.level - 1e-12);
  }
  EXPECT_EQ(r.total_oracle_calls(), 3 * c.horizon * (c.num_actions + 1));
  EXPECT_LE(r.max_coin_probability(), 1.0 + 1e-12);
}

TEST(ExperimentTest, SerialAndParallelAreBitIdentical) {
  for (LearnerKind kind :
       {LearnerKind::kRelax, LearnerKind::kExp4, LearnerKind::kUniform}) {
    ExperimentConfig c = SmallConfig();
    c.learner = kind;
    c.reps = 5;
    const ExperimentResult a = RunExperiment(c, Execution::kSerial);
    const ExperimentResult b = RunExperiment(c, Execution::kParallel);
    EXPECT_EQ(RegretCsv(a), RegretCsv(b));
    EXPECT_EQ(RealizedCsv(a), RealizedCsv(b));
  }
}

TEST(ExperimentTest, TransductiveModeRuns) {
  ExperimentConfig c = SmallConfig();
  c.environment.transductive = true;
  const ExperimentResult r = RunExperiment(c, Execution::kSerial);
  EXPECT_EQ(r.total_oracle_calls(), 3 * c.horizon * (c.num_actions + 1));
}

TEST(OutputTest, CsvShapeAndSingleReplication) {
  ExperimentConfig c = SmallConfig();
  c.reps = 1;
  const ExperimentResult r = RunExperiment(c, Execution::kSerial);
  std::istringstream csv(RegretCsv(r));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "round,mean_regret,stderr_regret,bound");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_EQ(std::stoi(cells[0]), rows);
    EXPECT_EQ(std::stod(cells[2]), 0.0);
  }
  EXPECT_EQ(rows, c.horizon);

  const json s = SummaryJson(r);
  EXPECT_EQ(s["learner"], "relax");
  EXPECT_EQ(s["replications"].size(), 1u);
  EXPECT_EQ(s["oracle_calls"], c.horizon * (c.num_actions + 1));
  EXPECT_TRUE(s["theoretical_bound"].is_number());
}

TEST(OutputTest, WritesFiles) {
  const ExperimentResult r = RunExperiment(SmallConfig(), Execution::kSerial);
  const auto dir = std::filesystem::temp_directory_path() / "relaxbandit_out";
  std::filesystem::remove_all(dir);
  WriteOutputs(r, dir.string());
  for (const char* f : {kRegretCsv, kRealizedCsv, kSummaryJson}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  std::ifstream in(dir / kSummaryJson);
  EXPECT_NO_THROW(json::parse(in));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace relaxbandit
