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
#include <vector>

#include "gtest/gtest.h"
#include "relaxbandit/baselines.h"
#include "relaxbandit/environment.h"
#include "relaxbandit/oracle.h"
#include "relaxbandit/policy.h"
#include "relaxbandit/rng.h"

namespace relaxbandit {
namespace {

// Expected-cost regret of `learner` against the best constant action.
double RunRegret(BanditLearner& learner, const PolicyClass& pc,
                 const CostSchedule& schedule) {
  double expected = 0.0;
  for (int t = 1; t <= schedule.horizon(); ++t) {
    const CostVector& c = schedule.at_round(t);
    expected += learner.Step(Context{0}, [&](ActionIndex a) { return c[a]; })
                    .played_dist.Dot(c);
  }
  const std::vector<Context> x(schedule.horizon(), Context{0});
  return expected - BestPolicyLoss(pc, x, schedule.costs);
}

TEST(Exp4Test, SymmetricClassStartsUniform) {
  const PolicyClass pc(2, 1, {{1}, {2}});
  Exp4Learner exp4(pc, 100, Rng(1));
  const ActionDistribution q = exp4.Distribution(Context{0});
  EXPECT_NEAR(q[ActionIndex{1}], 0.5, 1e-15);
  EXPECT_NEAR(q[ActionIndex{2}], 0.5, 1e-15);
  EXPECT_NEAR(exp4.gamma(), std::sqrt(std::log(2.0) / 100), 1e-15);
  EXPECT_NEAR(exp4.learning_rate(), exp4.gamma() / 2, 1e-15);
}

TEST(Exp4Test, SinglePolicyPlaysItsAction) {
  const PolicyClass pc(3, 1, {{3}});
  Exp4Learner exp4(pc, 50, Rng(2));
  EXPECT_EQ(exp4.gamma(), 0.0);
  for (int t = 0; t < 50; ++t) {
    const StepOutcome out =
        exp4.Step(Context{0}, [](ActionIndex) { return 0.5; });
    EXPECT_EQ(out.action.value, 3);
  }
}

TEST(Exp4Test, LogWeightsStayFiniteAndNormalized) {
  Rng rng(3);
  const PolicyClass pc = PolicyClass::Random(30, 4, 5, rng);
  Exp4Learner exp4(pc, 5000, Rng(4));
  for (int t = 0; t < 5000; ++t) {
    const Context x{static_cast<std::uint32_t>(t % 4)};
    exp4.Step(x, [](ActionIndex a) { return a.value == 1 ? 0.0 : 1.0; });
  }
  double top = -INFINITY;
  for (double lw : exp4.log_weights()) {
    EXPECT_TRUE(std::isfinite(lw));
    top = std::max(top, lw);
  }
  EXPECT_EQ(top, 0.0);
}

TEST(Exp4Test, RegretGrowsSublinearly) {
  const PolicyClass pc(2, 1, {{1}, {2}});
  auto mean_regret = [&](int horizon) {
    double total = 0.0;
    const int reps = 20;
    for (int r = 0; r < reps; ++r) {
      Rng env(100 + r);
      const CostSchedule s = MakeAdversary(
          {AdversaryType::kStochasticGap, 0.2, 1}, pc,
          std::vector<Context>(horizon, Context{0}), env);
      Exp4Learner exp4(pc, horizon, Rng(200 + r));
      total += RunRegret(exp4, pc, s);
    }
    return total / reps;
  };
  const double short_run = mean_regret(500);
  const double long_run = mean_regret(2000);
  // Linear growth would give a ratio of 4.
  EXPECT_LT(long_run / 2000, short_run / 500);
  EXPECT_LT(long_run, 0.1 * 2000);
}

TEST(UniformLearnerTest, PlaysUniformly) {
  UniformLearner u(4, Rng(5));
  const int n = 40000;
  std::vector<int> counts(4, 0);
  for (int i = 0; i < n; ++i) {
    const StepOutcome out = u.Step(Context{0}, [](ActionIndex) { return 0.0; });
    for (double v : out.played_dist.probs()) EXPECT_EQ(v, 0.25);
    ++counts[out.action.slot()];
  }
  const double sigma = std::sqrt(0.25 * 0.75 / n);
  for (int c : counts) EXPECT_NEAR(static_cast<double>(c) / n, 0.25, 3 * sigma);
}

TEST(UniformLearnerTest, RegretIsLinearInGap) {
  // A fixed cheap action: regret is exactly T * (K - 1) / K * gap.
  const PolicyClass pc(3, 1, {{1}, {2}, {3}});
  Rng env(6);
  const CostSchedule s =
      MakeAdversary({AdversaryType::kDrifting, 0.3, 600}, pc,
                    std::vector<Context>(600, Context{0}), env);
  UniformLearner u(3, Rng(7));
  EXPECT_NEAR(RunRegret(u, pc, s), 600 * 2.0 / 3.0 * 0.3, 1e-9);
}

TEST(UniformStepTest, Draws) {
  Rng rng(8);
  const StepOutcome out = UniformStep(5, rng);
  EXPECT_GE(out.action.value, 1);
  EXPECT_LE(out.action.value, 5);
}

}  // namespace
}  // namespace relaxbandit
