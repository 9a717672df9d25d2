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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "relaxbandit/bounds.h"
#include "relaxbandit/config.h"
#include "relaxbandit/experiment.h"
#include "relaxbandit/learner.h"
#include "relaxbandit/output.h"
#include "relaxbandit/rng.h"
#include "relaxbandit/verify.h"

namespace relaxbandit {
namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string Fmt(const char* fmt, double a = 0, double b = 0, double c = 0,
                double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c, d);
  return buf;
}

// Floor and coin bookkeeping shared by every experiment run below.
struct FloorLog {
  double worst_margin = std::numeric_limits<double>::infinity();
  double max_coin = 0.0;
  int runs = 0;

  void Record(const ExperimentResult& r) {
    worst_margin = std::min(worst_margin, r.min_played_prob() - 1.0 / r.level);
    max_coin = std::max(max_coin, r.max_coin_probability());
    ++runs;
  }
};

FloorLog floor_log;

ExperimentConfig BoundConfig(AdversaryType type, double gap, int period) {
  ExperimentConfig c;
  c.num_actions = 5;
  c.horizon = 2000;
  c.learner = LearnerKind::kRelax;
  c.policy_class.kind = PolicyClassSpec::Kind::kTable;
  c.policy_class.seed = kSeed;
  c.policy_class.num_policies = 50;
  c.policy_class.num_contexts = 10;
  c.policy_class.num_actions = 5;
  c.environment.context.num_contexts = 10;
  c.environment.adversary = {type, gap, period};
  c.reps = 20;
  c.seed = kSeed;
  return c;
}

ExperimentResult Run(const ExperimentConfig& c) {
  ExperimentResult r = RunExperiment(c);
  if (c.learner == LearnerKind::kRelax) floor_log.Record(r);
  return r;
}

// Mean regret per round at t, read off the prefix of the curve.
double RatePerRound(const ExperimentResult& r, int t) {
  return r.mean_regret[t - 1] / t;
}

Outcome Unbiasedness() {
  Rng rng = Rng::ForStream(kSeed, 0, Stream::kVerify);
  const double level = 8.0;
  const ActionDistribution q = RandomDistribution(4, 1.0 / level, rng);
  std::vector<double> c(4);
  for (double& v : c) v = rng.Uniform01();
  const UnbiasednessCheck check =
      CheckUnbiasedness(q, CostVector(c), level, 100000, rng);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(check.mean[i] - c[i]) / check.std_error[i]);
  }
  return {check.passed, Fmt("max |mean - c| = %.2f se", worst)};
}

Outcome OracleBudget() {
  ExperimentConfig c = BoundConfig(AdversaryType::kStochasticGap, 0.3, 1);
  c.horizon = 500;
  c.reps = 1;
  const ExperimentResult r = Run(c);
  const std::int64_t expected = 500LL * (5 + 1);
  return {r.total_oracle_calls() == expected,
          Fmt("calls %.0f, expected %.0f",
              static_cast<double>(r.total_oracle_calls()),
              static_cast<double>(expected))};
}

Outcome Minimax() {
  Rng rng = Rng::ForStream(kSeed, 1, Stream::kVerify);
  double worst = -std::numeric_limits<double>::infinity();
  for (int k : {2, 3}) {
    const double mesh = k == 2 ? 1e-3 : 1e-2;
    for (int n = 0; n < (k == 2 ? 100 : 50); ++n) {
      const double level = n % 2 == 0 ? k : 2.0 * k;
      const OracleScores s = RandomScores(k, level, rng);
      const double achieved = InnerSupValue(WaterFill(s.phi), s, level);
      const MinimaxPoint grid = BruteForceMinimax(s, level, mesh);
      worst = std::max(worst, achieved - grid.value - level * mesh);
    }
  }
  return {worst <= 1e-6, Fmt("max(water-fill - grid - L*mesh) = %.3g", worst)};
}

Outcome ClosedForm() {
  Rng rng = Rng::ForStream(kSeed, 2, Stream::kVerify);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const int k = 2 + n % 2;
    const double level = k * (1.0 + rng.Uniform01());
    const OracleScores s = RandomScores(k, level, rng);
    const ActionDistribution q = RandomDistribution(k, 0.0, rng);
    worst = std::max(worst, std::abs(InnerSupValue(q, s, level) -
                                     InnerSupByVertices(q.probs(), s, level)));
  }
  return {worst <= 1e-9, Fmt("max |closed form - vertices| = %.3g", worst)};
}

ExperimentResult gap_result;
ExperimentResult targeted_result;

Outcome BoundConformance() {
  gap_result = Run(BoundConfig(AdversaryType::kStochasticGap, 0.3, 1));
  targeted_result = Run(BoundConfig(AdversaryType::kPolicyTargeted, 0.2, 200));
  bool ok = true;
  std::string detail = Fmt("L=%.3f bound=%.1f;", gap_result.level,
                           gap_result.bound.back());
  for (const auto* r : {&gap_result, &targeted_result}) {
    const double final_regret = r->mean_regret.back();
    const double ratio = RatePerRound(*r, 2000) / RatePerRound(*r, 500);
    const bool within = final_regret <= r->bound.back();
    ok = ok && within && ratio < 0.8;
    detail += " " + AdversaryName(r->config.environment.adversary.type) +
              Fmt(" regret %.1f (se %.1f)", final_regret,
                  r->stderr_regret.back()) +
              (within ? " within bound" : " ABOVE bound") +
              Fmt(", rate ratio %.3f (need < 0.8);", ratio);
  }
  return {ok, detail};
}

Outcome Rademacher() {
  const RademacherCheck c = RademacherBoundCheck(2, 4.0, 200, 16, 8, 10000, kSeed);
  return {c.passed(), Fmt("empirical %.2f (se %.2f) <= bound %.2f", c.empirical,
                          c.std_error, c.bound)};
}

Outcome Admissibility() {
  Rng rng = Rng::ForStream(kSeed, 3, Stream::kVerify);
  const std::vector<CostVector> grid = CostGrid(2, 0.25);
  bool ok = true;
  std::string detail;
  for (int n = 0; n < 5; ++n) {
    const AdmissibilityInstance inst = RandomTinyInstance(rng);
    const AdmissibilityCheck c =
        CheckOneStepAdmissibility(inst, grid, 20000, kSeed + n);
    ok = ok && c.passed();
    detail += Fmt("[%.3f <= %.3f + %.3f]", c.lhs, c.rhs, c.slack());
  }
  return {ok, detail};
}

Outcome ExplorationFloor() {
  const bool ok =
      floor_log.worst_margin >= -1e-12 && floor_log.max_coin <= 1.0 + 1e-12;
  return {ok, Fmt("%.0f runs, min(q) - 1/L = %.3g, max coin prob = %.17g",
                  floor_log.runs, floor_log.worst_margin, floor_log.max_coin)};
}

Outcome Determinism() {
  const ExperimentResult again =
      Run(BoundConfig(AdversaryType::kStochasticGap, 0.3, 1));
  const ExperimentResult serial = RunExperiment(
      BoundConfig(AdversaryType::kStochasticGap, 0.3, 1), Execution::kSerial);
  const bool same = RegretCsv(again) == RegretCsv(gap_result) &&
                    RealizedCsv(again) == RealizedCsv(gap_result) &&
                    RegretCsv(serial) == RegretCsv(gap_result);
  return {same, same ? "rerun and serial CSV byte-identical" : "CSV differs"};
}

Outcome BaselineSanity() {
  ExperimentConfig c = BoundConfig(AdversaryType::kStochasticGap, 0.3, 1);
  c.learner = LearnerKind::kUniform;
  const ExperimentResult uniform = Run(c);
  c.learner = LearnerKind::kExp4;
  const ExperimentResult exp4 = Run(c);
  const double relax = gap_result.mean_regret.back();
  const double unif = uniform.mean_regret.back();
  const double ratio = RatePerRound(exp4, 2000) / RatePerRound(exp4, 500);
  return {relax < unif && ratio < 0.8,
          Fmt("relax %.1f < uniform %.1f; exp4 %.1f, rate ratio %.3f", relax,
              unif, exp4.mean_regret.back(), ratio)};
}

}  // namespace
}  // namespace relaxbandit

int main() {
  using relaxbandit::Outcome;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  // Evaluation order: 9 and 10 reuse the runs of 5, and 8 inspects every
  // relaxation run made before it, so it goes last.
  const std::vector<Criterion> criteria = {
      {1, "estimator unbiasedness", relaxbandit::Unbiasedness},
      {2, "oracle budget", relaxbandit::OracleBudget},
      {3, "minimax correctness", relaxbandit::Minimax},
      {4, "closed-form inner sup", relaxbandit::ClosedForm},
      {5, "bound conformance", relaxbandit::BoundConformance},
      {6, "rademacher sup bound", relaxbandit::Rademacher},
      {7, "one-step admissibility", relaxbandit::Admissibility},
      {9, "determinism", relaxbandit::Determinism},
      {10, "baseline sanity", relaxbandit::BaselineSanity},
      {8, "exploration floor", relaxbandit::ExplorationFloor},
  };
  std::vector<std::string> lines(criteria.size() + 1);
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    char head[96];
    std::snprintf(head, sizeof(head), "%s  %2d %-24s %6.1fs  ",
                  out.passed ? "PASS" : "FAIL", c.id, c.name, secs);
    lines[c.id] = head + out.detail;
    failed += !out.passed;
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::printf("%s\n", lines[i].c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
