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

#include "relaxbandit/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "relaxbandit/bounds.h"
#include "relaxbandit/estimator.h"
#include "relaxbandit/oracle.h"

namespace relaxbandit {
namespace {

struct MeanSe {
  double mean;
  double se;
};

MeanSe Summarize(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, xs.size() > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0};
}

std::string Format(const char* fmt, double a, double b, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

}  // namespace

MinimaxPoint BruteForceMinimax(const OracleScores& scores, double level,
                               double mesh) {
  const int k = scores.num_actions();
  if (k > 3) {
    throw std::invalid_argument("BruteForceMinimax: grid search needs K <= 3");
  }
  if (!(mesh > 0.0 && mesh <= 1.0)) {
    throw std::invalid_argument("BruteForceMinimax: mesh must be in (0, 1]");
  }
  const long steps = std::lround(1.0 / mesh);
  MinimaxPoint best{{}, std::numeric_limits<double>::infinity()};
  auto consider = [&](std::vector<double> q) {
    const double v = InnerSupValue(ActionDistribution(q), scores, level);
    if (v < best.value) best = MinimaxPoint{std::move(q), v};
  };
  if (k == 1) {
    consider({1.0});
  } else if (k == 2) {
    for (long i = 0; i <= steps; ++i) {
      const double a = static_cast<double>(i) / steps;
      consider({a, 1.0 - a});
    }
  } else {
    for (long i = 0; i <= steps; ++i) {
      for (long j = 0; i + j <= steps; ++j) {
        const double a = static_cast<double>(i) / steps;
        const double b = static_cast<double>(j) / steps;
        consider({a, b, std::max(0.0, 1.0 - a - b)});
      }
    }
  }
  return best;
}

double InnerSupByVertices(std::span<const double> q, const OracleScores& scores,
                          double level) {
  const int k = static_cast<int>(q.size());
  if (k > 20) throw std::invalid_argument("InnerSupByVertices: K too large");
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    double p0 = 1.0;
    double value = 0.0;
    for (int i = 0; i < k; ++i) {
      if (!(mask & (1u << i))) continue;
      p0 -= 1.0 / level;
      value += (level * q[i] - scores.psi[i + 1]) / level;
    }
    value += p0 * -scores.psi[0];
    best = std::max(best, value);
  }
  return best;
}

UnbiasednessCheck CheckUnbiasedness(const ActionDistribution& q,
                                    const CostVector& costs, double level,
                                    int samples, Rng& rng) {
  const int k = q.num_actions();
  std::vector<double> sum(k, 0.0);
  std::vector<double> sum_sq(k, 0.0);
  for (int s = 0; s < samples; ++s) {
    const ActionIndex a = q.Sample(rng);
    const int coin = DrawEstimatorCoin(costs[a], q[a], level, rng);
    const EstimatedCost est = BuildEstimate(a, coin, level);
    if (!est.is_zero()) {
      sum[est.coordinate() - 1] += est.scale();
      sum_sq[est.coordinate() - 1] += est.scale() * est.scale();
    }
  }
  UnbiasednessCheck out;
  out.passed = true;
  const double n = samples;
  for (int i = 0; i < k; ++i) {
    const double mean = sum[i] / n;
    const double var = (sum_sq[i] / n - mean * mean) * n / (n - 1);
    const double se = std::sqrt(std::max(var, 0.0) / n);
    out.mean.push_back(mean);
    out.std_error.push_back(se);
    if (std::abs(mean - costs.entries()[i]) > 3.0 * se) out.passed = false;
  }
  return out;
}

double AdmissibilityCheck::slack() const {
  return 3.0 * std::sqrt(lhs_se * lhs_se + rhs_se * rhs_se);
}

std::vector<CostVector> CostGrid(int num_actions, double mesh) {
  const long steps = std::lround(1.0 / mesh);
  std::vector<CostVector> grid;
  std::vector<long> idx(num_actions, 0);
  for (;;) {
    std::vector<double> c(num_actions);
    for (int i = 0; i < num_actions; ++i) {
      c[i] = static_cast<double>(idx[i]) / steps;
    }
    grid.emplace_back(std::move(c));
    int i = 0;
    while (i < num_actions && ++idx[i] > steps) idx[i++] = 0;
    if (i == num_actions) break;
  }
  return grid;
}

AdmissibilityCheck CheckOneStepAdmissibility(
    const AdmissibilityInstance& instance, std::span<const CostVector> grid,
    int samples, std::uint64_t seed) {
  const LearnerConfig& config = instance.config;
  const int k = config.num_actions;
  const int u = instance.policies.num_contexts();
  const int t = static_cast<int>(instance.history.size()) + 1;
  if (t > config.horizon) {
    throw std::domain_error("admissibility: history already covers T rounds");
  }
  const double tail = (config.horizon - t) * k / config.level;
  ValueOracle oracle(instance.policies);
  const ContextSource source = ContextSource::Sampler(instance.contexts);
  Rng rng = Rng::ForStream(seed, 0, Stream::kVerify);
  const LossTable past = PastLossTable(instance.history, u, k);

  double lhs = 0.0;
  double lhs_var = 0.0;
  for (int x = 0; x < u; ++x) {
    const double px = instance.contexts.probs()[x];
    if (px <= 0.0) continue;
    const Context ctx{static_cast<std::uint32_t>(x)};
    // Per sample: the played strategy under one future and the relaxation
    // after each possible estimate under an independent future.
    std::vector<std::vector<double>> played(samples);
    std::vector<std::vector<double>> rel(samples, std::vector<double>(k + 1));
    for (int s = 0; s < samples; ++s) {
      const FutureDraw rho = SampleFuture(t, config, source, rng);
      const LossTable future = FutureLossTable(rho, u);
      const OracleScores scores =
          ComputeOracleScores(past, future, ctx, config, oracle);
      const ActionDistribution q = MixedStrategy(scores, config);
      played[s].assign(q.probs().begin(), q.probs().end());

      const FutureDraw fresh = SampleFuture(t, config, source, rng);
      LossTable totals = past;
      totals += FutureLossTable(fresh, u);
      rel[s][0] = -oracle.Value(totals) + tail;
      for (int i = 1; i <= k; ++i) {
        double& cell = totals.at(ctx, ActionIndex{i});
        cell += config.level;
        rel[s][i] = -oracle.Value(totals) + tail;
        cell -= config.level;
      }
    }
    MeanSe worst{-std::numeric_limits<double>::infinity(), 0.0};
    std::vector<double> f(samples);
    for (const CostVector& c : grid) {
      double mass = 0.0;
      for (int i = 0; i < k; ++i) mass += c.entries()[i] / config.level;
      for (int s = 0; s < samples; ++s) {
        double v = (1.0 - mass) * rel[s][0];
        for (int i = 0; i < k; ++i) {
          v += played[s][i] * c.entries()[i] +
               c.entries()[i] / config.level * rel[s][i + 1];
        }
        f[s] = v;
      }
      const MeanSe m = Summarize(f);
      if (m.mean > worst.mean) worst = m;
    }
    lhs += px * worst.mean;
    lhs_var += px * px * worst.se * worst.se;
  }

  std::vector<double> r(samples);
  for (int s = 0; s < samples; ++s) {
    const FutureDraw rho = SampleFuture(t - 1, config, source, rng);
    r[s] = RelaxationValue(instance.history, rho, config, oracle);
  }
  const MeanSe rhs = Summarize(r);
  return AdmissibilityCheck{lhs, std::sqrt(lhs_var), rhs.mean, rhs.se};
}

AdmissibilityInstance RandomTinyInstance(Rng& rng) {
  constexpr int kActions = 2;
  constexpr int kContexts = 2;
  PolicyClass policies = PolicyClass::Random(4, kContexts, kActions, rng);
  const double p0 = 0.1 + 0.8 * rng.Uniform01();
  ContextDistribution contexts({p0, 1.0 - p0});
  LearnerConfig config;
  config.num_actions = kActions;
  config.horizon = 2;
  config.level = rng.Bernoulli(0.5) ? kActions : 2.0 * kActions;
  config.mode = ContextMode::kIidSampler;

  std::vector<HistoryRecord> history;
  if (rng.Bernoulli(0.5)) {
    const Context x = contexts.Sample(rng);
    const std::size_t element = rng.Index(kActions + 1);
    const ActionIndex played =
        element == 0 ? ActionIndex::FromSlot(rng.Index(kActions))
                     : ActionIndex{static_cast<int>(element)};
    history.push_back(HistoryRecord{
        x, ActionDistribution::Uniform(kActions), played,
        element == 0 ? 0.0 : 1.0,
        BuildEstimate(played, element == 0 ? 0 : 1, config.level)});
  }
  return AdmissibilityInstance{std::move(policies), std::move(contexts), config,
                               std::move(history)};
}

OracleScores RandomScores(int num_actions, double level, Rng& rng) {
  std::vector<double> psi(num_actions + 1);
  psi[0] = -10.0 + 20.0 * rng.Uniform01();
  for (int i = 1; i <= num_actions; ++i) {
    psi[i] = psi[0] + level * (-0.5 + 2.0 * rng.Uniform01());
  }
  return OracleScores::FromPsi(std::move(psi), level);
}

ActionDistribution RandomDistribution(int num_actions, double floor,
                                      Rng& rng) {
  std::vector<double> w(num_actions);
  double sum = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - rng.Uniform01());
    sum += v;
  }
  const double keep = 1.0 - num_actions * floor;
  for (double& v : w) v = keep * v / sum + floor;
  return ActionDistribution::Normalized(std::move(w));
}

std::vector<CheckReport> RunVerifySuite(std::uint64_t seed) {
  std::vector<CheckReport> reports;
  Rng rng = Rng::ForStream(seed, 0, Stream::kVerify);

  {
    bool ok = true;
    double worst = -std::numeric_limits<double>::infinity();
    for (int k : {2, 3}) {
      const double mesh = k == 2 ? 1e-3 : 1e-2;
      const int count = k == 2 ? 100 : 50;
      for (int n = 0; n < count; ++n) {
        const double level = (n % 2 == 0) ? k : 2.0 * k;
        const OracleScores scores = RandomScores(k, level, rng);
        const double achieved =
            InnerSupValue(WaterFill(scores.phi), scores, level);
        const MinimaxPoint grid = BruteForceMinimax(scores, level, mesh);
        const double excess = achieved - grid.value - level * mesh;
        worst = std::max(worst, excess);
        ok = ok && excess <= 1e-6;
      }
    }
    reports.push_back({"minimax brute force", ok,
                       Format("max(water-fill - grid - L*mesh) = %.3g", worst,
                              0.0)});
  }
  {
    bool ok = true;
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      const int k = 2 + n % 2;
      const double level = k * (1.0 + rng.Uniform01());
      const OracleScores scores = RandomScores(k, level, rng);
      const ActionDistribution q = RandomDistribution(k, 0.0, rng);
      const double diff = std::abs(InnerSupValue(q, scores, level) -
                                   InnerSupByVertices(q.probs(), scores, level));
      worst = std::max(worst, diff);
      ok = ok && diff <= 1e-9;
    }
    reports.push_back({"closed-form inner sup", ok,
                       Format("max |closed - vertices| = %.3g", worst, 0.0)});
  }
  {
    const double level = 8.0;
    const ActionDistribution q = RandomDistribution(4, 1.0 / level, rng);
    std::vector<double> c(4);
    for (double& v : c) v = rng.Uniform01();
    const UnbiasednessCheck check =
        CheckUnbiasedness(q, CostVector(c), level, 100000, rng);
    reports.push_back({"estimator unbiasedness", check.passed,
                       "K=4 L=8, 1e5 draws, 3 standard errors"});
  }
  {
    const RademacherCheck check =
        RademacherBoundCheck(2, 4.0, 200, 16, 8, 10000, seed);
    reports.push_back({"rademacher sup bound", check.passed(),
                       Format("empirical %.4g (se %.2g) <= bound %.4g",
                              check.empirical, check.std_error, check.bound)});
  }
  {
    bool ok = true;
    std::string detail;
    const std::vector<CostVector> grid = CostGrid(2, 0.25);
    for (int n = 0; n < 5; ++n) {
      const AdmissibilityInstance inst = RandomTinyInstance(rng);
      const AdmissibilityCheck check =
          CheckOneStepAdmissibility(inst, grid, 20000, seed + n);
      ok = ok && check.passed();
      detail += Format("[%.3f <= %.3f + %.3f] ", check.lhs, check.rhs,
                       check.slack());
    }
    reports.push_back({"one-step admissibility", ok, detail});
  }
  return reports;
}

}  // namespace relaxbandit
