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

// Brute-force and Monte Carlo verification oracles used by `verify` and by
// the acceptance suite. None of these share code with the closed forms they
// check beyond InnerSupValue, which BruteForceMinimax minimizes on a grid.

#ifndef RELAXBANDIT_VERIFY_H_
#define RELAXBANDIT_VERIFY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relaxbandit/core.h"
#include "relaxbandit/environment.h"
#include "relaxbandit/learner.h"
#include "relaxbandit/policy.h"
#include "relaxbandit/rng.h"

namespace relaxbandit {

struct MinimaxPoint {
  std::vector<double> q;
  double value;
};

// Minimizes InnerSupValue over the grid {q in simplex : q(i) in mesh * Z}.
// Returns the first minimizing grid point. Throws std::invalid_argument for
// K > 3.
MinimaxPoint BruteForceMinimax(const OracleScores& scores, double level,
                               double mesh);

// sup over the capped domain distributions, evaluated at every extreme point
// (each p(i) in {0, 1/L}, the rest on the zero vector).
double InnerSupByVertices(std::span<const double> q, const OracleScores& scores,
                          double level);

struct UnbiasednessCheck {
  std::vector<double> mean;
  std::vector<double> std_error;
  bool passed = false;  // |mean_i - c_i| <= 3 se_i for every i
};

// Monte Carlo mean of BuildEstimate over (action ~ q, coin).
UnbiasednessCheck CheckUnbiasedness(const ActionDistribution& q,
                                    const CostVector& costs, double level,
                                    int samples, Rng& rng);

// One-step admissibility: with history I_{1..t-1} fixed, compares
//   LHS = E_x max_c E[c(y) + Rel(I_{1..t})]   (strategy q_t, c on a grid)
//   RHS = Rel(I_{1..t-1})
// both estimated by Monte Carlo over the random futures.
struct AdmissibilityInstance {
  PolicyClass policies;
  ContextDistribution contexts;
  LearnerConfig config;
  std::vector<HistoryRecord> history;  // rounds 1..t-1
};

struct AdmissibilityCheck {
  double lhs;
  double lhs_se;
  double rhs;
  double rhs_se;
  double slack() const;  // 3 * sqrt(lhs_se^2 + rhs_se^2)
  bool passed() const { return lhs <= rhs + slack(); }
};

// All cost vectors in [0, 1]^K with coordinates on the given mesh.
std::vector<CostVector> CostGrid(int num_actions, double mesh);

AdmissibilityCheck CheckOneStepAdmissibility(
    const AdmissibilityInstance& instance, std::span<const CostVector> grid,
    int samples, std::uint64_t seed);

// K = 2, T = 2, U = 2, N = 4 random tables, L in {K, 2K}, random round
// t in {1, 2} with a random round-1 history when t = 2.
AdmissibilityInstance RandomTinyInstance(Rng& rng);

// Random psi with psi_0 in [-10, 10] and phi_i uniform in [-0.5, 1.5].
OracleScores RandomScores(int num_actions, double level, Rng& rng);
// Uniform-ish simplex point mixed so every coordinate is at least `floor`.
ActionDistribution RandomDistribution(int num_actions, double floor, Rng& rng);

// One line of `verify` output.
struct CheckReport {
  std::string name;
  bool passed;
  std::string detail;
};

// Property suites run by the `verify` subcommand.
std::vector<CheckReport> RunVerifySuite(std::uint64_t seed);

}  // namespace relaxbandit

#endif  // RELAXBANDIT_VERIFY_H_
