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

#ifndef RELAXBANDIT_BOUNDS_H_
#define RELAXBANDIT_BOUNDS_H_

#include <cstdint>
#include <span>

#include "relaxbandit/core.h"
#include "relaxbandit/kernels.h"
#include "relaxbandit/policy.h"

namespace relaxbandit {

// Expected-regret guarantee of the relaxation learner, split into its two
// terms: deviation = 2 sqrt(2 T K L ln N), exploration = T K / L.
struct RegretBound {
  double deviation;
  double exploration;
  double total() const { return deviation + exploration; }
};

// Throws std::domain_error unless L >= K and N >= 2.
RegretBound TheoreticalBound(int num_actions, int horizon, double level,
                             int num_policies);

struct RademacherCheck {
  double empirical;  // Monte Carlo mean of sup_p sum_t eps_t(p(x_t)) Z_t
  double std_error;
  double bound;      // sqrt(2 T M ln N) with M = E[Z^2]
  bool passed() const { return empirical <= bound; }
};

// Monte Carlo check of the exponential-moment bound on the Rademacher sup
// for a fixed context sequence. Z_t = level w.p. level_prob, else 0.
RademacherCheck RademacherBoundCheck(const PolicyClass& policies,
                                     std::span<const Context> contexts,
                                     double level, double level_prob,
                                     int samples, std::uint64_t seed,
                                     Execution exec = Execution::kParallel);

// Standard setup: random table class of N policies over U contexts, a
// uniform i.i.d. context sequence of length T, Z = L w.p. K/L (M = K L).
RademacherCheck RademacherBoundCheck(int num_actions, double level,
                                     int horizon, int num_policies,
                                     int num_contexts, int samples,
                                     std::uint64_t seed,
                                     Execution exec = Execution::kParallel);

}  // namespace relaxbandit

#endif  // RELAXBANDIT_BOUNDS_H_
