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

#include "relaxbandit/kernels.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "relaxbandit/rng.h"

namespace relaxbandit {
namespace kernels {
namespace {

void CheckShapes(const PolicyClass& policies, const LossTable& table) {
  if (table.num_contexts() != policies.num_contexts() ||
      table.num_actions() != policies.num_actions()) {
    throw std::invalid_argument("loss table shape does not match policy class");
  }
}

inline double PolicyTotal(const PolicyClass& policies, const double* cells,
                          int policy) {
  const int u = policies.num_contexts();
  const int k = policies.num_actions();
  const std::uint16_t* row =
      policies.slots().data() + static_cast<std::size_t>(policy) * u;
  double total = 0.0;
  for (int x = 0; x < u; ++x) total += cells[x * k + row[x]];
  return total;
}

// Sup sample for one replication of the Rademacher process.
double RademacherSupSample(const PolicyClass& policies,
                           std::span<const Context> contexts, double level,
                           double level_prob, Rng& rng,
                           std::vector<double>& scratch) {
  const int k = policies.num_actions();
  std::fill(scratch.begin(), scratch.end(), 0.0);
  for (Context x : contexts) {
    const bool on = rng.Bernoulli(level_prob);
    const std::uint64_t bits = rng.Bits();
    if (!on) continue;
    double* row = &scratch[static_cast<std::size_t>(x.id) * k];
    for (int i = 0; i < k; ++i) {
      row[i] += ((bits >> i) & 1ULL) ? level : -level;
    }
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int p = 0; p < policies.size(); ++p) {
    best = std::max(best, PolicyTotal(policies, scratch.data(), p));
  }
  return best;
}

}  // namespace

double MinPolicyLossSerial(const PolicyClass& policies,
                           const LossTable& table) {
  CheckShapes(policies, table);
  const double* cells = table.cells().data();
  double best = std::numeric_limits<double>::infinity();
  for (int p = 0; p < policies.size(); ++p) {
    best = std::min(best, PolicyTotal(policies, cells, p));
  }
  return best;
}

double MinPolicyLossParallel(const PolicyClass& policies,
                             const LossTable& table) {
  CheckShapes(policies, table);
  const double* cells = table.cells().data();
  const int n = policies.size();
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : best)
  for (int p = 0; p < n; ++p) {
    best = std::min(best, PolicyTotal(policies, cells, p));
  }
  return best;
}

std::vector<double> PolicyLossesSerial(const PolicyClass& policies,
                                       std::span<const Context> contexts,
                                       std::span<const CostVector> costs) {
  if (contexts.size() != costs.size()) {
    throw std::domain_error("policy losses: context/cost length mismatch");
  }
  std::vector<double> totals(policies.size(), 0.0);
  for (int p = 0; p < policies.size(); ++p) {
    for (std::size_t t = 0; t < contexts.size(); ++t) {
      totals[p] += costs[t].entries()[policies.slot(p, contexts[t].id)];
    }
  }
  return totals;
}

std::vector<double> PolicyLossesParallel(const PolicyClass& policies,
                                         std::span<const Context> contexts,
                                         std::span<const CostVector> costs) {
  if (contexts.size() != costs.size()) {
    throw std::domain_error("policy losses: context/cost length mismatch");
  }
  const int n = policies.size();
  std::vector<double> totals(n, 0.0);
#pragma omp parallel for schedule(static)
  for (int p = 0; p < n; ++p) {
    double total = 0.0;
    for (std::size_t t = 0; t < contexts.size(); ++t) {
      total += costs[t].entries()[policies.slot(p, contexts[t].id)];
    }
    totals[p] = total;
  }
  return totals;
}

std::vector<double> RademacherSupSamplesSerial(
    const PolicyClass& policies, std::span<const Context> contexts,
    double level, double level_prob, int samples, std::uint64_t seed) {
  std::vector<double> out(samples);
  std::vector<double> scratch(
      static_cast<std::size_t>(policies.num_contexts()) *
      policies.num_actions());
  for (int s = 0; s < samples; ++s) {
    Rng rng = Rng::ForStream(seed, s, Stream::kVerify);
    out[s] = RademacherSupSample(policies, contexts, level, level_prob, rng,
                                 scratch);
  }
  return out;
}

std::vector<double> RademacherSupSamplesParallel(
    const PolicyClass& policies, std::span<const Context> contexts,
    double level, double level_prob, int samples, std::uint64_t seed) {
  std::vector<double> out(samples);
#pragma omp parallel
  {
    std::vector<double> scratch(
        static_cast<std::size_t>(policies.num_contexts()) *
        policies.num_actions());
#pragma omp for schedule(static)
    for (int s = 0; s < samples; ++s) {
      Rng rng = Rng::ForStream(seed, s, Stream::kVerify);
      out[s] = RademacherSupSample(policies, contexts, level, level_prob, rng,
                                   scratch);
    }
  }
  return out;
}

}  // namespace kernels
}  // namespace relaxbandit
