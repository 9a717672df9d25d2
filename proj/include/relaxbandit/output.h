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

#ifndef RELAXBANDIT_OUTPUT_H_
#define RELAXBANDIT_OUTPUT_H_

#include <string>

#include "json.hpp"
#include "relaxbandit/experiment.h"

namespace relaxbandit {

inline constexpr const char* kRegretCsv = "regret.csv";
inline constexpr const char* kRealizedCsv = "realized.csv";
inline constexpr const char* kSummaryJson = "summary.json";

// "round,mean_regret,stderr_regret,bound" plus one row per round. Numbers
// use 9 significant digits (%.9g).
std::string RegretCsv(const ExperimentResult& result);
// Same layout for the sampled-cost regret curve.
std::string RealizedCsv(const ExperimentResult& result);
// Config echo, L, final regret, oracle calls, wall time.
nlohmann::json SummaryJson(const ExperimentResult& result);

// Writes the three files into `dir`, creating it if needed. Throws
// std::runtime_error on I/O failure.
void WriteOutputs(const ExperimentResult& result, const std::string& dir);

}  // namespace relaxbandit

#endif  // RELAXBANDIT_OUTPUT_H_
