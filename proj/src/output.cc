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

#include "relaxbandit/output.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace relaxbandit {
namespace {

std::string Num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string Curve(const char* header, const std::vector<double>& mean,
                  const std::vector<double>& se,
                  const std::vector<double>& bound) {
  std::string out = header;
  out += '\n';
  for (std::size_t t = 0; t < mean.size(); ++t) {
    out += std::to_string(t + 1);
    out += ',';
    out += Num(mean[t]);
    out += ',';
    out += Num(se[t]);
    out += ',';
    out += Num(bound[t]);
    out += '\n';
  }
  return out;
}

void WriteFile(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << body;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::string RegretCsv(const ExperimentResult& result) {
  return Curve("round,mean_regret,stderr_regret,bound", result.mean_regret,
               result.stderr_regret, result.bound);
}

std::string RealizedCsv(const ExperimentResult& result) {
  return Curve("round,mean_realized_regret,stderr_realized_regret,bound",
               result.mean_realized_regret, result.stderr_realized_regret,
               result.bound);
}

nlohmann::json SummaryJson(const ExperimentResult& result) {
  using nlohmann::json;
  const int horizon = result.config.horizon;
  json per_rep = json::array();
  for (const RunResult& r : result.runs) {
    per_rep.push_back({{"replication", r.replication},
                       {"final_regret", r.final_regret()},
                       {"comparator_loss", r.comparator_loss},
                       {"expected_cost", r.total_expected_cost},
                       {"oracle_calls", r.oracle_calls}});
  }
  const double bound = result.bound.empty() ? NAN : result.bound.back();
  return json{
      {"config", ToJson(result.config)},
      {"learner", LearnerName(result.config.learner)},
      {"L", result.level},
      {"in_regime", result.in_regime},
      {"N", result.num_policies},
      {"final_regret",
       {{"mean", result.mean_regret.at(horizon - 1)},
        {"stderr", result.stderr_regret.at(horizon - 1)}}},
      {"final_realized_regret",
       {{"mean", result.mean_realized_regret.at(horizon - 1)},
        {"stderr", result.stderr_realized_regret.at(horizon - 1)}}},
      {"theoretical_bound", std::isnan(bound) ? json(nullptr) : json(bound)},
      {"oracle_calls", result.total_oracle_calls()},
      {"replications", per_rep},
      {"wall_time_seconds", result.wall_seconds}};
}

void WriteOutputs(const ExperimentResult& result, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir + ": " + ec.message());
  const fs::path base(dir);
  WriteFile(base / kRegretCsv, RegretCsv(result));
  WriteFile(base / kRealizedCsv, RealizedCsv(result));
  WriteFile(base / kSummaryJson, SummaryJson(result).dump(2) + "\n");
}

}  // namespace relaxbandit
