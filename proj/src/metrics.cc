// Copyright 2026 The mpmab Authors.
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

#include "mpmab/metrics.h"

#include <numeric>

#include "mpmab/assignment.h"

namespace mpmab {

std::vector<double> BenchmarkValues(const Environment& env,
                                    RegretBenchmark benchmark) {
  const int num_x = env.dims().num_contexts();
  if (benchmark == RegretBenchmark::kMarginal) {
    const double v = OptimalAssignment(MarginalMeanMatrix(env)).value;
    return std::vector<double>(num_x, v);
  }
  std::vector<double> out(num_x);
  for (int x = 0; x < num_x; ++x) {
    out[x] = OptimalAssignment(MeanMatrix(env, x)).value;
  }
  return out;
}

double RegretAccumulator::Add(const RoundRecord& record) {
  double realized = 0.0;
  for (double v : record.realized) realized += v;
  cumulative_ += optimum_.at(record.context) - realized;
  ++slots_;
  return cumulative_;
}

std::vector<double> RegretTrace(std::span<const RoundRecord> records,
                                const std::vector<double>& optimum_per_context) {
  RegretAccumulator acc(optimum_per_context);
  std::vector<double> trace;
  trace.reserve(records.size());
  for (const auto& r : records) trace.push_back(acc.Add(r));
  return trace;
}

MetricsAccumulators::MetricsAccumulators(int num_players)
    : collisions_(num_players, 0),
      switches_(num_players, 0),
      previous_(num_players, -1) {}

void MetricsAccumulators::Add(const RoundRecord& record) {
  for (PlayerIndex m : record.collisions) ++collisions_[m];
  for (size_t m = 0; m < record.actions.size(); ++m) {
    if (previous_[m] >= 0 && previous_[m] != record.actions[m]) ++switches_[m];
    previous_[m] = record.actions[m];
  }
  for (double v : record.realized) cumulative_reward_ += v;
  ++slots_;
}

std::int64_t MetricsAccumulators::total_collisions() const {
  return std::accumulate(collisions_.begin(), collisions_.end(),
                         std::int64_t{0});
}

std::int64_t MetricsAccumulators::total_switches() const {
  return std::accumulate(switches_.begin(), switches_.end(), std::int64_t{0});
}

}  // namespace mpmab
