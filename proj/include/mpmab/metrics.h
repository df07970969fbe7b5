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

#ifndef MPMAB_METRICS_H_
#define MPMAB_METRICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mpmab/core.h"
#include "mpmab/environment.h"

namespace mpmab {

// Which optimum regret is measured against: the per-context optimum
// V*(x^t), or the single optimum of the context-marginalized means.
enum class RegretBenchmark { kContextual, kMarginal };

// Benchmark value per context label. For kMarginal every entry is the same
// marginal optimum.
std::vector<double> BenchmarkValues(const Environment& env,
                                    RegretBenchmark benchmark);

// Cumulative sum over slots of V*(x^t) - sum_m v_m^t.
class RegretAccumulator {
 public:
  explicit RegretAccumulator(std::vector<double> optimum_per_context)
      : optimum_(std::move(optimum_per_context)) {}

  double Add(const RoundRecord& record);
  double cumulative() const { return cumulative_; }
  std::int64_t slots() const { return slots_; }

 private:
  std::vector<double> optimum_;
  double cumulative_ = 0.0;
  std::int64_t slots_ = 0;
};

// Cumulative regret after each record of `records`.
std::vector<double> RegretTrace(std::span<const RoundRecord> records,
                                const std::vector<double>& optimum_per_context);

// Collision and switching counters plus the realized reward total.
// A switch is a slot whose arm differs from the same player's arm in the
// previous slot.
class MetricsAccumulators {
 public:
  explicit MetricsAccumulators(int num_players);

  void Add(const RoundRecord& record);

  const std::vector<std::int64_t>& collisions() const { return collisions_; }
  const std::vector<std::int64_t>& switches() const { return switches_; }
  std::int64_t total_collisions() const;
  std::int64_t total_switches() const;
  double cumulative_reward() const { return cumulative_reward_; }
  std::int64_t slots() const { return slots_; }

 private:
  std::vector<std::int64_t> collisions_;
  std::vector<std::int64_t> switches_;
  std::vector<ArmIndex> previous_;
  double cumulative_reward_ = 0.0;
  std::int64_t slots_ = 0;
};

}  // namespace mpmab

#endif  // MPMAB_METRICS_H_
