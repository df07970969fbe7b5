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

#ifndef MPMAB_EXPERIMENT_H_
#define MPMAB_EXPERIMENT_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mpmab/config.h"
#include "mpmab/player.h"
#include "mpmab/simulation.h"

namespace mpmab {

struct RunResult {
  int index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;

  std::vector<Checkpoint> checkpoints;
  std::vector<std::int64_t> collisions;  // per player, whole run
  std::vector<std::int64_t> switches;    // per player, whole run
  std::vector<std::vector<ArmIndex>> final_policies;  // [player][context]
  double regret = 0.0;
  double wall_seconds = 0.0;
  std::int64_t estimator_checks = 0;
  std::int64_t degenerate_policies = 0;
  std::vector<RoundRecord> rounds;  // only with run.raw_log
};

// Mean and sample variance (n - 1; zero for a single run) across
// successful runs, accumulated in seed order.
struct MeanVar {
  double mean = 0.0;
  double var = 0.0;
};
MeanVar ComputeMeanVar(const std::vector<double>& values);

struct AggregateRow {
  std::int64_t t = 0;
  MeanVar regret;
  MeanVar reward;  // average realized sum reward since the previous row
  MeanVar collisions;
  MeanVar switches;
};

struct ExperimentResults {
  ExperimentConfig config;
  std::string config_hash;
  std::vector<std::string> warnings;
  std::vector<double> benchmark;  // per-context regret benchmark
  double expected_optimum = 0.0;  // benchmark averaged over contexts
  double gap_margin = 0.0;        // NaN beyond the brute-force guard
  std::vector<std::int64_t> grid;
  std::vector<RunResult> runs;  // sorted by seed
  std::vector<AggregateRow> aggregate;

  int num_ok() const;
};

// Per-algorithm player set for one run.
std::vector<std::unique_ptr<Player>> MakePlayers(const ExperimentConfig& config,
                                                 const Environment& reference,
                                                 std::uint64_t seed);

// One run with seed `seed`. Errors are captured in the result.
RunResult RunOne(const ExperimentConfig& config,
                 const EnvironmentFactory& factory,
                 const std::vector<double>& benchmark,
                 const std::vector<std::int64_t>& grid, std::uint64_t seed,
                 int index);

// R runs with seeds base + i, fanned out over `config.threads` workers.
// Failed runs are reported in their RunResult and excluded from aggregates.
ExperimentResults RunExperiment(const ExperimentConfig& config);

std::vector<AggregateRow> Aggregate(const std::vector<RunResult>& runs,
                                    const std::vector<std::int64_t>& grid);

}  // namespace mpmab

#endif  // MPMAB_EXPERIMENT_H_
