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

#ifndef MPMAB_SIMULATION_H_
#define MPMAB_SIMULATION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "mpmab/environment.h"
#include "mpmab/metrics.h"
#include "mpmab/player.h"

namespace mpmab {

// Snapshot of the run after `t` completed slots.
struct Checkpoint {
  std::int64_t t = 0;
  double regret = 0.0;          // cumulative
  double reward = 0.0;          // cumulative realized sum reward
  std::int64_t collisions = 0;  // cumulative, summed over players
  std::int64_t switches = 0;    // cumulative, summed over players

  bool operator==(const Checkpoint&) const = default;
};

struct GameOptions {
  std::int64_t horizon = 0;
  bool observe_context = true;
  std::vector<double> optimum_per_context;
  std::vector<std::int64_t> checkpoints;  // ascending slot counts
  std::function<void(const RoundRecord&)> observer;
};

struct GameRun {
  std::vector<Checkpoint> checkpoints;
  MetricsAccumulators metrics{0};
  double regret = 0.0;
};

// Lockstep play: each slot the environment draws a context and a reward
// matrix, every player acts, collisions are resolved, and every player
// observes its own feedback.
GameRun RunGame(Environment& env, std::span<const std::unique_ptr<Player>> players,
                RngStream& env_rng, const GameOptions& options);

// Sorted, de-duplicated union of the multiples of `every` up to `horizon`,
// the `extra` points inside (0, horizon], and `horizon` itself.
std::vector<std::int64_t> CheckpointGrid(std::int64_t horizon,
                                         std::int64_t every,
                                         std::span<const std::int64_t> extra);

}  // namespace mpmab

#endif  // MPMAB_SIMULATION_H_
