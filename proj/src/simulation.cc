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

#include "mpmab/simulation.h"

#include <algorithm>
#include <optional>

namespace mpmab {

GameRun RunGame(Environment& env,
                std::span<const std::unique_ptr<Player>> players,
                RngStream& env_rng, const GameOptions& options) {
  const int num_m = env.dims().num_players();
  if (static_cast<int>(players.size()) != num_m) {
    throw ConfigError("players", "player count does not match the game");
  }
  GameRun run;
  run.metrics = MetricsAccumulators(num_m);
  RegretAccumulator regret(options.optimum_per_context);
  auto next_checkpoint = options.checkpoints.begin();

  RoundRecord record;
  record.actions.resize(num_m);
  record.sampled.resize(num_m);
  std::vector<SlotFeedback> feedback(num_m);

  for (std::int64_t t = 0; t < options.horizon; ++t) {
    EnvObservation obs = env.Step(env_rng);
    const std::optional<ContextIndex> shown =
        options.observe_context ? std::optional<ContextIndex>(obs.context)
                                : std::nullopt;
    for (int m = 0; m < num_m; ++m) record.actions[m] = players[m]->Act(shown);

    record.slot = t;
    record.context = obs.context;
    record.phase = players[0]->phase();
    record.realized = ResolveRewards(record.actions, obs.reward_matrix);
    record.collisions = CollisionSet(record.actions);
    for (int m = 0; m < num_m; ++m) {
      record.sampled[m] = obs.reward_matrix(m, record.actions[m]);
    }
    for (int m = 0; m < num_m; ++m) feedback[m] = {record.realized[m], false};
    for (PlayerIndex m : record.collisions) feedback[m].collided = true;
    for (int m = 0; m < num_m; ++m) players[m]->Observe(feedback[m]);

    run.metrics.Add(record);
    regret.Add(record);
    if (options.observer) options.observer(record);

    while (next_checkpoint != options.checkpoints.end() &&
           *next_checkpoint == t + 1) {
      run.checkpoints.push_back({t + 1, regret.cumulative(),
                                 run.metrics.cumulative_reward(),
                                 run.metrics.total_collisions(),
                                 run.metrics.total_switches()});
      ++next_checkpoint;
    }
  }
  run.regret = regret.cumulative();
  return run;
}

std::vector<std::int64_t> CheckpointGrid(std::int64_t horizon,
                                         std::int64_t every,
                                         std::span<const std::int64_t> extra) {
  std::vector<std::int64_t> grid;
  if (horizon <= 0) return grid;
  if (every > 0) {
    for (std::int64_t t = every; t <= horizon; t += every) grid.push_back(t);
  }
  for (std::int64_t t : extra) {
    if (t > 0 && t <= horizon) grid.push_back(t);
  }
  grid.push_back(horizon);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace mpmab
