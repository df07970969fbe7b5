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

#include "mpmab/core.h"

#include <algorithm>
#include <string>

namespace mpmab {

GameDims::GameDims(int num_players, int num_arms, int num_contexts)
    : num_players_(num_players),
      num_arms_(num_arms),
      num_contexts_(num_contexts) {
  if (num_players < 1) throw ConfigError("num_players", "must be >= 1");
  if (num_arms < 1) throw ConfigError("num_arms", "must be >= 1");
  if (num_contexts < 1) throw ConfigError("num_contexts", "must be >= 1");
  if (num_arms < num_players) {
    throw ConfigError("num_arms", "must be >= num_players (got L=" +
                                      std::to_string(num_arms) + ", M=" +
                                      std::to_string(num_players) + ")");
  }
}

RewardMatrix::RewardMatrix(int num_players, int num_arms, double fill)
    : num_players_(num_players),
      num_arms_(num_arms),
      values_(static_cast<size_t>(num_players) * num_arms, fill) {}

RewardMatrix::RewardMatrix(
    std::initializer_list<std::initializer_list<double>> rows) {
  num_players_ = static_cast<int>(rows.size());
  num_arms_ = rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != num_arms_) {
      throw ConfigError("", "ragged reward matrix");
    }
    values_.insert(values_.end(), row.begin(), row.end());
  }
}

std::vector<bool> CollisionFlags(const JointAction& actions) {
  const size_t n = actions.size();
  std::vector<bool> flags(n, false);
  if (n == 0) return flags;
  const ArmIndex max_arm = *std::max_element(actions.begin(), actions.end());
  std::vector<int> occupancy(static_cast<size_t>(std::max(max_arm, 0)) + 1, 0);
  for (ArmIndex a : actions) {
    if (a >= 0) ++occupancy[a];
  }
  for (size_t m = 0; m < n; ++m) {
    flags[m] = actions[m] >= 0 && occupancy[actions[m]] >= 2;
  }
  return flags;
}

std::vector<PlayerIndex> CollisionSet(const JointAction& actions) {
  std::vector<PlayerIndex> out;
  const auto flags = CollisionFlags(actions);
  for (size_t m = 0; m < flags.size(); ++m) {
    if (flags[m]) out.push_back(static_cast<PlayerIndex>(m));
  }
  return out;
}

RealizedRewards ResolveRewards(const JointAction& actions,
                               const RewardMatrix& rewards) {
  if (static_cast<int>(actions.size()) != rewards.num_players()) {
    throw ConfigError("actions", "joint action has " +
                                     std::to_string(actions.size()) +
                                     " entries for " +
                                     std::to_string(rewards.num_players()) +
                                     " players");
  }
  for (ArmIndex a : actions) {
    if (a < 0 || a >= rewards.num_arms()) {
      throw ConfigError("actions", "arm index " + std::to_string(a) +
                                       " outside [0, " +
                                       std::to_string(rewards.num_arms()) +
                                       ")");
    }
  }
  const auto collided = CollisionFlags(actions);
  RealizedRewards out(actions.size(), 0.0);
  for (size_t m = 0; m < actions.size(); ++m) {
    if (!collided[m]) out[m] = rewards(static_cast<PlayerIndex>(m), actions[m]);
  }
  return out;
}

const char* PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kExploration: return "exploration";
    case Phase::kLearning: return "learning";
    case Phase::kExploitation: return "exploitation";
    case Phase::kSettle: return "settle";
    case Phase::kFixed: return "fixed";
    case Phase::kStatic: return "static";
  }
  return "unknown";
}

}  // namespace mpmab
