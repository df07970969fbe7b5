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

#include "mpmab/baselines.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mpmab {

int EstimatePlayerCount(double non_collision_rate, int num_arms) {
  if (num_arms <= 1) return 1;
  if (!(non_collision_rate > 0.0)) return num_arms;
  if (non_collision_rate >= 1.0) return 1;
  const double ratio =
      std::log(non_collision_rate) / std::log(1.0 - 1.0 / num_arms);
  const double estimate = std::round(ratio) + 1.0;
  return static_cast<int>(
      std::clamp(estimate, 1.0, static_cast<double>(num_arms)));
}

MusicalChairsPlayer::MusicalChairsPlayer(PlayerIndex id, int num_arms,
                                         std::int64_t exploration_rounds,
                                         std::uint64_t seed)
    : num_arms_(num_arms), rng_(seed, id, StreamPurpose::kBaseline) {
  if (exploration_rounds < 1) {
    throw ConfigError("musical_chairs.exploration_rounds", "must be > 0");
  }
  state_.exploration_rounds = exploration_rounds;
  state_.reward_sums.assign(num_arms, 0.0);
  state_.reward_counts.assign(num_arms, 0);
}

ArmIndex MusicalChairsPlayer::Act(std::optional<ContextIndex> /*context*/) {
  switch (state_.stage) {
    case McState::Stage::kExplore:
      last_phase_ = Phase::kExploration;
      last_arm_ = rng_.UniformInt(num_arms_);
      break;
    case McState::Stage::kSettle:
      last_phase_ = Phase::kSettle;
      last_arm_ = state_.candidate_arms[rng_.UniformInt(
          static_cast<int>(state_.candidate_arms.size()))];
      break;
    case McState::Stage::kFixed:
      last_phase_ = Phase::kFixed;
      last_arm_ = state_.fixed_arm;
      break;
  }
  return last_arm_;
}

void MusicalChairsPlayer::FinishExploration() {
  const double rate = static_cast<double>(state_.non_collisions) /
                      static_cast<double>(state_.slots_explored);
  state_.estimated_players = EstimatePlayerCount(rate, num_arms_);
  std::vector<ArmIndex> order(num_arms_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ArmIndex a, ArmIndex b) {
    return state_.EstimatedMean(a) > state_.EstimatedMean(b);
  });
  order.resize(state_.estimated_players);
  state_.candidate_arms = std::move(order);
  state_.stage = McState::Stage::kSettle;
}

void MusicalChairsPlayer::Observe(const SlotFeedback& feedback) {
  switch (state_.stage) {
    case McState::Stage::kExplore:
      ++state_.slots_explored;
      if (!feedback.collided) {
        ++state_.non_collisions;
        state_.reward_sums[last_arm_] += feedback.reward;
        ++state_.reward_counts[last_arm_];
      }
      if (state_.slots_explored >= state_.exploration_rounds) {
        FinishExploration();
      }
      break;
    case McState::Stage::kSettle:
      if (!feedback.collided) {
        state_.fixed_arm = last_arm_;
        state_.stage = McState::Stage::kFixed;
      }
      break;
    case McState::Stage::kFixed:
      break;
  }
}

std::vector<ArmIndex> MusicalChairsPlayer::policy() const {
  return {state_.fixed_arm};
}

FixedPolicyPlayer::FixedPolicyPlayer(std::vector<ArmIndex> arm_per_context)
    : arms_(std::move(arm_per_context)) {
  if (arms_.empty()) throw ConfigError("policy", "empty fixed policy");
}

ArmIndex FixedPolicyPlayer::Act(std::optional<ContextIndex> context) {
  const ContextIndex x = context.value_or(0);
  return arms_[arms_.size() == 1 ? 0 : static_cast<size_t>(x)];
}

std::vector<ArmIndex> RandomStaticAssignment(int num_players, int num_arms,
                                             RngStream& rng) {
  if (num_arms < num_players) {
    throw ConfigError("num_arms", "random static allocation needs L >= M");
  }
  std::vector<ArmIndex> arms(num_arms);
  std::iota(arms.begin(), arms.end(), 0);
  // Partial Fisher-Yates: the first M slots become a uniform injective map.
  for (int m = 0; m < num_players; ++m) {
    const int j = m + rng.UniformInt(num_arms - m);
    std::swap(arms[m], arms[j]);
  }
  arms.resize(num_players);
  return arms;
}

}  // namespace mpmab
