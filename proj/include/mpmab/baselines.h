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

#ifndef MPMAB_BASELINES_H_
#define MPMAB_BASELINES_H_

#include <cstdint>
#include <vector>

#include "mpmab/player.h"
#include "mpmab/rng.h"

namespace mpmab {

// Context-blind Musical Chairs: T0 slots of uniform exploration, estimate
// the number of players from the non-collision rate, then hop uniformly
// among the top-M_hat arms until a collision-free slot and stay there.
//
// The player-count estimate inverts P(no collision) = (1 - 1/L)^(M-1):
//   M_hat = round(log(p_hat) / log(1 - 1/L)) + 1, clamped to [1, L].
struct McState {
  enum class Stage { kExplore, kSettle, kFixed };

  Stage stage = Stage::kExplore;
  std::int64_t exploration_rounds = 3000;
  std::int64_t slots_explored = 0;
  std::int64_t non_collisions = 0;
  std::vector<double> reward_sums;
  std::vector<std::int64_t> reward_counts;
  int estimated_players = 0;
  std::vector<ArmIndex> candidate_arms;  // top-M_hat arms by estimated mean
  ArmIndex fixed_arm = -1;

  double EstimatedMean(ArmIndex l) const {
    return reward_counts[l] == 0
               ? 0.0
               : reward_sums[l] / static_cast<double>(reward_counts[l]);
  }
};

// Clamped player-count estimate from an observed non-collision rate.
int EstimatePlayerCount(double non_collision_rate, int num_arms);

class MusicalChairsPlayer : public Player {
 public:
  MusicalChairsPlayer(PlayerIndex id, int num_arms,
                      std::int64_t exploration_rounds, std::uint64_t seed);

  ArmIndex Act(std::optional<ContextIndex> context) override;
  void Observe(const SlotFeedback& feedback) override;
  Phase phase() const override { return last_phase_; }
  std::vector<ArmIndex> policy() const override;

  const McState& state() const { return state_; }

 private:
  void FinishExploration();

  int num_arms_;
  RngStream rng_;
  McState state_;
  ArmIndex last_arm_ = 0;
  Phase last_phase_ = Phase::kExploration;
};

// Plays a fixed arm per context for the whole run. Backs the oracle and the
// random static allocator.
class FixedPolicyPlayer : public Player {
 public:
  explicit FixedPolicyPlayer(std::vector<ArmIndex> arm_per_context);

  ArmIndex Act(std::optional<ContextIndex> context) override;
  void Observe(const SlotFeedback&) override {}
  Phase phase() const override { return Phase::kStatic; }
  std::vector<ArmIndex> policy() const override { return arms_; }

 private:
  std::vector<ArmIndex> arms_;
};

// Uniformly random injective player -> arm map (L >= M).
std::vector<ArmIndex> RandomStaticAssignment(int num_players, int num_arms,
                                             RngStream& rng);

}  // namespace mpmab

#endif  // MPMAB_BASELINES_H_
