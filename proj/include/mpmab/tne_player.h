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

#ifndef MPMAB_TNE_PLAYER_H_
#define MPMAB_TNE_PLAYER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpmab/estimator.h"
#include "mpmab/player.h"
#include "mpmab/rng.h"
#include "mpmab/schedule.h"
#include "mpmab/trial_and_error.h"

namespace mpmab {

struct TneConfig {
  EpochSchedule schedule{100, 200, 100, 1.0};
  double epsilon = 0.01;
  double xi = 0.001;
  AcceptanceFunctions acceptance;
  // False: contexts are hidden and the player runs one estimator table and
  // one state machine.
  bool observe_context = true;
};

// Initial per-context states of epoch k. For k = 1 every context starts
// discontent on a random benchmark; afterwards content on the previous
// exploitation policy, always with benchmark payoff 0.
std::vector<AuxState> EpochInitStates(int k,
                                      const std::vector<ArmIndex>& prior_policy,
                                      int num_arms, RngStream& rng);

struct ExploitChoice {
  ArmIndex arm = 0;
  bool degenerate = false;  // no visits recorded; fallback used
};

// argmax_l visits[l], ties to the lowest arm. All-zero counts fall back to
// `prior` (k > 1) or a uniform arm drawn from `rng` (prior < 0).
ExploitChoice ExploitPolicy(std::span<const std::int64_t> visits,
                            ArmIndex prior, RngStream& rng);

// Epoch-based learner run independently by each player: uniform exploration
// feeding a persistent value estimator, trial-and-error learning on the
// perturbed estimates, then exploitation of the most-visited content arm.
class TnePlayer : public Player {
 public:
  TnePlayer(PlayerIndex id, int num_arms, int num_contexts,
            const TneConfig& config, std::uint64_t seed);

  ArmIndex Act(std::optional<ContextIndex> context) override;
  void Observe(const SlotFeedback& feedback) override;
  Phase phase() const override { return last_phase_; }
  std::vector<ArmIndex> policy() const override { return policy_; }

  const EpochPosition& position() const { return clock_.position(); }
  const ValueEstimator& estimator() const { return estimator_; }
  const std::vector<AuxState>& states() const { return states_; }
  double perturbed_value(ArmIndex arm, ContextIndex x) const {
    return perturbed_[Index(arm, x)];
  }
  std::int64_t visits(ArmIndex arm, ContextIndex x) const {
    return visits_[Index(arm, x)];
  }
  int num_contexts() const { return num_contexts_; }
  std::int64_t estimator_checks() const { return estimator_checks_; }
  std::int64_t degenerate_policies() const { return degenerate_policies_; }

 private:
  size_t Index(ArmIndex arm, ContextIndex x) const {
    return static_cast<size_t>(arm) * num_contexts_ + x;
  }
  void BeginLearning(int k);
  void BeginExploitation();

  PlayerIndex id_;
  int num_arms_;
  int num_contexts_;
  TneConfig config_;
  TneParams params_;
  RngStream explore_rng_;
  RngStream tne_rng_;
  RngStream perturb_rng_;
  EpochClock clock_;

  ValueEstimator estimator_;
  std::vector<double> perturbed_;     // [arm][x], fixed for one epoch
  std::vector<AuxState> states_;      // [x]
  std::vector<std::int64_t> visits_;  // [arm][x], reset every epoch
  std::vector<ArmIndex> policy_;      // [x]; -1 before the first exploitation

  ContextIndex last_context_ = 0;
  ArmIndex last_arm_ = 0;
  Phase last_phase_ = Phase::kExploration;
  std::int64_t estimator_checks_ = 0;
  std::int64_t degenerate_policies_ = 0;
};

}  // namespace mpmab

#endif  // MPMAB_TNE_PLAYER_H_
