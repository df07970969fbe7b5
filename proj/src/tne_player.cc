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

#include "mpmab/tne_player.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mpmab {

std::vector<AuxState> EpochInitStates(int k,
                                      const std::vector<ArmIndex>& prior_policy,
                                      int num_arms, RngStream& rng) {
  if (k < 1) throw ContractViolation("epoch index must be >= 1");
  std::vector<AuxState> states(prior_policy.size());
  for (size_t x = 0; x < prior_policy.size(); ++x) {
    if (k == 1 || prior_policy[x] < 0) {
      states[x] = {Mood::kDiscontent, rng.UniformInt(num_arms), 0.0};
    } else {
      states[x] = {Mood::kContent, prior_policy[x], 0.0};
    }
  }
  return states;
}

ExploitChoice ExploitPolicy(std::span<const std::int64_t> visits,
                            ArmIndex prior, RngStream& rng) {
  ExploitChoice choice;
  std::int64_t best = 0;
  for (size_t l = 0; l < visits.size(); ++l) {
    if (visits[l] > best) {
      best = visits[l];
      choice.arm = static_cast<ArmIndex>(l);
    }
  }
  if (best == 0) {
    choice.degenerate = true;
    choice.arm = prior >= 0 ? prior
                            : rng.UniformInt(static_cast<int>(visits.size()));
  }
  return choice;
}

TnePlayer::TnePlayer(PlayerIndex id, int num_arms, int num_contexts,
                     const TneConfig& config, std::uint64_t seed)
    : id_(id),
      num_arms_(num_arms),
      num_contexts_(config.observe_context ? num_contexts : 1),
      config_(config),
      params_{config.epsilon, num_arms, config.acceptance},
      explore_rng_(seed, id, StreamPurpose::kExploration),
      tne_rng_(seed, id, StreamPurpose::kTrialAndError),
      perturb_rng_(seed, id, StreamPurpose::kPerturbation),
      clock_(config.schedule),
      estimator_(num_arms, num_contexts_),
      perturbed_(static_cast<size_t>(num_arms) * num_contexts_, 0.0),
      states_(num_contexts_),
      visits_(static_cast<size_t>(num_arms) * num_contexts_, 0),
      policy_(num_contexts_, -1) {
  if (num_arms < 1) throw ConfigError("num_arms", "must be >= 1");
  if (!(config.epsilon >= 0.0 && config.epsilon <= 1.0)) {
    throw ConfigError("epsilon", "must lie in [0,1]");
  }
  if (!(config.xi >= 0.0 && config.xi < 1.0)) {
    throw ConfigError("xi", "must lie in [0,1)");
  }
}

void TnePlayer::BeginLearning(int k) {
  if (!estimator_.MatchesSampleLog()) {
    throw std::logic_error("player " + std::to_string(id_) +
                           ": running estimates diverge from the sample log");
  }
  ++estimator_checks_;
  for (ArmIndex l = 0; l < num_arms_; ++l) {
    for (ContextIndex x = 0; x < num_contexts_; ++x) {
      const double noise = perturb_rng_.Uniform(-config_.xi, config_.xi);
      perturbed_[Index(l, x)] =
          std::clamp(estimator_.Estimate(l, x) + noise / k, 0.0, 1.0);
    }
  }
  states_ = EpochInitStates(k, policy_, num_arms_, tne_rng_);
  std::fill(visits_.begin(), visits_.end(), 0);
}

void TnePlayer::BeginExploitation() {
  std::vector<std::int64_t> column(num_arms_);
  for (ContextIndex x = 0; x < num_contexts_; ++x) {
    for (ArmIndex l = 0; l < num_arms_; ++l) column[l] = visits_[Index(l, x)];
    const auto choice = ExploitPolicy(column, policy_[x], tne_rng_);
    policy_[x] = choice.arm;
    if (choice.degenerate) ++degenerate_policies_;
  }
}

ArmIndex TnePlayer::Act(std::optional<ContextIndex> context) {
  const ContextIndex x = config_.observe_context ? context.value_or(0) : 0;
  if (x < 0 || x >= num_contexts_) {
    throw ContractViolation("context label outside the player's context set");
  }
  const EpochPosition& pos = clock_.position();
  if (pos.at_phase_start()) {
    if (pos.phase == Phase::kLearning) BeginLearning(pos.epoch);
    if (pos.phase == Phase::kExploitation) BeginExploitation();
  }
  last_context_ = x;
  last_phase_ = pos.phase;
  switch (pos.phase) {
    case Phase::kExploration:
      last_arm_ = explore_rng_.UniformInt(num_arms_);
      break;
    case Phase::kLearning:
      last_arm_ = SelectAction(states_[x], params_, tne_rng_);
      break;
    default:
      last_arm_ = policy_[x];
      break;
  }
  return last_arm_;
}

void TnePlayer::Observe(const SlotFeedback& feedback) {
  switch (last_phase_) {
    case Phase::kExploration:
      estimator_.Record(last_context_, last_arm_, feedback.reward);
      break;
    case Phase::kLearning: {
      const double payoff =
          feedback.collided ? 0.0 : perturbed_[Index(last_arm_, last_context_)];
      AuxState& state = states_[last_context_];
      state = TneTransition(state, last_arm_, payoff, params_, tne_rng_);
      if (CountsAsVisit(state, payoff)) ++visits_[Index(last_arm_, last_context_)];
      break;
    }
    default:
      break;
  }
  clock_.Advance();
}

}  // namespace mpmab
