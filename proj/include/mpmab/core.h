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

#ifndef MPMAB_CORE_H_
#define MPMAB_CORE_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpmab {

using PlayerIndex = int;
using ArmIndex = int;
using ContextIndex = int;

// Raised for any invalid configuration or dimension mismatch. `field` names
// the offending configuration key (dotted path) when there is one.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Raised when a documented precondition of an operation is broken by the
// caller (as opposed to a bad configuration).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Shape of a contextual multi-player bandit game: M players, L arms, X
// contexts, with L >= M.
class GameDims {
 public:
  GameDims(int num_players, int num_arms, int num_contexts);

  int num_players() const { return num_players_; }
  int num_arms() const { return num_arms_; }
  int num_contexts() const { return num_contexts_; }

  bool operator==(const GameDims&) const = default;

 private:
  int num_players_;
  int num_arms_;
  int num_contexts_;
};

// One arm per player, in player order.
using JointAction = std::vector<ArmIndex>;

// Dense M x L matrix of per-round arm values in [0,1], row-major by player.
class RewardMatrix {
 public:
  RewardMatrix() = default;
  RewardMatrix(int num_players, int num_arms, double fill = 0.0);
  RewardMatrix(std::initializer_list<std::initializer_list<double>> rows);

  int num_players() const { return num_players_; }
  int num_arms() const { return num_arms_; }

  double operator()(PlayerIndex m, ArmIndex l) const {
    return values_[static_cast<size_t>(m) * num_arms_ + l];
  }
  double& operator()(PlayerIndex m, ArmIndex l) {
    return values_[static_cast<size_t>(m) * num_arms_ + l];
  }

  std::span<const double> row(PlayerIndex m) const {
    return {values_.data() + static_cast<size_t>(m) * num_arms_,
            static_cast<size_t>(num_arms_)};
  }

  bool operator==(const RewardMatrix&) const = default;

 private:
  int num_players_ = 0;
  int num_arms_ = 0;
  std::vector<double> values_;
};

using RealizedRewards = std::vector<double>;

// Zero-on-collision reward model: player m receives rewards(m, a_m) when it
// is the only player on a_m, and 0 otherwise.
RealizedRewards ResolveRewards(const JointAction& actions,
                               const RewardMatrix& rewards);

// Sorted indices of players that share their arm with at least one other
// player.
std::vector<PlayerIndex> CollisionSet(const JointAction& actions);

// Per-player collision flags; same information as CollisionSet.
std::vector<bool> CollisionFlags(const JointAction& actions);

// Which stage of its algorithm a player was in when a slot was played.
enum class Phase : std::uint8_t {
  kExploration = 0,
  kLearning = 1,
  kExploitation = 2,
  kSettle = 3,
  kFixed = 4,
  kStatic = 5,
};

const char* PhaseName(Phase phase);

// Everything observable about one synchronized slot.
struct RoundRecord {
  std::int64_t slot = 0;
  ContextIndex context = 0;
  JointAction actions;
  std::vector<double> sampled;   // rewards(m, a_m) before collision zeroing
  RealizedRewards realized;
  std::vector<PlayerIndex> collisions;
  Phase phase = Phase::kStatic;  // phase of player 0; all players agree
};

}  // namespace mpmab

#endif  // MPMAB_CORE_H_
