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

#ifndef MPMAB_PLAYER_H_
#define MPMAB_PLAYER_H_

#include <optional>
#include <vector>

#include "mpmab/core.h"

namespace mpmab {

// What a player learns about its own slot: its realized reward and whether
// it shared the arm with someone.
struct SlotFeedback {
  double reward = 0.0;
  bool collided = false;
};

// A decentralized decision maker. Each slot the harness calls Act() on
// every player, resolves collisions, then calls Observe() on every player.
class Player {
 public:
  virtual ~Player() = default;

  // `context` is empty when contexts are hidden from the players.
  virtual ArmIndex Act(std::optional<ContextIndex> context) = 0;
  virtual void Observe(const SlotFeedback& feedback) = 0;
  // Phase of the slot most recently passed to Act().
  virtual Phase phase() const = 0;
  // Current exploitation policy, one arm per context the player discerns
  // (a single entry for context-blind players). -1 where undefined.
  virtual std::vector<ArmIndex> policy() const = 0;
};

}  // namespace mpmab

#endif  // MPMAB_PLAYER_H_
