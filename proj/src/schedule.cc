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

#include "mpmab/schedule.h"

#include <cmath>
#include <limits>

namespace mpmab {

namespace {
constexpr std::int64_t kMaxLength = std::numeric_limits<std::int64_t>::max() / 4;
}  // namespace

EpochSchedule::EpochSchedule(std::int64_t c1, std::int64_t c2, std::int64_t c3,
                             double delta)
    : c1_(c1), c2_(c2), c3_(c3), delta_(delta) {
  if (c1 < 1) throw ConfigError("schedule.c1", "must be a positive integer");
  if (c2 < 1) throw ConfigError("schedule.c2", "must be a positive integer");
  if (c3 < 1) throw ConfigError("schedule.c3", "must be a positive integer");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ConfigError("schedule.delta", "must be a finite real > 0");
  }
}

std::int64_t EpochSchedule::ExplorationLength(int /*k*/) const { return c1_; }

std::int64_t EpochSchedule::LearningLength(int k) const {
  const double v = std::ceil(static_cast<double>(c2_) *
                             std::pow(static_cast<double>(k), delta_));
  return v >= static_cast<double>(kMaxLength) ? kMaxLength
                                              : static_cast<std::int64_t>(v);
}

std::int64_t EpochSchedule::ExploitationLength(int k) const {
  if (k >= 60) return kMaxLength;
  const std::int64_t pow2 = std::int64_t{1} << k;
  if (pow2 > kMaxLength / c3_) return kMaxLength;
  return c3_ * pow2;
}

std::int64_t EpochSchedule::EpochLength(int k) const {
  return ExplorationLength(k) + LearningLength(k) + ExploitationLength(k);
}

std::vector<std::int64_t> EpochSchedule::EpochEnds(std::int64_t horizon) const {
  std::vector<std::int64_t> ends;
  std::int64_t t = 0;
  for (int k = 1; t < horizon; ++k) {
    const std::int64_t len = EpochLength(k);
    if (len > horizon - t) break;
    t += len;
    ends.push_back(t);
  }
  return ends;
}

EpochClock::EpochClock(const EpochSchedule& schedule) : schedule_(schedule) {
  position_.epoch = 1;
  position_.phase = Phase::kExploration;
  position_.offset = 0;
  position_.length = LengthOf(1, Phase::kExploration);
  SkipEmpty();
}

std::int64_t EpochClock::LengthOf(int epoch, Phase phase) const {
  switch (phase) {
    case Phase::kExploration: return schedule_.ExplorationLength(epoch);
    case Phase::kLearning: return schedule_.LearningLength(epoch);
    default: return schedule_.ExploitationLength(epoch);
  }
}

void EpochClock::SkipEmpty() {
  while (position_.offset >= position_.length) {
    switch (position_.phase) {
      case Phase::kExploration: position_.phase = Phase::kLearning; break;
      case Phase::kLearning: position_.phase = Phase::kExploitation; break;
      default:
        position_.phase = Phase::kExploration;
        ++position_.epoch;
        break;
    }
    position_.offset = 0;
    position_.length = LengthOf(position_.epoch, position_.phase);
  }
}

void EpochClock::Advance() {
  ++position_.offset;
  SkipEmpty();
}

}  // namespace mpmab
