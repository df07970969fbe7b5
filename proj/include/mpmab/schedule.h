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

#ifndef MPMAB_SCHEDULE_H_
#define MPMAB_SCHEDULE_H_

#include <cstdint>
#include <vector>

#include "mpmab/core.h"

namespace mpmab {

// Phase lengths of epoch k >= 1:
//   exploration  f(k) = c1
//   learning     g(k) = ceil(c2 * k^delta)
//   exploitation h(k) = c3 * 2^k
class EpochSchedule {
 public:
  EpochSchedule(std::int64_t c1, std::int64_t c2, std::int64_t c3,
                double delta);

  std::int64_t c1() const { return c1_; }
  std::int64_t c2() const { return c2_; }
  std::int64_t c3() const { return c3_; }
  double delta() const { return delta_; }

  std::int64_t ExplorationLength(int k) const;
  std::int64_t LearningLength(int k) const;
  std::int64_t ExploitationLength(int k) const;
  std::int64_t EpochLength(int k) const;

  // Slot counts t (1-based, i.e. number of completed slots) at which an
  // epoch ends, for all epochs ending at or before `horizon`.
  std::vector<std::int64_t> EpochEnds(std::int64_t horizon) const;

 private:
  std::int64_t c1_, c2_, c3_;
  double delta_;
};

struct EpochPosition {
  int epoch = 1;
  Phase phase = Phase::kExploration;
  std::int64_t offset = 0;  // slots already spent in this phase
  std::int64_t length = 0;  // total length of this phase

  bool at_phase_start() const { return offset == 0; }
};

// Walks the schedule one slot at a time. Zero-length phases are skipped.
class EpochClock {
 public:
  explicit EpochClock(const EpochSchedule& schedule);

  const EpochPosition& position() const { return position_; }
  void Advance();

 private:
  void SkipEmpty();
  std::int64_t LengthOf(int epoch, Phase phase) const;

  EpochSchedule schedule_;
  EpochPosition position_;
};

}  // namespace mpmab

#endif  // MPMAB_SCHEDULE_H_
