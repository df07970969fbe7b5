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

#ifndef MPMAB_ESTIMATOR_H_
#define MPMAB_ESTIMATOR_H_

#include <cstdint>
#include <vector>

#include "mpmab/core.h"

namespace mpmab {

// Per-(arm, context) running mean of a player's non-colliding observations.
// The full sample log persists for the lifetime of the player; it is never
// reset between epochs.
class ValueEstimator {
 public:
  struct Sample {
    ContextIndex context;
    ArmIndex arm;
    double value;
  };

  ValueEstimator(int num_arms, int num_contexts);

  int num_arms() const { return num_arms_; }
  int num_contexts() const { return num_contexts_; }

  // Zero rewards (collisions) are ignored.
  void Record(ContextIndex x, ArmIndex arm, double realized_reward);

  // Mean of the recorded values, or 0 for a cell never observed.
  double Estimate(ArmIndex arm, ContextIndex x) const;
  std::int64_t Count(ArmIndex arm, ContextIndex x) const {
    return counts_[Index(arm, x)];
  }
  const std::vector<Sample>& samples() const { return samples_; }

  // Recomputes every cell mean from the sample log and checks for exact
  // equality with the running estimate.
  bool MatchesSampleLog() const;

 private:
  size_t Index(ArmIndex arm, ContextIndex x) const {
    return static_cast<size_t>(arm) * num_contexts_ + x;
  }

  int num_arms_;
  int num_contexts_;
  std::vector<double> sums_;
  std::vector<std::int64_t> counts_;
  std::vector<Sample> samples_;
};

}  // namespace mpmab

#endif  // MPMAB_ESTIMATOR_H_
