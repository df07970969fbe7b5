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

#include "mpmab/estimator.h"

namespace mpmab {

ValueEstimator::ValueEstimator(int num_arms, int num_contexts)
    : num_arms_(num_arms),
      num_contexts_(num_contexts),
      sums_(static_cast<size_t>(num_arms) * num_contexts, 0.0),
      counts_(static_cast<size_t>(num_arms) * num_contexts, 0) {}

void ValueEstimator::Record(ContextIndex x, ArmIndex arm,
                            double realized_reward) {
  if (realized_reward == 0.0) return;
  samples_.push_back({x, arm, realized_reward});
  sums_[Index(arm, x)] += realized_reward;
  ++counts_[Index(arm, x)];
}

double ValueEstimator::Estimate(ArmIndex arm, ContextIndex x) const {
  const size_t i = Index(arm, x);
  return counts_[i] == 0 ? 0.0 : sums_[i] / static_cast<double>(counts_[i]);
}

bool ValueEstimator::MatchesSampleLog() const {
  std::vector<double> sums(sums_.size(), 0.0);
  std::vector<std::int64_t> counts(counts_.size(), 0);
  for (const auto& s : samples_) {
    sums[Index(s.arm, s.context)] += s.value;
    ++counts[Index(s.arm, s.context)];
  }
  for (size_t i = 0; i < sums.size(); ++i) {
    const double from_log =
        counts[i] == 0 ? 0.0 : sums[i] / static_cast<double>(counts[i]);
    const double running =
        counts_[i] == 0 ? 0.0 : sums_[i] / static_cast<double>(counts_[i]);
    if (counts[i] != counts_[i] || from_log != running) return false;
  }
  return true;
}

}  // namespace mpmab
