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

#ifndef MPMAB_ASSIGNMENT_H_
#define MPMAB_ASSIGNMENT_H_

#include <span>
#include <vector>

#include "mpmab/core.h"

namespace mpmab {

// Injective player -> arm map and its value, the sum of the selected
// entries accumulated in player order.
struct AssignmentSolution {
  std::vector<ArmIndex> assignment;
  double value = 0.0;
};

// Largest L accepted by the exhaustive routines.
inline constexpr int kBruteForceMaxArms = 8;

// Maximum-weight assignment of the M rows of `means` to distinct columns
// (M <= L), via the Hungarian method on the rectangular matrix. Among
// optimal assignments the lexicographically smallest is returned.
AssignmentSolution OptimalAssignment(const RewardMatrix& means);

// Exhaustive search; refuses L > kBruteForceMaxArms. Ties resolve to the
// lexicographically smallest assignment.
AssignmentSolution BruteForceAssignment(const RewardMatrix& means);

// (V* - V~) / (2M), where V~ is the best value strictly below the optimum
// V*. +infinity when every assignment attains V*. Exhaustive, same guard
// as BruteForceAssignment.
double SecondBestGap(const RewardMatrix& means);

// Minimum SecondBestGap over a set of per-context mean matrices.
double GapConditionMargin(std::span<const RewardMatrix> per_context);

}  // namespace mpmab

#endif  // MPMAB_ASSIGNMENT_H_
