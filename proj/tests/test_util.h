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


#ifndef MPMAB_TESTS_TEST_UTIL_H_
#define MPMAB_TESTS_TEST_UTIL_H_

#include <memory>
#include <vector>

#include "mpmab/environment.h"
#include "mpmab/player.h"

namespace mpmab::testing {

// Point-mass environment with means[m][l][x].
inline std::unique_ptr<SyntheticEnv> PointMassEnv(
    const std::vector<std::vector<std::vector<double>>>& means,
    std::vector<double> context_probs) {
  SyntheticEnv::CellTable cells(means.size());
  for (size_t m = 0; m < means.size(); ++m) {
    cells[m].resize(means[m].size());
    for (size_t l = 0; l < means[m].size(); ++l) {
      for (double v : means[m][l]) cells[m][l].push_back(ArmDistribution::PointMass(v));
    }
  }
  return std::make_unique<SyntheticEnv>(ContextProcess(std::move(context_probs)),
                                        std::move(cells));
}

// Single-context environment with continuous uniform cells [lo, hi].
inline std::unique_ptr<SyntheticEnv> UniformEnv(
    const std::vector<std::vector<std::pair<double, double>>>& bounds) {
  SyntheticEnv::CellTable cells(bounds.size());
  for (size_t m = 0; m < bounds.size(); ++m) {
    for (const auto& [lo, hi] : bounds[m]) {
      cells[m].push_back({ArmDistribution::ContinuousUniform(lo, hi)});
    }
  }
  return std::make_unique<SyntheticEnv>(ContextProcess::Uniform(1), std::move(cells));
}

}  // namespace mpmab::testing

#endif  // MPMAB_TESTS_TEST_UTIL_H_
