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

#ifndef MPMAB_PRESETS_H_
#define MPMAB_PRESETS_H_

#include <string>
#include <vector>

#include "mpmab/config.h"

namespace mpmab {

// Named experiment presets:
//   paper-small  M=2, L=3, X=3 synthetic fixture with discrete-uniform cells
//   paper-iot    M=10, L=12, 3 licensed users x 2 power levels
//   scalability  M in {5,10,...,30}, L = ceil(1.2 M), T = 4e5 (one config
//                per M)
std::vector<std::string> PresetNames();

// Number of configs a preset expands to; throws ConfigError("preset", ...)
// for unknown names.
int PresetSize(const std::string& name);

ExperimentConfig MakePreset(const std::string& name, int index = 0);

// The paper-small synthetic environment on its own.
SyntheticSpec PaperSmallEnvironment();

}  // namespace mpmab

#endif  // MPMAB_PRESETS_H_
