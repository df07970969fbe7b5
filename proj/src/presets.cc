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

#include "mpmab/presets.h"

#include <cmath>

namespace mpmab {

namespace {

constexpr int kScalabilityPlayers[] = {5, 10, 15, 20, 25, 30};

// Per-context means [context][player][arm]. Each context has a different
// optimum of value 1.7, and that optimum is the only pure equilibrium of
// the context's game.
constexpr double kPaperSmallMeans[3][2][3] = {
    {{0.9, 0.4, 0.2}, {0.3, 0.8, 0.5}},  // optimum (0, 1)
    {{0.3, 0.8, 0.5}, {0.5, 0.4, 0.9}},  // optimum (1, 2)
    {{0.5, 0.2, 0.9}, {0.8, 0.5, 0.4}},  // optimum (2, 0)
};

ExperimentConfig IotPreset(int num_players, int num_arms) {
  ExperimentConfig c;
  c.num_players = num_players;
  c.num_arms = num_arms;
  c.environment.kind = EnvironmentSpec::Kind::kIot;
  c.environment.iot.num_devices = num_players;
  c.environment.iot.num_channels = num_arms;
  c.num_contexts = c.environment.iot.num_contexts();
  return c;
}

}  // namespace

SyntheticSpec PaperSmallEnvironment() {
  SyntheticSpec s;
  s.context_probs = ContextProcess::Uniform(3).probs();
  s.cells.assign(2, std::vector<std::vector<ArmDistribution>>(
                        3, std::vector<ArmDistribution>(3)));
  for (int x = 0; x < 3; ++x) {
    for (int m = 0; m < 2; ++m) {
      for (int l = 0; l < 3; ++l) {
        const double mu = kPaperSmallMeans[x][m][l];
        s.cells[m][l][x] = ArmDistribution::DiscreteUniform(
            {std::round((mu - 0.1) * 10) / 10, mu,
             std::round((mu + 0.1) * 10) / 10});
      }
    }
  }
  return s;
}

std::vector<std::string> PresetNames() {
  return {"paper-small", "paper-iot", "scalability"};
}

int PresetSize(const std::string& name) {
  if (name == "paper-small" || name == "paper-iot") return 1;
  if (name == "scalability") return std::size(kScalabilityPlayers);
  throw ConfigError("preset", "unknown preset \"" + name +
                                  "\" (expected paper-small, paper-iot or "
                                  "scalability)");
}

ExperimentConfig MakePreset(const std::string& name, int index) {
  const int size = PresetSize(name);
  if (index < 0 || index >= size) {
    throw ConfigError("preset", "index " + std::to_string(index) +
                                    " out of range for \"" + name + "\"");
  }
  ExperimentConfig c;
  if (name == "paper-small") {
    c.num_players = 2;
    c.num_arms = 3;
    c.num_contexts = 3;
    c.environment.synthetic = PaperSmallEnvironment();
    c.horizon = 200000;
    c.reps = 200;
    c.log_every = 1000;
  } else if (name == "paper-iot") {
    c = IotPreset(10, 12);
    c.c2 = 3000;
    c.horizon = 1000000;
    c.reps = 20;
    c.log_every = 5000;
  } else {
    const int m = kScalabilityPlayers[index];
    c = IotPreset(m, static_cast<int>(std::ceil(1.2 * m)));
    c.c2 = 600 * m;
    c.horizon = 400000;
    c.reps = 5;
    c.log_every = 2000;
  }
  c.name = name;
  c.output_dir = "results/" + name;
  if (name == "scalability") {
    c.name += "-m" + std::to_string(c.num_players);
    c.output_dir = "results/scalability/m" + std::to_string(c.num_players);
  }
  c.Validate();
  return c;
}

}  // namespace mpmab
