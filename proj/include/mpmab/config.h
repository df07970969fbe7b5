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

#ifndef MPMAB_CONFIG_H_
#define MPMAB_CONFIG_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mpmab/environment.h"
#include "mpmab/metrics.h"
#include "mpmab/schedule.h"
#include "mpmab/trial_and_error.h"

namespace mpmab {

enum class Algorithm {
  kTne,
  kTneContextless,
  kMusicalChairs,
  kRandomStatic,
  kOracle,
};

const char* AlgorithmName(Algorithm algorithm);
// Throws ConfigError("algorithm", ...) for unknown names.
Algorithm ParseAlgorithm(const std::string& name);

struct SyntheticSpec {
  std::vector<double> context_probs;
  SyntheticEnv::CellTable cells;  // [player][arm][context]
};

struct EnvironmentSpec {
  enum class Kind { kSynthetic, kIot };
  Kind kind = Kind::kSynthetic;
  SyntheticSpec synthetic;
  IotScenarioParams iot;
};

// Everything that defines an experiment. Defaults follow the reference
// parameter set: eps = 0.01, xi = 0.001, delta = 1, c1 = 100, c2 = 200,
// c3 = 100, F(u) = -0.12 u + 0.15, G(u) = -0.35 u + 0.4.
struct ExperimentConfig {
  std::string name = "experiment";
  Algorithm algorithm = Algorithm::kTne;
  int num_players = 0;
  int num_arms = 0;
  int num_contexts = 0;
  EnvironmentSpec environment;

  std::int64_t c1 = 100;
  std::int64_t c2 = 200;
  std::int64_t c3 = 100;
  double delta = 1.0;
  double epsilon = 0.01;
  double xi = 0.001;
  AcceptanceFunctions acceptance;
  std::int64_t mc_exploration_rounds = 3000;

  std::int64_t horizon = 200000;
  int reps = 1;
  std::uint64_t seed = 1;
  std::int64_t log_every = 0;  // 0: horizon / 100
  // Empty ("auto"): marginal for tne-contextless, contextual otherwise.
  std::optional<RegretBenchmark> regret_benchmark;
  bool raw_log = false;
  bool per_run_values = false;
  int threads = 1;  // 0: hardware concurrency
  std::string output_dir = "results";

  EpochSchedule schedule() const { return {c1, c2, c3, delta}; }
  std::int64_t effective_log_every() const;
  RegretBenchmark effective_regret_benchmark() const;

  // Throws ConfigError naming the offending field; returns warnings for
  // soft conditions.
  std::vector<std::string> Validate() const;

  bool operator==(const ExperimentConfig&) const;
};

nlohmann::json ConfigToJson(const ExperimentConfig& config);
// Missing keys take their defaults; unknown keys and invalid values are
// rejected with a field-specific ConfigError. The result is validated.
ExperimentConfig ConfigFromJson(const nlohmann::json& json);
ExperimentConfig LoadConfigFile(const std::string& path);

// Sets one dotted key (e.g. "run.seed") from text. The text is parsed as
// JSON when possible and taken as a string otherwise.
void SetConfigValue(ExperimentConfig& config, const std::string& dotted_key,
                    const std::string& value);

// 16 hex digits of FNV-1a over the canonical JSON of every field that
// affects results (output_dir and threads are excluded).
std::string ConfigHash(const ExperimentConfig& config);

// Builds a fresh environment for one run. IoT scenarios share their static
// geometry across runs.
class EnvironmentFactory {
 public:
  explicit EnvironmentFactory(const ExperimentConfig& config);

  std::unique_ptr<Environment> Make(RngStream& env_rng) const;
  // Environment instance for ground-truth queries only.
  const Environment& reference() const { return *reference_; }

 private:
  EnvironmentSpec spec_;
  std::shared_ptr<const IotScenario> scenario_;
  std::unique_ptr<Environment> reference_;
};

}  // namespace mpmab

#endif  // MPMAB_CONFIG_H_
