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

#ifndef MPMAB_ENVIRONMENT_H_
#define MPMAB_ENVIRONMENT_H_

#include <memory>
#include <vector>

#include "mpmab/core.h"
#include "mpmab/rng.h"

namespace mpmab {

// I.i.d. categorical process over the context labels.
class ContextProcess {
 public:
  explicit ContextProcess(std::vector<double> probs);
  static ContextProcess Uniform(int num_contexts);

  int num_contexts() const { return static_cast<int>(probs_.size()); }
  const std::vector<double>& probs() const { return probs_; }
  ContextIndex Sample(RngStream& rng) const { return rng.Categorical(probs_); }

 private:
  std::vector<double> probs_;
};

// Bounded per-cell value distribution on [0,1].
struct ArmDistribution {
  enum class Kind { kDiscreteUniform, kContinuousUniform, kPointMass };

  Kind kind = Kind::kPointMass;
  std::vector<double> values;  // kDiscreteUniform support
  double lo = 0.0;             // kContinuousUniform bounds; kPointMass uses lo
  double hi = 0.0;

  static ArmDistribution PointMass(double value);
  static ArmDistribution DiscreteUniform(std::vector<double> values);
  static ArmDistribution ContinuousUniform(double lo, double hi);

  double Mean() const;
  double Sample(RngStream& rng) const;
  // Throws ConfigError naming `field` unless the support lies in [0,1].
  void Validate(const std::string& field) const;

  bool operator==(const ArmDistribution&) const = default;
};

// What the environment produces for one slot. Players are shown the context
// (in observable mode) and their own realized entry, never the full matrix.
struct EnvObservation {
  ContextIndex context = 0;
  RewardMatrix reward_matrix;
};

class Environment {
 public:
  virtual ~Environment() = default;

  virtual const GameDims& dims() const = 0;
  virtual const ContextProcess& context_process() const = 0;
  virtual EnvObservation Step(RngStream& rng) = 0;
  // Exact E{r_{m,l} | x} of the configured distributions.
  virtual double TrueMean(PlayerIndex m, ArmIndex l, ContextIndex x) const = 0;
};

// Matrix of TrueMean values for one context.
RewardMatrix MeanMatrix(const Environment& env, ContextIndex x);
// Context-marginalized mean matrix E_x{ E{r | x} }.
RewardMatrix MarginalMeanMatrix(const Environment& env);

// Independent per-(player, arm, context) distributions.
class SyntheticEnv : public Environment {
 public:
  // cells is indexed [player][arm][context].
  using CellTable = std::vector<std::vector<std::vector<ArmDistribution>>>;

  SyntheticEnv(ContextProcess contexts, CellTable cells);

  const GameDims& dims() const override { return dims_; }
  const ContextProcess& context_process() const override { return contexts_; }
  EnvObservation Step(RngStream& rng) override;
  double TrueMean(PlayerIndex m, ArmIndex l, ContextIndex x) const override;

  const ArmDistribution& cell(PlayerIndex m, ArmIndex l, ContextIndex x) const {
    return cells_[m][l][x];
  }

 private:
  ContextProcess contexts_;
  CellTable cells_;
  GameDims dims_;
};

// Relabels the contexts of an inner environment through a permutation while
// leaving every draw untouched. Used for paired context-blindness checks.
class PermutedContextEnv : public Environment {
 public:
  PermutedContextEnv(std::unique_ptr<Environment> inner,
                     std::vector<ContextIndex> permutation);

  const GameDims& dims() const override { return inner_->dims(); }
  const ContextProcess& context_process() const override { return process_; }
  EnvObservation Step(RngStream& rng) override;
  double TrueMean(PlayerIndex m, ArmIndex l, ContextIndex x) const override;

 private:
  std::unique_ptr<Environment> inner_;
  std::vector<ContextIndex> permutation_;  // inner label -> outer label
  std::vector<ContextIndex> inverse_;
  ContextProcess process_;
};

// Scalar Gauss-Markov speed process
//   s_t = a s_{t-1} + (1 - a) mean + sqrt(1 - a^2) stddev w_t,
// started from its stationary law N(mean, stddev^2).
class GaussMarkovMobility {
 public:
  GaussMarkovMobility(double memory, double mean_speed, double speed_stddev,
                      RngStream& rng);

  double speed() const { return speed_; }
  double Step(RngStream& rng);

 private:
  double memory_;
  double mean_speed_;
  double speed_stddev_;
  double speed_;
};

struct LicensedUser {
  std::vector<double> power_levels_dbm;
};

// Parameters of the IoT channel-allocation scenario. Contexts enumerate
// (licensed user, power level) pairs in user-major order.
struct IotScenarioParams {
  int num_devices = 10;
  int num_channels = 12;
  std::vector<LicensedUser> licensed_users = {
      {{20.0, 30.0}}, {{20.0, 30.0}}, {{20.0, 30.0}}};
  std::vector<double> context_probs;  // empty: uniform

  double area_side_m = 200.0;
  double link_distance_min_m = 5.0;
  double link_distance_max_m = 30.0;
  double licensed_distance_min_m = 300.0;
  double licensed_distance_max_m = 1000.0;
  double reference_distance_m = 1.0;
  double pathloss_exponent = 3.5;
  double tx_power_dbm = 0.0;
  double noise_dbm = -90.0;
  double shadowing_stddev_db = 4.0;

  double mobility_memory = 0.8;
  double mean_speed_mps = 1.0;
  double speed_stddev_mps = 0.5;
  // Nakagami-m fading power, unit mean, with
  //   m(s) = 0.5 + (static_shape - 0.5) / (1 + (s / speed_reference)^2).
  double static_fading_shape = 4.0;
  double speed_reference_mps = 1.0;

  std::uint64_t scenario_seed = 7;

  int num_contexts() const;
  void Validate() const;
};

// Immutable geometry and link budget of a scenario, shared by all runs of
// an experiment.
class IotScenario {
 public:
  explicit IotScenario(IotScenarioParams params);

  const IotScenarioParams& params() const { return params_; }
  const GameDims& dims() const { return dims_; }
  const ContextProcess& context_process() const { return contexts_; }

  // Linear mean SINR for unit fading: desired power over noise plus the
  // licensed interference given by the context.
  double MeanSinr(PlayerIndex device, ArmIndex channel, ContextIndex x) const;
  double MaxSinr() const { return max_sinr_; }
  double InterferenceMw(PlayerIndex device, ContextIndex x) const;
  double FadingShape(double speed) const;
  double TrueMean(PlayerIndex m, ArmIndex l, ContextIndex x) const {
    return true_means_[Index(m, l, x)];
  }

  // Licensed user and power level addressed by a context label.
  std::pair<int, int> ContextToUserLevel(ContextIndex x) const;

  double desired_gain(PlayerIndex m, ArmIndex l) const {
    return desired_gain_[static_cast<size_t>(m) * dims_.num_arms() + l];
  }

 private:
  size_t Index(PlayerIndex m, ArmIndex l, ContextIndex x) const {
    return (static_cast<size_t>(m) * dims_.num_arms() + l) *
               dims_.num_contexts() + x;
  }
  double ComputeMean(double mean_sinr) const;

  IotScenarioParams params_;
  GameDims dims_;
  ContextProcess contexts_;
  std::vector<std::pair<int, int>> context_table_;
  double max_sinr_ = 0.0;
  std::vector<double> desired_gain_;       // [m][l], linear, includes pathloss
  std::vector<double> interference_mw_;    // [m][x]
  std::vector<double> true_means_;         // [m][l][x]
};

// Normalized rate min(1, log2(1 + SINR) / log2(1 + SINR_max)) for a given
// fading power draw.
double IotReward(const IotScenario& scenario, PlayerIndex device,
                 ArmIndex channel, ContextIndex x, double fading_draw);

// Per-run IoT environment: shares the scenario and owns the mobility state.
class IotEnv : public Environment {
 public:
  IotEnv(std::shared_ptr<const IotScenario> scenario, RngStream& rng);

  const GameDims& dims() const override { return scenario_->dims(); }
  const ContextProcess& context_process() const override {
    return scenario_->context_process();
  }
  EnvObservation Step(RngStream& rng) override;
  double TrueMean(PlayerIndex m, ArmIndex l, ContextIndex x) const override {
    return scenario_->TrueMean(m, l, x);
  }

  const IotScenario& scenario() const { return *scenario_; }
  const std::vector<GaussMarkovMobility>& mobility() const { return mobility_; }

 private:
  std::shared_ptr<const IotScenario> scenario_;
  std::vector<GaussMarkovMobility> mobility_;
};

}  // namespace mpmab

#endif  // MPMAB_ENVIRONMENT_H_
