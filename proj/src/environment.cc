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

#include "mpmab/environment.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mpmab {

ContextProcess::ContextProcess(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw ConfigError("context_probs", "must have at least one entry");
  }
  double total = 0.0;
  for (size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= 0.0) || !std::isfinite(probs_[i])) {
      throw ConfigError("context_probs[" + std::to_string(i) + "]",
                        "must be a finite non-negative probability");
    }
    total += probs_[i];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ConfigError("context_probs", "must sum to 1 (sum is " +
                                           std::to_string(total) + ")");
  }
}

ContextProcess ContextProcess::Uniform(int num_contexts) {
  if (num_contexts < 1) throw ConfigError("num_contexts", "must be >= 1");
  std::vector<double> p(num_contexts, 1.0 / num_contexts);
  // Put the rounding residue on the last entry so the sum is exact enough.
  double head = 0.0;
  for (int i = 0; i + 1 < num_contexts; ++i) head += p[i];
  p.back() = 1.0 - head;
  return ContextProcess(std::move(p));
}

ArmDistribution ArmDistribution::PointMass(double value) {
  ArmDistribution d;
  d.kind = Kind::kPointMass;
  d.lo = d.hi = value;
  return d;
}

ArmDistribution ArmDistribution::DiscreteUniform(std::vector<double> values) {
  ArmDistribution d;
  d.kind = Kind::kDiscreteUniform;
  d.values = std::move(values);
  return d;
}

ArmDistribution ArmDistribution::ContinuousUniform(double lo, double hi) {
  ArmDistribution d;
  d.kind = Kind::kContinuousUniform;
  d.lo = lo;
  d.hi = hi;
  return d;
}

double ArmDistribution::Mean() const {
  switch (kind) {
    case Kind::kPointMass: return lo;
    case Kind::kContinuousUniform: return 0.5 * (lo + hi);
    case Kind::kDiscreteUniform:
      return std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
  }
  return 0.0;
}

double ArmDistribution::Sample(RngStream& rng) const {
  switch (kind) {
    case Kind::kPointMass: return lo;
    case Kind::kContinuousUniform: return rng.Uniform(lo, hi);
    case Kind::kDiscreteUniform:
      return values[rng.UniformInt(static_cast<int>(values.size()))];
  }
  return 0.0;
}

void ArmDistribution::Validate(const std::string& field) const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  switch (kind) {
    case Kind::kPointMass:
      if (!in_unit(lo)) throw ConfigError(field, "value must lie in [0,1]");
      break;
    case Kind::kContinuousUniform:
      if (!in_unit(lo) || !in_unit(hi) || lo > hi) {
        throw ConfigError(field, "need 0 <= lo <= hi <= 1");
      }
      break;
    case Kind::kDiscreteUniform:
      if (values.empty()) throw ConfigError(field, "empty value set");
      for (double v : values) {
        if (!in_unit(v)) throw ConfigError(field, "values must lie in [0,1]");
      }
      break;
  }
}

RewardMatrix MeanMatrix(const Environment& env, ContextIndex x) {
  const auto& d = env.dims();
  RewardMatrix out(d.num_players(), d.num_arms());
  for (int m = 0; m < d.num_players(); ++m) {
    for (int l = 0; l < d.num_arms(); ++l) out(m, l) = env.TrueMean(m, l, x);
  }
  return out;
}

RewardMatrix MarginalMeanMatrix(const Environment& env) {
  const auto& d = env.dims();
  const auto& p = env.context_process().probs();
  RewardMatrix out(d.num_players(), d.num_arms());
  for (int m = 0; m < d.num_players(); ++m) {
    for (int l = 0; l < d.num_arms(); ++l) {
      double acc = 0.0;
      for (int x = 0; x < d.num_contexts(); ++x) {
        acc += p[x] * env.TrueMean(m, l, x);
      }
      out(m, l) = acc;
    }
  }
  return out;
}

namespace {

GameDims DimsFromCells(const SyntheticEnv::CellTable& cells,
                       int num_contexts) {
  if (cells.empty() || cells[0].empty()) {
    throw ConfigError("environment.cells", "empty cell table");
  }
  return GameDims(static_cast<int>(cells.size()),
                  static_cast<int>(cells[0].size()), num_contexts);
}

}  // namespace

SyntheticEnv::SyntheticEnv(ContextProcess contexts, CellTable cells)
    : contexts_(std::move(contexts)),
      cells_(std::move(cells)),
      dims_(DimsFromCells(cells_, contexts_.num_contexts())) {
  for (int m = 0; m < dims_.num_players(); ++m) {
    if (static_cast<int>(cells_[m].size()) != dims_.num_arms()) {
      throw ConfigError("environment.cells[" + std::to_string(m) + "]",
                        "every player needs the same number of arms");
    }
    for (int l = 0; l < dims_.num_arms(); ++l) {
      const std::string field = "environment.cells[" + std::to_string(m) +
                                "][" + std::to_string(l) + "]";
      if (static_cast<int>(cells_[m][l].size()) != dims_.num_contexts()) {
        throw ConfigError(field, "needs one distribution per context");
      }
      for (int x = 0; x < dims_.num_contexts(); ++x) {
        cells_[m][l][x].Validate(field + "[" + std::to_string(x) + "]");
      }
    }
  }
}

EnvObservation SyntheticEnv::Step(RngStream& rng) {
  EnvObservation obs;
  obs.context = contexts_.Sample(rng);
  obs.reward_matrix = RewardMatrix(dims_.num_players(), dims_.num_arms());
  for (int m = 0; m < dims_.num_players(); ++m) {
    for (int l = 0; l < dims_.num_arms(); ++l) {
      obs.reward_matrix(m, l) = cells_[m][l][obs.context].Sample(rng);
    }
  }
  return obs;
}

double SyntheticEnv::TrueMean(PlayerIndex m, ArmIndex l, ContextIndex x) const {
  return cells_[m][l][x].Mean();
}

namespace {

std::vector<ContextIndex> InvertPermutation(
    const std::vector<ContextIndex>& perm) {
  std::vector<ContextIndex> inv(perm.size(), -1);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] < 0 || perm[i] >= static_cast<int>(perm.size()) ||
        inv[perm[i]] != -1) {
      throw ConfigError("permutation", "not a permutation of the contexts");
    }
    inv[perm[i]] = static_cast<ContextIndex>(i);
  }
  return inv;
}

std::vector<double> PermuteProbs(const std::vector<double>& probs,
                                 const std::vector<ContextIndex>& perm) {
  std::vector<double> out(probs.size());
  for (size_t i = 0; i < probs.size(); ++i) out[perm[i]] = probs[i];
  return out;
}

}  // namespace

PermutedContextEnv::PermutedContextEnv(std::unique_ptr<Environment> inner,
                                       std::vector<ContextIndex> permutation)
    : inner_(std::move(inner)),
      permutation_(std::move(permutation)),
      inverse_(InvertPermutation(permutation_)),
      process_(PermuteProbs(inner_->context_process().probs(), permutation_)) {
  if (static_cast<int>(permutation_.size()) != inner_->dims().num_contexts()) {
    throw ConfigError("permutation", "size must equal the context count");
  }
}

EnvObservation PermutedContextEnv::Step(RngStream& rng) {
  EnvObservation obs = inner_->Step(rng);
  obs.context = permutation_[obs.context];
  return obs;
}

double PermutedContextEnv::TrueMean(PlayerIndex m, ArmIndex l,
                                    ContextIndex x) const {
  return inner_->TrueMean(m, l, inverse_[x]);
}

GaussMarkovMobility::GaussMarkovMobility(double memory, double mean_speed,
                                         double speed_stddev, RngStream& rng)
    : memory_(memory),
      mean_speed_(mean_speed),
      speed_stddev_(speed_stddev),
      speed_(mean_speed + speed_stddev * rng.Normal()) {
  if (!(memory >= 0.0 && memory <= 1.0)) {
    throw ConfigError("mobility_memory", "must lie in [0,1]");
  }
  if (!(speed_stddev >= 0.0)) {
    throw ConfigError("speed_stddev_mps", "must be >= 0");
  }
}

double GaussMarkovMobility::Step(RngStream& rng) {
  const double w = rng.Normal();
  speed_ = memory_ * speed_ + (1.0 - memory_) * mean_speed_ +
           std::sqrt(1.0 - memory_ * memory_) * speed_stddev_ * w;
  return speed_;
}

}  // namespace mpmab
