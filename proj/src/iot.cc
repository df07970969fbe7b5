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

// IoT channel-allocation scenario: static geometry sampled once per
// scenario seed, Nakagami fading whose severity follows a Gauss-Markov
// device speed, and licensed-user interference selected by the context.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "mpmab/environment.h"

namespace mpmab {

namespace {

double DbmToMw(double dbm) { return std::pow(10.0, dbm / 10.0); }

}  // namespace

int IotScenarioParams::num_contexts() const {
  int n = 0;
  for (const auto& u : licensed_users) {
    n += static_cast<int>(u.power_levels_dbm.size());
  }
  return n;
}

void IotScenarioParams::Validate() const {
  const std::string p = "environment.iot.";
  if (num_devices < 1) throw ConfigError(p + "num_devices", "must be >= 1");
  if (num_channels < num_devices) {
    throw ConfigError(p + "num_channels", "must be >= num_devices");
  }
  if (licensed_users.empty()) {
    throw ConfigError(p + "licensed_users", "need at least one licensed user");
  }
  for (size_t u = 0; u < licensed_users.size(); ++u) {
    if (licensed_users[u].power_levels_dbm.empty()) {
      throw ConfigError(p + "licensed_users[" + std::to_string(u) + "]",
                        "need at least one power level");
    }
  }
  if (!context_probs.empty() &&
      static_cast<int>(context_probs.size()) != num_contexts()) {
    throw ConfigError(p + "context_probs",
                      "length must equal the number of (user, level) pairs (" +
                          std::to_string(num_contexts()) + ")");
  }
  if (!(mobility_memory >= 0.0 && mobility_memory <= 1.0)) {
    throw ConfigError(p + "mobility_memory", "must lie in [0,1]");
  }
  if (!(speed_stddev_mps >= 0.0)) {
    throw ConfigError(p + "speed_stddev_mps", "must be >= 0");
  }
  if (!(link_distance_min_m > 0.0 && link_distance_min_m <= link_distance_max_m)) {
    throw ConfigError(p + "link_distance_min_m",
                      "need 0 < link_distance_min_m <= link_distance_max_m");
  }
  if (!(licensed_distance_min_m > 0.0 &&
        licensed_distance_min_m <= licensed_distance_max_m)) {
    throw ConfigError(p + "licensed_distance_min_m",
                      "need 0 < licensed_distance_min_m <= licensed_distance_max_m");
  }
  if (!(reference_distance_m > 0.0)) {
    throw ConfigError(p + "reference_distance_m", "must be > 0");
  }
  if (!(pathloss_exponent > 0.0)) {
    throw ConfigError(p + "pathloss_exponent", "must be > 0");
  }
  if (!(area_side_m > 0.0)) throw ConfigError(p + "area_side_m", "must be > 0");
  if (!(static_fading_shape >= 0.5)) {
    throw ConfigError(p + "static_fading_shape", "must be >= 0.5");
  }
  if (!(speed_reference_mps > 0.0)) {
    throw ConfigError(p + "speed_reference_mps", "must be > 0");
  }
}

namespace {

ContextProcess MakeIotContexts(const IotScenarioParams& params) {
  params.Validate();
  if (params.context_probs.empty()) {
    return ContextProcess::Uniform(params.num_contexts());
  }
  return ContextProcess(params.context_probs);
}

}  // namespace

IotScenario::IotScenario(IotScenarioParams params)
    : params_(std::move(params)),
      dims_(params_.num_devices, params_.num_channels, params_.num_contexts()),
      contexts_(MakeIotContexts(params_)) {
  for (int u = 0; u < static_cast<int>(params_.licensed_users.size()); ++u) {
    const int levels =
        static_cast<int>(params_.licensed_users[u].power_levels_dbm.size());
    for (int k = 0; k < levels; ++k) context_table_.emplace_back(u, k);
  }

  const double noise_mw = DbmToMw(params_.noise_dbm);
  const double tx_mw = DbmToMw(params_.tx_power_dbm);
  max_sinr_ = tx_mw / noise_mw;

  auto pathloss = [&](double d) {
    return std::pow(std::max(d, params_.reference_distance_m) /
                        params_.reference_distance_m,
                    -params_.pathloss_exponent);
  };

  RngStream geo(params_.scenario_seed, kSharedStream, StreamPurpose::kScenario);
  const int num_m = dims_.num_players();
  const int num_l = dims_.num_arms();
  std::vector<std::pair<double, double>> receivers(num_m);
  std::vector<double> link_distance(num_m);
  for (int m = 0; m < num_m; ++m) {
    const double tx = geo.Uniform(0.0, params_.area_side_m);
    const double ty = geo.Uniform(0.0, params_.area_side_m);
    link_distance[m] =
        geo.Uniform(params_.link_distance_min_m, params_.link_distance_max_m);
    const double angle = geo.Uniform(0.0, 2.0 * std::numbers::pi);
    receivers[m] = {tx + link_distance[m] * std::cos(angle),
                    ty + link_distance[m] * std::sin(angle)};
  }
  const double centre = 0.5 * params_.area_side_m;
  std::vector<std::pair<double, double>> licensed(params_.licensed_users.size());
  for (auto& pos : licensed) {
    const double r = geo.Uniform(params_.licensed_distance_min_m,
                                 params_.licensed_distance_max_m);
    const double angle = geo.Uniform(0.0, 2.0 * std::numbers::pi);
    pos = {centre + r * std::cos(angle), centre + r * std::sin(angle)};
  }

  desired_gain_.resize(static_cast<size_t>(num_m) * num_l);
  for (int m = 0; m < num_m; ++m) {
    for (int l = 0; l < num_l; ++l) {
      const double shadow_db = params_.shadowing_stddev_db * geo.Normal();
      desired_gain_[static_cast<size_t>(m) * num_l + l] =
          tx_mw * std::pow(10.0, shadow_db / 10.0) * pathloss(link_distance[m]);
    }
  }

  const int num_x = dims_.num_contexts();
  interference_mw_.resize(static_cast<size_t>(num_m) * num_x);
  for (int m = 0; m < num_m; ++m) {
    for (int x = 0; x < num_x; ++x) {
      const auto [u, k] = context_table_[x];
      const double dx = receivers[m].first - licensed[u].first;
      const double dy = receivers[m].second - licensed[u].second;
      interference_mw_[static_cast<size_t>(m) * num_x + x] =
          DbmToMw(params_.licensed_users[u].power_levels_dbm[k]) *
          pathloss(std::hypot(dx, dy));
    }
  }

  true_means_.resize(static_cast<size_t>(num_m) * num_l * num_x);
  for (int m = 0; m < num_m; ++m) {
    for (int l = 0; l < num_l; ++l) {
      for (int x = 0; x < num_x; ++x) {
        true_means_[Index(m, l, x)] = ComputeMean(MeanSinr(m, l, x));
      }
    }
  }
}

double IotScenario::InterferenceMw(PlayerIndex device, ContextIndex x) const {
  return interference_mw_[static_cast<size_t>(device) * dims_.num_contexts() +
                          x];
}

double IotScenario::MeanSinr(PlayerIndex device, ArmIndex channel,
                             ContextIndex x) const {
  return desired_gain(device, channel) /
         (DbmToMw(params_.noise_dbm) + InterferenceMw(device, x));
}

double IotScenario::FadingShape(double speed) const {
  const double r = speed / params_.speed_reference_mps;
  return 0.5 + (params_.static_fading_shape - 0.5) / (1.0 + r * r);
}

std::pair<int, int> IotScenario::ContextToUserLevel(ContextIndex x) const {
  return context_table_.at(x);
}

double IotScenario::ComputeMean(double mean_sinr) const {
  const double log_max = std::log2(1.0 + max_sinr_);
  if (!(mean_sinr > 0.0)) return 0.0;
  // Fading power above this value saturates the normalized rate at 1.
  const double saturation = max_sinr_ / mean_sinr;

  auto given_shape = [&](double shape) {
    const double upper = std::min(saturation, 80.0);
    const double log_norm = shape * std::log(shape) - std::lgamma(shape);
    auto integrand = [&](double f) {
      if (f <= 0.0) return 0.0;
      const double pdf =
          std::exp(log_norm + (shape - 1.0) * std::log(f) - shape * f);
      return pdf * std::log2(1.0 + mean_sinr * f) / log_max;
    };
    boost::math::quadrature::tanh_sinh<double> integrator;
    double below = integrator.integrate(integrand, 0.0, upper);
    // Unit reward mass past the saturation point.
    double above = saturation < 80.0
                       ? boost::math::gamma_q(shape, shape * saturation)
                       : 0.0;
    return below + above;
  };

  const double mean_speed = params_.mean_speed_mps;
  const double sd = params_.speed_stddev_mps;
  if (sd == 0.0) return given_shape(FadingShape(mean_speed));
  auto outer = [&](double z) {
    const double density =
        std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
    return density * given_shape(FadingShape(mean_speed + sd * z));
  };
  return boost::math::quadrature::gauss<double, 30>::integrate(outer, -8.0,
                                                                8.0);
}

double IotReward(const IotScenario& scenario, PlayerIndex device,
                 ArmIndex channel, ContextIndex x, double fading_draw) {
  const double sinr = scenario.MeanSinr(device, channel, x) * fading_draw;
  if (!(sinr > 0.0)) return 0.0;
  const double rate =
      std::log2(1.0 + sinr) / std::log2(1.0 + scenario.MaxSinr());
  return std::clamp(rate, 0.0, 1.0);
}

IotEnv::IotEnv(std::shared_ptr<const IotScenario> scenario, RngStream& rng)
    : scenario_(std::move(scenario)) {
  const auto& p = scenario_->params();
  mobility_.reserve(p.num_devices);
  for (int m = 0; m < p.num_devices; ++m) {
    mobility_.emplace_back(p.mobility_memory, p.mean_speed_mps,
                           p.speed_stddev_mps, rng);
  }
}

EnvObservation IotEnv::Step(RngStream& rng) {
  const auto& d = dims();
  EnvObservation obs;
  obs.context = scenario_->context_process().Sample(rng);
  obs.reward_matrix = RewardMatrix(d.num_players(), d.num_arms());
  for (int m = 0; m < d.num_players(); ++m) {
    const double shape = scenario_->FadingShape(mobility_[m].Step(rng));
    for (int l = 0; l < d.num_arms(); ++l) {
      const double fading = rng.Gamma(shape, 1.0 / shape);
      obs.reward_matrix(m, l) = IotReward(*scenario_, m, l, obs.context, fading);
    }
  }
  return obs;
}

}  // namespace mpmab
