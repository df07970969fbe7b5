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

#include "mpmab/config.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace mpmab {

using nlohmann::json;

namespace {

constexpr struct {
  Algorithm algorithm;
  const char* name;
} kAlgorithmNames[] = {
    {Algorithm::kTne, "tne"},
    {Algorithm::kTneContextless, "tne-contextless"},
    {Algorithm::kMusicalChairs, "musical-chairs"},
    {Algorithm::kRandomStatic, "random-static"},
    {Algorithm::kOracle, "oracle"},
};

const char* BenchmarkName(std::optional<RegretBenchmark> b) {
  if (!b) return "auto";
  return *b == RegretBenchmark::kMarginal ? "marginal" : "contextual";
}

std::optional<RegretBenchmark> ParseBenchmark(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "contextual") return RegretBenchmark::kContextual;
  if (s == "marginal") return RegretBenchmark::kMarginal;
  throw ConfigError("run.regret_benchmark",
                    "expected \"auto\", \"contextual\" or \"marginal\", got \"" +
                        s + "\"");
}

// Walks one JSON object, hands out typed members and rejects leftovers.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_,
                                           "expected an object");
  }

  std::string Field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* Find(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    seen_.insert(key);
    return &*it;
  }

  template <typename T>
  void Get(const std::string& key, T& out) {
    const json* v = Find(key);
    if (v == nullptr) return;
    out = Convert<T>(*v, Field(key));
  }

  template <typename T>
  static T Convert(const json& v, const std::string& field) {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(field, "expected a boolean");
      return v.get<bool>();
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError(field, "expected a string");
      return v.get<std::string>();
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw ConfigError(field, "expected a number");
      return v.get<double>();
    } else if constexpr (std::is_unsigned_v<T>) {
      if (!v.is_number_unsigned()) {
        throw ConfigError(field, "expected a non-negative integer");
      }
      return v.get<T>();
    } else {
      static_assert(std::is_integral_v<T>);
      if (!v.is_number_integer()) throw ConfigError(field, "expected an integer");
      const std::int64_t x = v.get<std::int64_t>();
      if (x < std::numeric_limits<T>::min() || x > std::numeric_limits<T>::max()) {
        throw ConfigError(field, "integer out of range");
      }
      return static_cast<T>(x);
    }
  }

  void Finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(Field(it.key()), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::vector<double> ReadNumbers(const json& v, const std::string& field) {
  if (!v.is_array()) throw ConfigError(field, "expected an array of numbers");
  std::vector<double> out;
  for (size_t i = 0; i < v.size(); ++i) {
    out.push_back(ObjectReader::Convert<double>(
        v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json CellToJson(const ArmDistribution& d) {
  switch (d.kind) {
    case ArmDistribution::Kind::kPointMass:
      return {{"kind", "point"}, {"value", d.lo}};
    case ArmDistribution::Kind::kContinuousUniform:
      return {{"kind", "uniform"}, {"lo", d.lo}, {"hi", d.hi}};
    case ArmDistribution::Kind::kDiscreteUniform:
      return {{"kind", "discrete"}, {"values", d.values}};
  }
  return {};
}

ArmDistribution CellFromJson(const json& j, const std::string& field) {
  // A bare number is shorthand for a point mass.
  if (j.is_number()) return ArmDistribution::PointMass(j.get<double>());
  ObjectReader r(j, field);
  std::string kind;
  r.Get("kind", kind);
  ArmDistribution d;
  if (kind == "point") {
    double value = 0.0;
    if (!r.Find("value")) throw ConfigError(r.Field("value"), "missing");
    r.Get("value", value);
    d = ArmDistribution::PointMass(value);
  } else if (kind == "uniform") {
    double lo = 0.0, hi = 0.0;
    if (!r.Find("lo") || !r.Find("hi")) {
      throw ConfigError(field, "uniform cell needs lo and hi");
    }
    r.Get("lo", lo);
    r.Get("hi", hi);
    d = ArmDistribution::ContinuousUniform(lo, hi);
  } else if (kind == "discrete") {
    const json* v = r.Find("values");
    if (v == nullptr) throw ConfigError(r.Field("values"), "missing");
    d = ArmDistribution::DiscreteUniform(ReadNumbers(*v, r.Field("values")));
  } else {
    throw ConfigError(r.Field("kind"),
                      "expected \"point\", \"uniform\" or \"discrete\"");
  }
  r.Finish();
  return d;
}

json IotToJson(const IotScenarioParams& p) {
  json users = json::array();
  for (const auto& u : p.licensed_users) users.push_back(u.power_levels_dbm);
  return {
      {"licensed_users", users},
      {"context_probs", p.context_probs},
      {"area_side_m", p.area_side_m},
      {"link_distance_min_m", p.link_distance_min_m},
      {"link_distance_max_m", p.link_distance_max_m},
      {"licensed_distance_min_m", p.licensed_distance_min_m},
      {"licensed_distance_max_m", p.licensed_distance_max_m},
      {"reference_distance_m", p.reference_distance_m},
      {"pathloss_exponent", p.pathloss_exponent},
      {"tx_power_dbm", p.tx_power_dbm},
      {"noise_dbm", p.noise_dbm},
      {"shadowing_stddev_db", p.shadowing_stddev_db},
      {"mobility_memory", p.mobility_memory},
      {"mean_speed_mps", p.mean_speed_mps},
      {"speed_stddev_mps", p.speed_stddev_mps},
      {"static_fading_shape", p.static_fading_shape},
      {"speed_reference_mps", p.speed_reference_mps},
      {"scenario_seed", p.scenario_seed},
  };
}

IotScenarioParams IotFromJson(const json& j, const std::string& path) {
  IotScenarioParams p;
  ObjectReader r(j, path);
  if (const json* users = r.Find("licensed_users")) {
    const std::string f = r.Field("licensed_users");
    if (!users->is_array()) throw ConfigError(f, "expected an array of arrays");
    p.licensed_users.clear();
    for (size_t u = 0; u < users->size(); ++u) {
      p.licensed_users.push_back(
          {ReadNumbers((*users)[u], f + "[" + std::to_string(u) + "]")});
    }
  }
  if (const json* probs = r.Find("context_probs")) {
    p.context_probs = ReadNumbers(*probs, r.Field("context_probs"));
  }
  r.Get("area_side_m", p.area_side_m);
  r.Get("link_distance_min_m", p.link_distance_min_m);
  r.Get("link_distance_max_m", p.link_distance_max_m);
  r.Get("licensed_distance_min_m", p.licensed_distance_min_m);
  r.Get("licensed_distance_max_m", p.licensed_distance_max_m);
  r.Get("reference_distance_m", p.reference_distance_m);
  r.Get("pathloss_exponent", p.pathloss_exponent);
  r.Get("tx_power_dbm", p.tx_power_dbm);
  r.Get("noise_dbm", p.noise_dbm);
  r.Get("shadowing_stddev_db", p.shadowing_stddev_db);
  r.Get("mobility_memory", p.mobility_memory);
  r.Get("mean_speed_mps", p.mean_speed_mps);
  r.Get("speed_stddev_mps", p.speed_stddev_mps);
  r.Get("static_fading_shape", p.static_fading_shape);
  r.Get("speed_reference_mps", p.speed_reference_mps);
  r.Get("scenario_seed", p.scenario_seed);
  r.Finish();
  return p;
}

// Re-throws errors raised by lower layers under the config path `prefix`.
template <typename Fn>
void WithPrefix(const std::string& prefix, Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    if (e.field().rfind(prefix, 0) == 0) throw;
    std::string what = e.what();
    const std::string head = e.field() + ": ";
    if (!e.field().empty() && what.rfind(head, 0) == 0) what = what.substr(head.size());
    throw ConfigError(e.field().empty() ? prefix : prefix + "." + e.field(), what);
  }
}

std::uint64_t Fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

const char* AlgorithmName(Algorithm algorithm) {
  for (const auto& e : kAlgorithmNames) {
    if (e.algorithm == algorithm) return e.name;
  }
  return "?";
}

Algorithm ParseAlgorithm(const std::string& name) {
  for (const auto& e : kAlgorithmNames) {
    if (name == e.name) return e.algorithm;
  }
  throw ConfigError("algorithm",
                    "unknown algorithm \"" + name +
                        "\" (expected tne, tne-contextless, musical-chairs, "
                        "random-static or oracle)");
}

std::int64_t ExperimentConfig::effective_log_every() const {
  if (log_every > 0) return log_every;
  return std::max<std::int64_t>(1, horizon / 100);
}

RegretBenchmark ExperimentConfig::effective_regret_benchmark() const {
  if (regret_benchmark) return *regret_benchmark;
  return algorithm == Algorithm::kTneContextless ? RegretBenchmark::kMarginal
                                                 : RegretBenchmark::kContextual;
}

std::vector<std::string> ExperimentConfig::Validate() const {
  std::vector<std::string> warnings;
  if (name.empty()) throw ConfigError("name", "must not be empty");
  WithPrefix("game", [&] { GameDims(num_players, num_arms, num_contexts); });

  if (environment.kind == EnvironmentSpec::Kind::kSynthetic) {
    const auto& s = environment.synthetic;
    WithPrefix("environment", [&] { ContextProcess probs(s.context_probs); });
    if (static_cast<int>(s.context_probs.size()) != num_contexts) {
      throw ConfigError("environment.context_probs",
                        "length must equal game.num_contexts");
    }
    if (static_cast<int>(s.cells.size()) != num_players) {
      throw ConfigError("environment.cells",
                        "needs one entry per player (game.num_players)");
    }
    for (int m = 0; m < num_players; ++m) {
      const std::string fm = "environment.cells[" + std::to_string(m) + "]";
      if (static_cast<int>(s.cells[m].size()) != num_arms) {
        throw ConfigError(fm, "needs one entry per arm (game.num_arms)");
      }
      for (int l = 0; l < num_arms; ++l) {
        const std::string fl = fm + "[" + std::to_string(l) + "]";
        if (static_cast<int>(s.cells[m][l].size()) != num_contexts) {
          throw ConfigError(fl, "needs one entry per context (game.num_contexts)");
        }
        for (int x = 0; x < num_contexts; ++x) {
          s.cells[m][l][x].Validate(fl + "[" + std::to_string(x) + "]");
        }
      }
    }
  } else {
    const auto& p = environment.iot;
    if (p.num_devices != num_players || p.num_channels != num_arms) {
      throw ConfigError("environment.iot",
                        "device/channel counts must equal the game dimensions");
    }
    p.Validate();
    if (p.num_contexts() != num_contexts) {
      throw ConfigError("game.num_contexts",
                        "must equal the number of (licensed user, level) pairs (" +
                            std::to_string(p.num_contexts()) + ")");
    }
    if (!p.context_probs.empty()) {
      WithPrefix("environment.iot", [&] { ContextProcess probs(p.context_probs); });
    }
  }

  EpochSchedule(c1, c2, c3, delta);
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw ConfigError("tne.epsilon", "must lie in (0,1]");
  }
  if (!(xi >= 0.0 && xi < 1.0)) throw ConfigError("tne.xi", "must lie in [0,1)");
  std::vector<std::string> acc;
  WithPrefix("tne", [&] { acc = acceptance.Validate(num_players); });
  for (auto& w : acc) warnings.push_back("tne.acceptance: " + w);
  if (mc_exploration_rounds < 1) {
    throw ConfigError("musical_chairs.exploration_rounds", "must be > 0");
  }
  if (horizon < 1) throw ConfigError("run.horizon", "must be >= 1");
  if (reps < 1) throw ConfigError("run.reps", "must be >= 1");
  if (log_every < 0) throw ConfigError("run.log_every", "must be >= 0");
  if (threads < 0) throw ConfigError("run.threads", "must be >= 0");
  if (output_dir.empty()) throw ConfigError("output_dir", "must not be empty");
  if (raw_log && static_cast<double>(horizon) * reps > 5e7) {
    warnings.push_back("run.raw_log: per-slot logs will be very large");
  }
  return warnings;
}

bool ExperimentConfig::operator==(const ExperimentConfig& other) const {
  return ConfigToJson(*this) == ConfigToJson(other);
}

json ConfigToJson(const ExperimentConfig& c) {
  json env;
  if (c.environment.kind == EnvironmentSpec::Kind::kSynthetic) {
    json cells = json::array();
    for (const auto& arms : c.environment.synthetic.cells) {
      json per_arm = json::array();
      for (const auto& ctx : arms) {
        json per_ctx = json::array();
        for (const auto& d : ctx) per_ctx.push_back(CellToJson(d));
        per_arm.push_back(per_ctx);
      }
      cells.push_back(per_arm);
    }
    env = {{"kind", "synthetic"},
           {"context_probs", c.environment.synthetic.context_probs},
           {"cells", cells}};
  } else {
    env = {{"kind", "iot"}, {"iot", IotToJson(c.environment.iot)}};
  }
  return {
      {"name", c.name},
      {"algorithm", AlgorithmName(c.algorithm)},
      {"game",
       {{"num_players", c.num_players},
        {"num_arms", c.num_arms},
        {"num_contexts", c.num_contexts}}},
      {"environment", env},
      {"schedule",
       {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"delta", c.delta}}},
      {"tne",
       {{"epsilon", c.epsilon},
        {"xi", c.xi},
        {"acceptance",
         {{"alpha11", c.acceptance.f_slope},
          {"alpha12", c.acceptance.f_intercept},
          {"alpha21", c.acceptance.g_slope},
          {"alpha22", c.acceptance.g_intercept}}}}},
      {"musical_chairs", {{"exploration_rounds", c.mc_exploration_rounds}}},
      {"run",
       {{"horizon", c.horizon},
        {"reps", c.reps},
        {"seed", c.seed},
        {"log_every", c.log_every},
        {"threads", c.threads},
        {"regret_benchmark", BenchmarkName(c.regret_benchmark)},
        {"raw_log", c.raw_log},
        {"per_run_values", c.per_run_values}}},
      {"output_dir", c.output_dir},
  };
}

ExperimentConfig ConfigFromJson(const json& j) {
  ExperimentConfig c;
  ObjectReader root(j, "");
  root.Get("name", c.name);
  if (const json* a = root.Find("algorithm")) {
    c.algorithm = ParseAlgorithm(ObjectReader::Convert<std::string>(*a, "algorithm"));
  }
  if (const json* g = root.Find("game")) {
    ObjectReader r(*g, "game");
    r.Get("num_players", c.num_players);
    r.Get("num_arms", c.num_arms);
    r.Get("num_contexts", c.num_contexts);
    r.Finish();
  }
  if (const json* e = root.Find("environment")) {
    ObjectReader r(*e, "environment");
    std::string kind = "synthetic";
    r.Get("kind", kind);
    if (kind == "synthetic") {
      c.environment.kind = EnvironmentSpec::Kind::kSynthetic;
      if (const json* p = r.Find("context_probs")) {
        c.environment.synthetic.context_probs =
            ReadNumbers(*p, "environment.context_probs");
      } else if (c.num_contexts > 0) {
        c.environment.synthetic.context_probs =
            ContextProcess::Uniform(c.num_contexts).probs();
      }
      const json* cells = r.Find("cells");
      if (cells == nullptr) throw ConfigError("environment.cells", "missing");
      const std::string f = "environment.cells";
      if (!cells->is_array()) throw ConfigError(f, "expected a nested array");
      for (size_t m = 0; m < cells->size(); ++m) {
        const std::string fm = f + "[" + std::to_string(m) + "]";
        const json& jm = (*cells)[m];
        if (!jm.is_array()) throw ConfigError(fm, "expected an array");
        auto& arms = c.environment.synthetic.cells.emplace_back();
        for (size_t l = 0; l < jm.size(); ++l) {
          const std::string fl = fm + "[" + std::to_string(l) + "]";
          const json& jl = jm[l];
          if (!jl.is_array()) throw ConfigError(fl, "expected an array");
          auto& ctx = arms.emplace_back();
          for (size_t x = 0; x < jl.size(); ++x) {
            ctx.push_back(CellFromJson(jl[x], fl + "[" + std::to_string(x) + "]"));
          }
        }
      }
    } else if (kind == "iot") {
      c.environment.kind = EnvironmentSpec::Kind::kIot;
      if (const json* p = r.Find("iot")) {
        c.environment.iot = IotFromJson(*p, "environment.iot");
      }
    } else {
      throw ConfigError("environment.kind", "expected \"synthetic\" or \"iot\"");
    }
    r.Finish();
  }
  // Device and channel counts of the IoT scenario are the game dimensions.
  c.environment.iot.num_devices = c.num_players;
  c.environment.iot.num_channels = c.num_arms;
  if (const json* s = root.Find("schedule")) {
    ObjectReader r(*s, "schedule");
    r.Get("c1", c.c1);
    r.Get("c2", c.c2);
    r.Get("c3", c.c3);
    r.Get("delta", c.delta);
    r.Finish();
  }
  if (const json* t = root.Find("tne")) {
    ObjectReader r(*t, "tne");
    r.Get("epsilon", c.epsilon);
    r.Get("xi", c.xi);
    if (const json* a = r.Find("acceptance")) {
      ObjectReader ra(*a, "tne.acceptance");
      ra.Get("alpha11", c.acceptance.f_slope);
      ra.Get("alpha12", c.acceptance.f_intercept);
      ra.Get("alpha21", c.acceptance.g_slope);
      ra.Get("alpha22", c.acceptance.g_intercept);
      ra.Finish();
    }
    r.Finish();
  }
  if (const json* mc = root.Find("musical_chairs")) {
    ObjectReader r(*mc, "musical_chairs");
    r.Get("exploration_rounds", c.mc_exploration_rounds);
    r.Finish();
  }
  if (const json* run = root.Find("run")) {
    ObjectReader r(*run, "run");
    r.Get("horizon", c.horizon);
    r.Get("reps", c.reps);
    r.Get("seed", c.seed);
    r.Get("log_every", c.log_every);
    r.Get("threads", c.threads);
    std::string bm = BenchmarkName(c.regret_benchmark);
    r.Get("regret_benchmark", bm);
    c.regret_benchmark = ParseBenchmark(bm);
    r.Get("raw_log", c.raw_log);
    r.Get("per_run_values", c.per_run_values);
    r.Finish();
  }
  root.Get("output_dir", c.output_dir);
  root.Finish();
  c.Validate();
  return c;
}

ExperimentConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open \"" + path + "\"");
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("parse error: ") + e.what());
  }
  return ConfigFromJson(j);
}

void SetConfigValue(ExperimentConfig& config, const std::string& dotted_key,
                    const std::string& value) {
  if (dotted_key.empty()) throw ConfigError("", "empty key");
  json j = ConfigToJson(config);
  json* node = &j;
  std::stringstream ss(dotted_key);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!node->is_object() || !node->contains(parts[i])) {
      throw ConfigError(dotted_key, "unknown key");
    }
    node = &(*node)[parts[i]];
  }
  if (!node->is_object() || !node->contains(parts.back())) {
    throw ConfigError(dotted_key, "unknown key");
  }
  json parsed = json::parse(value, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) parsed = value;
  (*node)[parts.back()] = parsed;
  config = ConfigFromJson(j);
}

std::string ConfigHash(const ExperimentConfig& config) {
  json j = ConfigToJson(config);
  j.erase("output_dir");
  j["run"].erase("threads");
  const std::uint64_t h = Fnv1a64(j.dump());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

EnvironmentFactory::EnvironmentFactory(const ExperimentConfig& config)
    : spec_(config.environment) {
  if (spec_.kind == EnvironmentSpec::Kind::kIot) {
    scenario_ = std::make_shared<const IotScenario>(spec_.iot);
    RngStream unused(0, kSharedStream, StreamPurpose::kEnvironment);
    reference_ = std::make_unique<IotEnv>(scenario_, unused);
  } else {
    reference_ = std::make_unique<SyntheticEnv>(
        ContextProcess(spec_.synthetic.context_probs), spec_.synthetic.cells);
  }
}

std::unique_ptr<Environment> EnvironmentFactory::Make(RngStream& env_rng) const {
  if (scenario_) return std::make_unique<IotEnv>(scenario_, env_rng);
  return std::make_unique<SyntheticEnv>(
      ContextProcess(spec_.synthetic.context_probs), spec_.synthetic.cells);
}

}  // namespace mpmab
