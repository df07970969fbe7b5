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

// Command-line front end over the C API.
//
//   mpmab run --config exp.json [--seed N] [--reps R] [--out DIR] ...
//   mpmab run --preset paper-small --reps 20 --horizon 200000
//   mpmab config --preset paper-iot

#include <cmath>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpmab/mpmab.h"

namespace {

struct ConfigDeleter {
  void operator()(mpmab_config* c) const { mpmab_config_free(c); }
};
struct ResultsDeleter {
  void operator()(mpmab_results* r) const { mpmab_results_free(r); }
};
using ConfigPtr = std::unique_ptr<mpmab_config, ConfigDeleter>;
using ResultsPtr = std::unique_ptr<mpmab_results, ResultsDeleter>;

int ExitCode(mpmab_status s) {
  switch (s) {
    case MPMAB_OK:
      return 0;
    case MPMAB_ERR_CONFIG:
    case MPMAB_ERR_INVALID_ARGUMENT:
      return 2;
    case MPMAB_ERR_IO:
      return 3;
    case MPMAB_ERR_RUN:
      return 4;
    default:
      return 1;
  }
}

int Report(mpmab_status s, const std::string& what) {
  std::fprintf(stderr, "mpmab: %s: %s\n", what.c_str(), mpmab_last_error());
  return ExitCode(s);
}

std::string TakeString(char* s) {
  std::string out = s ? s : "";
  mpmab_string_free(s);
  return out;
}

// Strips the quotes of a JSON string literal.
std::string Unquote(std::string s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

struct Overrides {
  std::string config_path;
  std::string preset;
  std::optional<unsigned long long> seed;
  std::optional<int> reps;
  std::optional<long long> horizon;
  std::optional<long long> log_every;
  std::optional<int> threads;
  std::string algorithm;
  std::string out;
  std::string emit = "csv";
  std::vector<std::string> sets;
};

// Materializes every config selected on the command line.
mpmab_status LoadConfigs(const Overrides& o, std::vector<ConfigPtr>& out) {
  if (o.config_path.empty() == o.preset.empty()) {
    std::fprintf(stderr, "mpmab: give exactly one of --config or --preset\n");
    return MPMAB_ERR_INVALID_ARGUMENT;
  }
  if (!o.config_path.empty()) {
    mpmab_config* c = nullptr;
    mpmab_status s = mpmab_config_load_file(o.config_path.c_str(), &c);
    if (s != MPMAB_OK) return Report(s, o.config_path), s;
    out.emplace_back(c);
  } else {
    int n = 0;
    mpmab_status s = mpmab_preset_size(o.preset.c_str(), &n);
    if (s != MPMAB_OK) return Report(s, "preset"), s;
    for (int i = 0; i < n; ++i) {
      mpmab_config* c = nullptr;
      s = mpmab_config_from_preset(o.preset.c_str(), i, &c);
      if (s != MPMAB_OK) return Report(s, "preset"), s;
      out.emplace_back(c);
    }
  }

  std::vector<std::pair<std::string, std::string>> sets;
  if (o.seed) sets.emplace_back("run.seed", std::to_string(*o.seed));
  if (o.reps) sets.emplace_back("run.reps", std::to_string(*o.reps));
  if (o.horizon) sets.emplace_back("run.horizon", std::to_string(*o.horizon));
  if (o.log_every) sets.emplace_back("run.log_every", std::to_string(*o.log_every));
  if (o.threads) sets.emplace_back("run.threads", std::to_string(*o.threads));
  if (!o.algorithm.empty()) sets.emplace_back("algorithm", o.algorithm);
  for (const auto& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "mpmab: --set expects key=value, got \"%s\"\n", kv.c_str());
      return MPMAB_ERR_INVALID_ARGUMENT;
    }
    sets.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  for (auto& cfg : out) {
    if (!o.out.empty()) {
      std::string dir = o.out;
      if (out.size() > 1) {
        char* name = nullptr;
        mpmab_config_get(cfg.get(), "name", &name);
        dir += "/" + Unquote(TakeString(name));
      }
      sets.emplace_back("output_dir", dir);
    }
    for (const auto& [k, v] : sets) {
      mpmab_status s = mpmab_config_set(cfg.get(), k.c_str(), v.c_str());
      if (s != MPMAB_OK) return Report(s, "--" + k), s;
    }
    if (!o.out.empty()) sets.pop_back();
  }
  return MPMAB_OK;
}

int RunCommand(const Overrides& o) {
  std::vector<ConfigPtr> configs;
  mpmab_status s = LoadConfigs(o, configs);
  if (s != MPMAB_OK) return ExitCode(s);
  int worst = 0;
  for (const auto& cfg : configs) {
    char hash[17];
    mpmab_config_hash(cfg.get(), hash, sizeof(hash));
    char* name_json = nullptr;
    mpmab_config_get(cfg.get(), "name", &name_json);
    const std::string name = Unquote(TakeString(name_json));
    char* dir_c = nullptr;
    mpmab_config_output_dir(cfg.get(), &dir_c);
    const std::string dir = TakeString(dir_c);

    mpmab_results* raw = nullptr;
    s = mpmab_run_experiment(cfg.get(), &raw);
    ResultsPtr res(raw);
    if (s != MPMAB_OK && s != MPMAB_ERR_RUN) return Report(s, name);
    if (res) {
      mpmab_status e = mpmab_results_emit(res.get(), dir.c_str(), o.emit.c_str());
      if (e != MPMAB_OK) return Report(e, dir);
    }
    if (s == MPMAB_ERR_RUN) {
      worst = std::max(worst, Report(s, name));
      continue;
    }
    const int n = mpmab_results_num_checkpoints(res.get());
    long long t = 0;
    double mean = 0.0, var = 0.0;
    int64_t t64 = 0;
    mpmab_results_regret(res.get(), n - 1, &t64, &mean, &var);
    t = t64;
    std::printf("%s [%s]: %d/%d runs ok, regret(T=%lld) = %.4f +- %.4f -> %s\n",
                name.c_str(), hash, mpmab_results_num_ok(res.get()),
                mpmab_results_num_runs(res.get()), t, mean, std::sqrt(var),
                dir.c_str());
    if (mpmab_results_num_ok(res.get()) < mpmab_results_num_runs(res.get())) {
      std::fprintf(stderr, "mpmab: %s: some runs failed; see seeds.csv\n",
                   name.c_str());
    }
  }
  return worst;
}

int ConfigCommand(const Overrides& o) {
  std::vector<ConfigPtr> configs;
  mpmab_status s = LoadConfigs(o, configs);
  if (s != MPMAB_OK) return ExitCode(s);
  for (const auto& cfg : configs) {
    char* text = nullptr;
    s = mpmab_config_to_json(cfg.get(), &text);
    if (s != MPMAB_OK) return Report(s, "config");
    std::printf("%s\n", TakeString(text).c_str());
  }
  return 0;
}

void AddSelection(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "experiment config file (JSON)");
  cmd->add_option("--preset", o.preset, "paper-small, paper-iot or scalability");
  cmd->add_option("--seed", o.seed, "base seed; run i uses seed + i");
  cmd->add_option("--reps", o.reps, "number of repetitions");
  cmd->add_option("--horizon", o.horizon, "slots per run");
  cmd->add_option("--log-every", o.log_every, "checkpoint spacing in slots");
  cmd->add_option("--threads", o.threads, "worker threads (0: all cores)");
  cmd->add_option("--algorithm", o.algorithm,
                  "tne, tne-contextless, musical-chairs, random-static, oracle");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--set", o.sets, "override a dotted config key: key=value");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decentralized contextual multi-player bandit experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mpmab_version()));

  Overrides run_opts;
  CLI::App* run = app.add_subcommand("run", "run an experiment and write results");
  AddSelection(run, run_opts);
  run->add_option("--emit", run_opts.emit, "csv, json or both")
      ->check(CLI::IsMember({"csv", "json", "both"}));

  Overrides cfg_opts;
  CLI::App* config = app.add_subcommand("config", "print the materialized config");
  AddSelection(config, cfg_opts);

  CLI11_PARSE(app, argc, argv);
  if (*run) return RunCommand(run_opts);
  return ConfigCommand(cfg_opts);
}
