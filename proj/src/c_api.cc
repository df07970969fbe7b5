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

#include "mpmab/mpmab.h"

#include <cstring>
#include <new>
#include <string>

#include "mpmab/config.h"
#include "mpmab/experiment.h"
#include "mpmab/output.h"
#include "mpmab/presets.h"

struct mpmab_config {
  mpmab::ExperimentConfig config;
};

struct mpmab_results {
  mpmab::ExperimentResults results;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_field;

mpmab_status Fail(mpmab_status status, const std::string& message,
                  const std::string& field = "") {
  last_error = message;
  last_error_field = field;
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
mpmab_status Guard(Fn&& fn) {
  try {
    return fn();
  } catch (const mpmab::ConfigError& e) {
    return Fail(MPMAB_ERR_CONFIG, e.what(), e.field());
  } catch (const nlohmann::json::exception& e) {
    return Fail(MPMAB_ERR_CONFIG, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(MPMAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(MPMAB_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(MPMAB_ERR_INTERNAL, "unknown error");
  }
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* mpmab_version(void) { return MPMAB_VERSION_STRING; }

const char* mpmab_last_error(void) { return last_error.c_str(); }

const char* mpmab_last_error_field(void) { return last_error_field.c_str(); }

mpmab_status mpmab_config_load_file(const char* path, mpmab_config** out) {
  if (path == nullptr || out == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    auto cfg = mpmab::LoadConfigFile(path);
    *out = new mpmab_config{std::move(cfg)};
    return MPMAB_OK;
  });
}

mpmab_status mpmab_config_from_json(const char* text, mpmab_config** out) {
  if (text == nullptr || out == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    auto j = nlohmann::json::parse(text, nullptr, false, true);
    if (j.is_discarded()) return Fail(MPMAB_ERR_CONFIG, "malformed JSON", "config");
    *out = new mpmab_config{mpmab::ConfigFromJson(j)};
    return MPMAB_OK;
  });
}

mpmab_status mpmab_preset_size(const char* name, int* out) {
  if (name == nullptr || out == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out = mpmab::PresetSize(name);
    return MPMAB_OK;
  });
}

mpmab_status mpmab_config_from_preset(const char* name, int index,
                                      mpmab_config** out) {
  if (name == nullptr || out == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out = new mpmab_config{mpmab::MakePreset(name, index)};
    return MPMAB_OK;
  });
}

mpmab_status mpmab_config_set(mpmab_config* cfg, const char* key,
                              const char* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    mpmab::ExperimentConfig copy = cfg->config;
    mpmab::SetConfigValue(copy, key, value);
    cfg->config = std::move(copy);
    return MPMAB_OK;
  });
}

mpmab_status mpmab_config_to_json(const mpmab_config* cfg, char** out) {
  if (cfg == nullptr || out == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out = CopyString(mpmab::ConfigToJson(cfg->config).dump(2));
    return MPMAB_OK;
  });
}

mpmab_status mpmab_config_get(const mpmab_config* cfg, const char* key,
                              char** out) {
  if (cfg == nullptr || key == nullptr || out == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    const auto j = mpmab::ConfigToJson(cfg->config);
    const auto ptr = nlohmann::json::json_pointer(
        "/" + [&] {
          std::string p = key;
          for (auto& ch : p) {
            if (ch == '.') ch = '/';
          }
          return p;
        }());
    if (!j.contains(ptr)) return Fail(MPMAB_ERR_CONFIG, "unknown key", key);
    *out = CopyString(j.at(ptr).dump());
    return MPMAB_OK;
  });
}

void mpmab_string_free(char* s) { delete[] s; }

mpmab_status mpmab_config_hash(const mpmab_config* cfg, char* out,
                               size_t out_size) {
  if (cfg == nullptr || out == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (out_size < 17) return Fail(MPMAB_ERR_INVALID_ARGUMENT, "buffer too small");
  return Guard([&] {
    const std::string h = mpmab::ConfigHash(cfg->config);
    std::memcpy(out, h.c_str(), h.size() + 1);
    return MPMAB_OK;
  });
}

mpmab_status mpmab_config_output_dir(const mpmab_config* cfg, char** out) {
  if (cfg == nullptr || out == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out = CopyString(cfg->config.output_dir);
    return MPMAB_OK;
  });
}

void mpmab_config_free(mpmab_config* cfg) { delete cfg; }

mpmab_status mpmab_run_experiment(const mpmab_config* cfg, mpmab_results** out) {
  if (cfg == nullptr || out == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    auto* res = new mpmab_results{mpmab::RunExperiment(cfg->config)};
    *out = res;
    if (res->results.num_ok() == 0) {
      const auto& runs = res->results.runs;
      return Fail(MPMAB_ERR_RUN, "all runs failed" +
                                     (runs.empty() ? std::string()
                                                   : ": " + runs[0].error));
    }
    return MPMAB_OK;
  });
}

mpmab_status mpmab_results_emit(const mpmab_results* res, const char* dir,
                                const char* formats) {
  if (res == nullptr || dir == nullptr) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  mpmab::EmitFormats fmt;
  try {
    fmt = mpmab::ParseEmitFormats(formats ? formats : "csv");
  } catch (const std::exception& e) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, e.what());
  }
  return Guard([&] {
    try {
      mpmab::EmitResults(res->results, dir, fmt);
    } catch (const mpmab::ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      return Fail(MPMAB_ERR_IO, e.what());
    }
    return MPMAB_OK;
  });
}

int mpmab_results_num_runs(const mpmab_results* res) {
  return res ? static_cast<int>(res->results.runs.size()) : 0;
}

int mpmab_results_num_ok(const mpmab_results* res) {
  return res ? res->results.num_ok() : 0;
}

int mpmab_results_num_checkpoints(const mpmab_results* res) {
  return res ? static_cast<int>(res->results.aggregate.size()) : 0;
}

mpmab_status mpmab_results_regret(const mpmab_results* res, int i, int64_t* t,
                                  double* mean, double* var) {
  if (res == nullptr || i < 0 ||
      i >= static_cast<int>(res->results.aggregate.size())) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "checkpoint index out of range");
  }
  const auto& row = res->results.aggregate[i];
  if (t) *t = row.t;
  if (mean) *mean = row.regret.mean;
  if (var) *var = row.regret.var;
  return MPMAB_OK;
}

mpmab_status mpmab_results_run(const mpmab_results* res, int i, uint64_t* seed,
                               int* ok, double* regret) {
  if (res == nullptr || i < 0 || i >= static_cast<int>(res->results.runs.size())) {
    return Fail(MPMAB_ERR_INVALID_ARGUMENT, "run index out of range");
  }
  const auto& run = res->results.runs[i];
  if (seed) *seed = run.seed;
  if (ok) *ok = run.ok ? 1 : 0;
  if (regret) *regret = run.regret;
  return MPMAB_OK;
}

double mpmab_results_expected_optimum(const mpmab_results* res) {
  return res ? res->results.expected_optimum : 0.0;
}

void mpmab_results_free(mpmab_results* res) { delete res; }

}  // extern "C"
