/* Copyright 2026 The mpmab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the mpmab simulation library. All handles are opaque.
 * Functions returning mpmab_status leave a description of the most recent
 * failure on the calling thread, readable with mpmab_last_error(). */

#ifndef MPMAB_MPMAB_H_
#define MPMAB_MPMAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MPMAB_BUILDING_LIBRARY)
#define MPMAB_API __attribute__((visibility("default")))
#else
#define MPMAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mpmab_status {
  MPMAB_OK = 0,
  MPMAB_ERR_INVALID_ARGUMENT = 1, /* null handle or bad argument */
  MPMAB_ERR_CONFIG = 2,           /* configuration rejected */
  MPMAB_ERR_IO = 3,               /* file could not be read or written */
  MPMAB_ERR_RUN = 4,              /* every run of an experiment failed */
  MPMAB_ERR_INTERNAL = 5
} mpmab_status;

typedef struct mpmab_config mpmab_config;
typedef struct mpmab_results mpmab_results;

MPMAB_API const char* mpmab_version(void);

/* Message of the last failed call on this thread; "" if none. The string
 * stays valid until the next failing call on the same thread. */
MPMAB_API const char* mpmab_last_error(void);
/* Dotted config field that caused the last MPMAB_ERR_CONFIG, or "". */
MPMAB_API const char* mpmab_last_error_field(void);

MPMAB_API mpmab_status mpmab_config_load_file(const char* path,
                                              mpmab_config** out);
MPMAB_API mpmab_status mpmab_config_from_json(const char* text,
                                              mpmab_config** out);
/* Number of configs a named preset expands to. */
MPMAB_API mpmab_status mpmab_preset_size(const char* name, int* out);
MPMAB_API mpmab_status mpmab_config_from_preset(const char* name, int index,
                                                mpmab_config** out);
/* Sets one dotted key, e.g. "run.seed" to "42". The value is read as JSON
 * when it parses, otherwise as a string. The config is left unchanged on
 * failure. */
MPMAB_API mpmab_status mpmab_config_set(mpmab_config* cfg, const char* key,
                                        const char* value);
/* JSON text of one dotted key, e.g. "name" or "game.num_players";
 * release with mpmab_string_free. */
MPMAB_API mpmab_status mpmab_config_get(const mpmab_config* cfg,
                                        const char* key, char** out);
/* Canonical JSON; release with mpmab_string_free. */
MPMAB_API mpmab_status mpmab_config_to_json(const mpmab_config* cfg,
                                            char** out);
MPMAB_API void mpmab_string_free(char* s);
/* 16 hex digits plus terminator; `out` must hold 17 bytes. */
MPMAB_API mpmab_status mpmab_config_hash(const mpmab_config* cfg, char* out,
                                         size_t out_size);
MPMAB_API mpmab_status mpmab_config_output_dir(const mpmab_config* cfg,
                                               char** out);
MPMAB_API void mpmab_config_free(mpmab_config* cfg);

/* Runs every repetition. Individual failed runs are recorded in the
 * results; MPMAB_ERR_RUN is returned (with results still produced) only
 * when no run succeeded. */
MPMAB_API mpmab_status mpmab_run_experiment(const mpmab_config* cfg,
                                            mpmab_results** out);
/* formats: "csv", "json" or "both". */
MPMAB_API mpmab_status mpmab_results_emit(const mpmab_results* res,
                                          const char* dir,
                                          const char* formats);

MPMAB_API int mpmab_results_num_runs(const mpmab_results* res);
MPMAB_API int mpmab_results_num_ok(const mpmab_results* res);
MPMAB_API int mpmab_results_num_checkpoints(const mpmab_results* res);
/* Aggregate row i: slot count, mean and variance of cumulative regret. */
MPMAB_API mpmab_status mpmab_results_regret(const mpmab_results* res, int i,
                                            int64_t* t, double* mean,
                                            double* var);
/* Final cumulative regret of run i (seed order) and its seed. */
MPMAB_API mpmab_status mpmab_results_run(const mpmab_results* res, int i,
                                         uint64_t* seed, int* ok,
                                         double* regret);
MPMAB_API double mpmab_results_expected_optimum(const mpmab_results* res);
MPMAB_API void mpmab_results_free(mpmab_results* res);

#ifdef __cplusplus
}
#endif

#endif /* MPMAB_MPMAB_H_ */
