// Copyright 2026 The tdesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TDESIM_TDESIM_H
#define TDESIM_TDESIM_H

#include <stddef.h>

#if defined(TDESIM_BUILDING_LIBRARY)
#define TDESIM_API __attribute__((visibility("default")))
#else
#define TDESIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  TDESIM_OK = 0,
  TDESIM_ERR_INVALID_ARGUMENT = 1,
  TDESIM_ERR_SOLVER = 2,
  TDESIM_ERR_NON_UNIQUE = 3,
  TDESIM_ERR_INTERNAL = 4
} tdesim_status;

typedef enum {
  TDESIM_OUTCOME_ALL = -1,
  TDESIM_PHI_PLUS = 0,
  TDESIM_PHI_MINUS = 1,
  TDESIM_PSI_PLUS = 2,
  TDESIM_PSI_MINUS = 3
} tdesim_outcome;

typedef enum {
  TDESIM_SCENARIO_BELL_ON_TDE = 0,
  TDESIM_SCENARIO_TIME_LOOP = 1
} tdesim_scenario;

typedef enum {
  TDESIM_PERTURB_JITTER = 0,
  TDESIM_PERTURB_ROTATION = 1
} tdesim_perturbation;

typedef enum { TDESIM_FORMAT_JSON = 0, TDESIM_FORMAT_CSV = 1 } tdesim_format;

typedef struct {
  double alpha_re, alpha_im;
  double beta_re, beta_im;
} tdesim_amplitudes;

typedef struct tdesim_report tdesim_report;

TDESIM_API const char* tdesim_version(void);
TDESIM_API const char* tdesim_status_string(tdesim_status status);
// Message of the last failed call on this thread; "" if none.
TDESIM_API const char* tdesim_last_error(void);

TDESIM_API tdesim_status tdesim_parse_outcome(const char* name, tdesim_outcome* out);
// alpha = sqrt(alpha2), beta = sqrt(1 - alpha2); alpha2 in [0, 1].
TDESIM_API tdesim_status tdesim_amplitudes_from_alpha2(double alpha2,
                                                       tdesim_amplitudes* out);

// Scenario runs. TDESIM_OUTCOME_ALL averages over outcomes; a single tag
// post-selects. `correct` is a boolean.
TDESIM_API tdesim_status tdesim_run_bell_on_tde(int tau_cycles, tdesim_outcome outcome,
                                                tdesim_report** out);
TDESIM_API tdesim_status tdesim_run_teleport(const tdesim_amplitudes* amps, int tau_cycles,
                                             tdesim_outcome outcome, int correct,
                                             tdesim_report** out);
TDESIM_API tdesim_status tdesim_run_time_loop(const tdesim_amplitudes* amps,
                                              tdesim_outcome outcome, int correct,
                                              tdesim_report** out);

// Ideal-basis fixed point; amps is ignored (may be NULL) for BellOnTde.
TDESIM_API tdesim_status tdesim_solve_fixed_point(tdesim_scenario scenario, int tau_cycles,
                                                  const tdesim_amplitudes* amps,
                                                  tdesim_outcome outcome,
                                                  tdesim_report** out);
TDESIM_API tdesim_status tdesim_run_stability(tdesim_scenario scenario, int tau_cycles,
                                              const tdesim_amplitudes* amps,
                                              tdesim_outcome outcome,
                                              const double* epsilons, size_t count,
                                              tdesim_perturbation model,
                                              tdesim_report** out);
TDESIM_API tdesim_status tdesim_run_ctc_compare(const tdesim_amplitudes* amps,
                                                tdesim_report** out);
TDESIM_API tdesim_status tdesim_run_sweep(int grid_points, int jobs, tdesim_report** out);
TDESIM_API tdesim_status tdesim_great_circle_average(int grid_points, double* mean_d_input,
                                                     double* mean_d_after);

// The returned text is owned by the report. CSV is only available for sweeps.
TDESIM_API tdesim_status tdesim_report_render(tdesim_report* report, tdesim_format format,
                                              const char** text);
// Per-outcome data of scenario runs; 0 for other report kinds.
TDESIM_API size_t tdesim_report_outcome_count(const tdesim_report* report);
// rho_re and rho_im receive the 2x2 output row-major.
TDESIM_API tdesim_status tdesim_report_outcome(const tdesim_report* report, size_t index,
                                               tdesim_outcome* tag, double* probability,
                                               double rho_re[4], double rho_im[4]);
TDESIM_API void tdesim_report_free(tdesim_report* report);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // TDESIM_TDESIM_H
