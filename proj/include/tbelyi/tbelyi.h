/*
   Copyright 2026 The tbelyi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TBELYI_H
#define TBELYI_H

#include <stddef.h>

#if defined(TBELYI_BUILDING_LIBRARY)
#define TBELYI_API __attribute__((visibility("default")))
#else
#define TBELYI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. Every fallible call returns one; details via belyi_last_error(). */
typedef enum belyi_error {
  BELYI_OK = 0,
  BELYI_E_DIVISION_BY_ZERO = 1,
  BELYI_E_FIELD_MISMATCH = 2,
  BELYI_E_ZERO_POLYNOMIAL = 3,
  BELYI_E_NOT_ON_CURVE = 4,
  BELYI_E_SINGULAR_CURVE = 5,
  BELYI_E_SINGULAR_POINT = 6,
  BELYI_E_PRECISION_EXHAUSTED = 7,
  BELYI_E_PARSE = 8,
  BELYI_E_ZERO_DENOMINATOR = 9,
  BELYI_E_CONSTANT_FUNCTION = 10,
  BELYI_E_UNRESOLVED_FIBER = 11,
  BELYI_E_CURVE_MISMATCH = 12,
  BELYI_E_NOT_A_GROUP = 13,
  BELYI_E_UNSUPPORTED_FORM = 14,
  BELYI_E_FIBER_SUM_MISMATCH = 15,
  BELYI_E_FILE_NOT_FOUND = 16,
  BELYI_E_SCHEMA = 17,
  BELYI_E_IO = 18,
  BELYI_E_INVALID_ARGUMENT = 19,
  BELYI_E_TIMEOUT = 20,
  BELYI_E_NOT_FOUND = 21,
  BELYI_E_INTERNAL = 99
} belyi_error;

typedef enum belyi_status {
  BELYI_STATUS_OK = 0,
  BELYI_STATUS_MISMATCH = 1,
  BELYI_STATUS_UNRESOLVED = 2,
  BELYI_STATUS_TIMEOUT = 3
} belyi_status;

typedef enum belyi_format { BELYI_FORMAT_JSON = 0, BELYI_FORMAT_CSV = 1, BELYI_FORMAT_TABLE = 2 } belyi_format;

typedef struct belyi_config {
  int torsion_bound;
  int closure_bound;
  int series_precision;
  double timeout_seconds; /* per entry */
  int threads;            /* 0: hardware concurrency */
} belyi_config;

typedef struct belyi_summary {
  int total;
  int ok;
  int mismatch;
  int unresolved;
  int timeout;
  int all_torsion;
} belyi_summary;

typedef struct belyi_corpus belyi_corpus;
typedef struct belyi_result belyi_result;

TBELYI_API const char* belyi_version(void);
TBELYI_API const char* belyi_error_name(belyi_error code);
/* Message of the last failed call on this thread; empty after a success. */
TBELYI_API const char* belyi_last_error(void);
/* Strings returned through char** out-parameters are owned by the caller. */
TBELYI_API void belyi_string_free(char* s);

TBELYI_API belyi_config belyi_config_default(void);

TBELYI_API belyi_error belyi_corpus_load(const char* path, belyi_corpus** out);
/* $BELYI_CORPUS_DIR/tables.json, or the corpus shipped with the sources. */
TBELYI_API belyi_error belyi_corpus_load_bundled(belyi_corpus** out);
TBELYI_API size_t belyi_corpus_size(const belyi_corpus* corpus);
/* Borrowed; valid until the corpus is freed. NULL when out of range. */
TBELYI_API const char* belyi_corpus_label(const belyi_corpus* corpus, size_t index);
TBELYI_API void belyi_corpus_free(belyi_corpus* corpus);

TBELYI_API belyi_error belyi_run(const belyi_corpus* corpus, const belyi_config* config, belyi_result** out);
TBELYI_API belyi_summary belyi_result_summary(const belyi_result* result);
TBELYI_API size_t belyi_result_size(const belyi_result* result);
TBELYI_API const char* belyi_result_label(const belyi_result* result, size_t index);
TBELYI_API belyi_status belyi_result_status(const belyi_result* result, size_t index);
/* Mismatch descriptions of one entry, newline separated. */
TBELYI_API belyi_error belyi_result_mismatches(const belyi_result* result, size_t index, char** out);
TBELYI_API belyi_error belyi_result_render(const belyi_result* result, belyi_format format, char** out);
TBELYI_API void belyi_result_free(belyi_result* result);

/* Analysis of one pair: curve as JSON {"a1".."a6"}, map in x and y. Writes a JSON report. */
TBELYI_API belyi_error belyi_analyze_pair(const char* curve_json, const char* map, const belyi_config* config,
                                          char** out_json);

/* phi o [m] or phi o psi for the corpus pair `label`; psi from isogeny JSON text whose target is the
   pair's curve. Writes the verification report as JSON; *ok is 1 when no property fails. */
TBELYI_API belyi_error belyi_compose_mul(const belyi_corpus* corpus, const char* label, int m,
                                         const belyi_config* config, char** out_json, int* ok);
TBELYI_API belyi_error belyi_compose_isogeny(const belyi_corpus* corpus, const char* label,
                                             const char* isogeny_json, const belyi_config* config,
                                             char** out_json, int* ok);

/* Translation certificate for the corpus pair `label`. */
TBELYI_API belyi_error belyi_normalize(const belyi_corpus* corpus, const char* label, const belyi_config* config,
                                       char** out_json, int* ok);

/* The composed family for m = 1..max_m. *out_entries receives corpus-format JSON, *out_report the
   verification reports; either may be NULL. */
TBELYI_API belyi_error belyi_family(int max_m, const belyi_config* config, char** out_entries, char** out_report,
                                    int* ok);

#ifdef __cplusplus
}
#endif

#endif
