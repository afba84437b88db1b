#ifndef MCOP_MCOP_H
#define MCOP_MCOP_H

#if defined(_WIN32)
#if defined(MCOP_BUILDING_LIBRARY)
#define MCOP_API __declspec(dllexport)
#else
#define MCOP_API __declspec(dllimport)
#endif
#else
#define MCOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcop_status {
  MCOP_OK = 0,
  MCOP_ERR_PARSE = 1,
  MCOP_ERR_USAGE = 2,
  MCOP_ERR_NOT_GRADED = 3,
  MCOP_ERR_NOT_MONOTONE = 4,
  MCOP_ERR_BAD_HASSE = 5,
  MCOP_ERR_CYCLIC = 6,
  MCOP_ERR_UNMARKED_EXTREME = 7,
  MCOP_ERR_NOT_RANK_CONSTANT = 8,
  MCOP_ERR_SPADE_VIOLATION = 9,
  MCOP_ERR_NO_INTERIOR_U = 10,
  MCOP_ERR_BOX_TOO_LARGE = 11,
  MCOP_ERR_DIM_CAP_EXCEEDED = 12,
  MCOP_ERR_SINGULAR = 13,
  MCOP_ERR_NOT_SQUARE = 14,
  MCOP_ERR_EQUATION_FAIL = 15,
  MCOP_ERR_UNSUPPORTED = 16,
  MCOP_ERR_INTERNAL = 17
} mcop_status;

typedef struct mcop_poset mcop_poset;
typedef struct mcop_options mcop_options;

MCOP_API const char* mcop_version(void);
MCOP_API const char* mcop_status_name(mcop_status status);
/* Message of the last failing call on this thread; empty when none. */
MCOP_API const char* mcop_last_error(void);

MCOP_API mcop_status mcop_poset_from_json(const char* json, mcop_poset** out);
/* lambda_csv may be NULL or empty for the default marking. */
MCOP_API mcop_status mcop_poset_from_family(const char* family, int n, const char* lambda_csv, mcop_poset** out);
MCOP_API mcop_status mcop_poset_to_json(const mcop_poset* poset, char** out);
MCOP_API void mcop_poset_free(mcop_poset* poset);

MCOP_API mcop_options* mcop_options_new(void);
MCOP_API mcop_status mcop_options_set_string(mcop_options* opts, const char* key, const char* value);
MCOP_API mcop_status mcop_options_set_int(mcop_options* opts, const char* key, long long value);
MCOP_API void mcop_options_free(mcop_options* opts);

/*
 * Runs the command named by the "command" option. poset may be NULL when the
 * options name a builder family. On MCOP_OK, *pass tells whether every check
 * passed. A JSON report is written to *report_json for every outcome except
 * allocation failure; release it with mcop_string_free.
 */
MCOP_API mcop_status mcop_run(const mcop_poset* poset, const mcop_options* opts, char** report_json, int* pass);

MCOP_API void mcop_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
