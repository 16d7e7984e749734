#ifndef SPINSTAT_H
#define SPINSTAT_H

/* C interface to the spinstat analysis library. Every entry point returns a
 * status code; on failure spinstat_last_error() describes the problem for the
 * calling thread. Reports are opaque and owned by the caller. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SPINSTAT_API __declspec(dllexport)
#else
#define SPINSTAT_API __attribute__((visibility("default")))
#endif

typedef enum spinstat_status {
  SPINSTAT_OK = 0,
  SPINSTAT_ERR_INVALID_ARGUMENT = 1,
  SPINSTAT_ERR_IO = 2,
  SPINSTAT_ERR_PARSE = 3,
  SPINSTAT_ERR_FORMAT = 4,
  SPINSTAT_ERR_PRECONDITION = 5,
  SPINSTAT_ERR_INTERNAL = 6
} spinstat_status;

typedef struct spinstat_report spinstat_report;

SPINSTAT_API const char* spinstat_version(void);

/* Message of the last failed call on this thread, "" if none. */
SPINSTAT_API const char* spinstat_last_error(void);

SPINSTAT_API spinstat_status spinstat_analyze_file(const char* spec_path, spinstat_report** out);

/* base_dir resolves relative explicit-matrix paths; may be NULL. */
SPINSTAT_API spinstat_status spinstat_analyze_text(const char* spec_text, const char* base_dir,
                                                   spinstat_report** out);

/* metric is a signature such as "+---"; NULL selects "+---". */
SPINSTAT_API spinstat_status spinstat_dkp_check(const char* metric, int printed_relations,
                                                spinstat_report** out);

/* gram_states_path may be NULL. */
SPINSTAT_API spinstat_status spinstat_fock(const char* table_path, const char* word,
                                           const char* gram_states_path, spinstat_report** out);

SPINSTAT_API const char* spinstat_report_json(const spinstat_report* report);
SPINSTAT_API const char* spinstat_report_text(const spinstat_report* report);
/* Process exit code for the report: 0 consistent or passing, 2 contradiction
 * or failing DKP relations, 3 negative norm, 4 no kinematic term,
 * 5 unsupported. */
SPINSTAT_API int spinstat_report_exit_code(const spinstat_report* report);
SPINSTAT_API const char* spinstat_report_status(const spinstat_report* report);
SPINSTAT_API void spinstat_report_free(spinstat_report* report);

#ifdef __cplusplus
}
#endif

#endif
