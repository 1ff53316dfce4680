#ifndef QUATREC_H
#define QUATREC_H

/* C interface to the quaternion-recognition toolkit.
 *
 * All commands return a process-style exit code:
 *   0  affirmative result (hypotheses hold / recognized / decomposed)
 *   1  definite refusal, with a witness embedded in the report
 *   2  inconclusive (sampled-only evidence, or an unknown verdict)
 *   3  input error (parse failure, guard violation, bad arguments)
 * and hand back a report string (JSON or text per the options) that the
 * caller releases with quatrec_string_free.  Reports are byte-stable for
 * identical inputs and options. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef QUATREC_API
#define QUATREC_API __attribute__((visibility("default")))
#endif

#define QUATREC_OK 0
#define QUATREC_REFUSED 1
#define QUATREC_UNDECIDED 2
#define QUATREC_INPUT_ERROR 3

/* Opaque algebra presentation handle. */
typedef struct quatrec_algebra quatrec_algebra;

typedef struct quatrec_options {
  const char* format; /* "json" (default) or "text" */
  uint64_t seed;
  int samples;
  long long height;
  int force; /* lifts the enumeration field guard */
} quatrec_options;

/* Fills the defaults: json, seed 0, samples 64, height 10, no force. */
QUATREC_API void quatrec_options_init(quatrec_options* opts);

QUATREC_API const char* quatrec_version(void);

/* Constructors return NULL on failure; when error is non-NULL it receives a
 * malloc'd message (release with quatrec_string_free). */
QUATREC_API quatrec_algebra* quatrec_algebra_parse(const char* json_text, char** error);
QUATREC_API quatrec_algebra* quatrec_algebra_load(const char* path, char** error);
QUATREC_API quatrec_algebra* quatrec_algebra_builtin(const char* descriptor, char** error);
QUATREC_API void quatrec_algebra_free(quatrec_algebra* a);

QUATREC_API size_t quatrec_algebra_dim(const quatrec_algebra* a);
/* Canonical serialization of the presentation (release the string). */
QUATREC_API char* quatrec_algebra_to_json(const quatrec_algebra* a);

/* Commands.  opts may be NULL for defaults; report may be NULL when only the
 * exit code matters.  Elements are comma-separated scalar strings, one per
 * basis coordinate. */
QUATREC_API int quatrec_check(const quatrec_algebra* a, const quatrec_options* opts,
                              char** report);
QUATREC_API int quatrec_recognize(const quatrec_algebra* a, const quatrec_options* opts,
                                  char** report);
QUATREC_API int quatrec_center(const quatrec_algebra* a, const quatrec_options* opts,
                               char** report);
QUATREC_API int quatrec_decompose(const quatrec_algebra* a, const char* element,
                                  const quatrec_options* opts, char** report);
QUATREC_API int quatrec_quadratic(const quatrec_algebra* a, const char* element,
                                  const quatrec_options* opts, char** report);
QUATREC_API int quatrec_enumerate(size_t dim, int64_t field, const quatrec_options* opts,
                                  char** report);
QUATREC_API int quatrec_examples(const char* name, const char* out_path,
                                 const quatrec_options* opts, char** report);

/* Error report in the requested format, for callers that fail before a
 * command runs (always pairs with exit code 3). */
QUATREC_API char* quatrec_error_report(const char* command, const char* message,
                                       const char* format);

QUATREC_API void quatrec_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QUATREC_H */
