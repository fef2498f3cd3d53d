/* C interface to the cocenter library. Results come back as JSON text owned by the caller
 * (release with cc_string_free). Every call returns a status; on failure cc_last_error() holds
 * the message for the calling thread. */
#ifndef COCENTER_H
#define COCENTER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#else
#define CC_API __attribute__((visibility("default")))
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_ERR_PARSE = 1,     /* text does not match the grammar */
  CC_ERR_CONFIG = 2,    /* unsupported group or bad configuration */
  CC_ERR_INPUT = 3,     /* precondition of the operation violated */
  CC_ERR_RESOURCE = 4,  /* a cap would be exceeded */
  CC_ERR_INVARIANT = 5, /* a state contradicting a theorem the computation relies on */
  CC_ERR_INTERNAL = 6
} cc_status;

typedef struct cc_group cc_group;

typedef enum cc_format { CC_FORMAT_TEXT = 0, CC_FORMAT_JSON = 1, CC_FORMAT_TSV = 2 } cc_format;

typedef struct cc_verify_options {
  const char* group;   /* NULL: the suite's default groups */
  const char* lattice; /* NULL: "sc" */
  int length;          /* < 0: suite default */
  uint64_t seed;
  int jobs;
  int random_strategies; /* <= 0: 500 */
  int cap;               /* <= 0: group default */
  const char* cache_dir; /* NULL or empty: no persistence */
  cc_format format;
} cc_verify_options;

CC_API const char* cc_last_error(void);
CC_API const char* cc_last_error_production(void); /* grammar production of the last parse error, or "" */
CC_API void cc_string_free(char* s);
CC_API const char* cc_version(void);

/* Checks the GL5 affine-root anchor. */
CC_API cc_status cc_self_test(void);

CC_API cc_status cc_group_create(const char* shorthand, const char* lattice, cc_group** out);
CC_API cc_status cc_group_from_config(const char* config_text, cc_group** out);
CC_API void cc_group_free(cc_group* g);
CC_API cc_status cc_group_set_cap(cc_group* g, int cap);
/* Attach a directory for persisted normal forms; loads what is there. */
CC_API cc_status cc_group_attach_cache(cc_group* g, const char* dir);
CC_API cc_status cc_group_save_cache(const cc_group* g);

CC_API cc_status cc_describe(const cc_group* g, char** out_json);
CC_API cc_status cc_element_info(const cc_group* g, const char* elem, char** out_json);
/* omega_labels: NULL for the default cosets, else labels separated by ';' */
CC_API cc_status cc_strata(const cc_group* g, int length, const char* omega_labels, char** out_json);
CC_API cc_status cc_reduce(const cc_group* g, const char* elem, char** out_json);
CC_API cc_status cc_triple(const cc_group* g, const char* elem, char** out_json);
CC_API cc_status cc_alcove_test(const cc_group* g, const char* elem, const char* coweight, char** out_json);
CC_API cc_status cc_positivity(const cc_group* g, const char* elem, const char* coweight, char** out_json);
CC_API cc_status cc_levi_describe(const cc_group* g, const char* coweight, char** out_json);
CC_API cc_status cc_cocenter_reduce(const cc_group* g, const char* expr, char** out_json);
CC_API cc_status cc_induce(const cc_group* g, const char* coweight, const char* expr, char** out_json);
CC_API cc_status cc_rigid(const cc_group* g, int length, char** out_json);

/* suite: a suite name or "all". *passed is 1 when every check passed. Per-report wall times go to
 * *out_timings (may be NULL) so that *out stays reproducible. */
CC_API cc_status cc_verify(const char* suite, const cc_verify_options* options, char** out, char** out_timings,
                           int* passed);

#ifdef __cplusplus
}
#endif

#endif
