/*
 * spreadbound C API.
 *
 * Bounds on the maximum size of partial t-spreads in F_q^n, hole-type
 * exclusion queries, and a brute-force oracle for small instances.
 *
 * Conventions:
 *  - Every fallible call returns a psb_status; on failure psb_last_error()
 *    holds a message for the calling thread.
 *  - Results live behind opaque handles released with the matching
 *    *_destroy function. Strings returned by accessors are owned by the
 *    handle and stay valid until it is destroyed.
 *  - Big integers cross the boundary as decimal strings.
 */
#ifndef SPREADBOUND_H
#define SPREADBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(PSB_BUILDING_LIBRARY)
#define PSB_API __attribute__((visibility("default")))
#else
#define PSB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psb_status {
    PSB_OK = 0,
    PSB_INVALID_ARGUMENT = 1, /* bad instance or precondition violation */
    PSB_CAPACITY_EXCEEDED = 3, /* instance too large for the oracle */
    PSB_INTERNAL_ERROR = 4,   /* broken invariant: a bug */
    PSB_IO_ERROR = 5
} psb_status;

typedef enum psb_method {
    PSB_METHOD_CONSTRUCTION = 0,
    PSB_METHOD_PACKING = 1,
    PSB_METHOD_THEOREM1 = 2,
    PSB_METHOD_THEOREM2 = 3,
    PSB_METHOD_DRAKE_FREEMAN = 4,
    PSB_METHOD_ORACLE = 5
} psb_method;

typedef enum psb_param {
    PSB_PARAM_Z = 0,
    PSB_PARAM_U = 1,
    PSB_PARAM_Y = 2,
    PSB_PARAM_X = 3,
    PSB_PARAM_M = 4
} psb_param;

PSB_API const char* psb_version(void);
PSB_API const char* psb_status_name(psb_status status);
PSB_API const char* psb_method_name(psb_method method);
/* Message of the last failed call on this thread ("" if none). */
PSB_API const char* psb_last_error(void);

/* ---- bounds for one instance ------------------------------------------ */

typedef struct psb_report psb_report;

PSB_API psb_status psb_report_create(unsigned q, unsigned n, unsigned t, psb_report** out);
PSB_API void psb_report_destroy(psb_report* report);

PSB_API unsigned psb_report_k(const psb_report* report);
PSB_API unsigned psb_report_r(const psb_report* report);
PSB_API const char* psb_report_l(const psb_report* report);
PSB_API const char* psb_report_lower(const psb_report* report);
PSB_API const char* psb_report_upper(const psb_report* report);
PSB_API int psb_report_exact(const psb_report* report);
PSB_API psb_method psb_report_upper_method(const psb_report* report);

/* Parameter of the best upper bound; NULL when the method has none. */
PSB_API const char* psb_report_upper_param(const psb_report* report, psb_param param);

/* Bound rows: index 0 is the lower bound, index 1 the best upper bound,
 * then any other upper bounds attaining the same value. With
 * all_methods set, every applicable method is listed instead, in the order
 * Construction, Packing, Theorem1, Theorem2, DrakeFreeman. */
PSB_API size_t psb_report_row_count(const psb_report* report, int all_methods);
PSB_API psb_method psb_report_row_method(const psb_report* report, int all_methods, size_t row);
PSB_API int psb_report_row_is_upper(const psb_report* report, int all_methods, size_t row);
PSB_API const char* psb_report_row_value(const psb_report* report, int all_methods, size_t row);
PSB_API const char* psb_report_row_param(const psb_report* report, int all_methods, size_t row, psb_param param);
PSB_API size_t psb_report_row_certificate_size(const psb_report* report, int all_methods, size_t row);
PSB_API const char* psb_report_row_certificate_line(const psb_report* report, int all_methods, size_t row,
                                                    size_t line);

/* One JSON object (schema in docs/output-format.md). */
PSB_API const char* psb_report_json(const psb_report* report, int all_methods);
/* One CSV row without trailing newline; header from psb_csv_header(). */
PSB_API const char* psb_report_csv(const psb_report* report);
PSB_API const char* psb_csv_header(void);

/* ---- hole-type exclusion ---------------------------------------------- */

typedef struct psb_verdict psb_verdict;

/* c is a non-negative decimal string. */
PSB_API psb_status psb_exclude_create(unsigned q, unsigned n, unsigned t, unsigned s, const char* c,
                                      psb_verdict** out);
PSB_API void psb_verdict_destroy(psb_verdict* verdict);
PSB_API int psb_verdict_excluded(const psb_verdict* verdict);
/* NULL unless excluded. */
PSB_API const char* psb_verdict_witness_m(const psb_verdict* verdict);
PSB_API const char* psb_verdict_f_value(const psb_verdict* verdict);
PSB_API size_t psb_verdict_trace_size(const psb_verdict* verdict);
PSB_API const char* psb_verdict_trace_line(const psb_verdict* verdict, size_t line);
PSB_API const char* psb_verdict_json(const psb_verdict* verdict);

/* ---- oracle ----------------------------------------------------------- */

typedef struct psb_budget {
    uint64_t max_nodes;   /* 0 selects the default */
    double max_seconds;   /* <= 0 selects the default (60 s) */
    int greedy;           /* nonzero: one randomized greedy pass */
    uint64_t seed;
} psb_budget;

typedef struct psb_oracle psb_oracle;

/* budget may be NULL for defaults. Runs the search and the cross-check. */
PSB_API psb_status psb_oracle_run(unsigned q, unsigned n, unsigned t, const psb_budget* budget, psb_oracle** out);
PSB_API void psb_oracle_destroy(psb_oracle* oracle);
PSB_API uint64_t psb_oracle_size(const psb_oracle* oracle);
PSB_API int psb_oracle_proven_optimal(const psb_oracle* oracle);
PSB_API uint64_t psb_oracle_nodes(const psb_oracle* oracle);
PSB_API double psb_oracle_seconds(const psb_oracle* oracle);
PSB_API int psb_oracle_cross_check_passed(const psb_oracle* oracle);
PSB_API size_t psb_oracle_report_size(const psb_oracle* oracle);
PSB_API const char* psb_oracle_report_line(const psb_oracle* oracle, size_t line);
PSB_API const char* psb_oracle_witness_text(const psb_oracle* oracle);
PSB_API psb_status psb_oracle_write_witness(const psb_oracle* oracle, const char* path);
PSB_API const char* psb_oracle_json(const psb_oracle* oracle);

/* ---- counting checks on explicit partial spreads ---------------------- */

typedef struct psb_check_summary {
    uint64_t spreads;            /* partial spreads examined */
    uint64_t standard_failures;  /* hyperplane counting identities violated */
    uint64_t congruence_failures;/* hyperplane hole congruences violated */
    uint64_t family_failures;    /* hole count inside the excluded family */
} psb_check_summary;

/* Checks `count` random greedy partial spreads (seeded). */
PSB_API psb_status psb_check_random(unsigned q, unsigned n, unsigned t, uint64_t count, uint64_t seed,
                                    psb_check_summary* out);
/* Checks one partial spread read from a witness file. */
PSB_API psb_status psb_check_witness_file(unsigned q, unsigned n, unsigned t, const char* path,
                                          psb_check_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* SPREADBOUND_H */
