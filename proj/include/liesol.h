/* liesol: exact-arithmetic toolkit for Lie algebras with ad-invariant
 * metrics (solitary classification, Nikolayevsky derivations, cotangents,
 * double extensions).
 *
 * C API over an opaque-handle core. All functions returning liesol_status
 * use 0 for success; on failure *errmsg (when non-NULL) receives a message
 * to be released with liesol_string_free. Output handles are owned by the
 * caller and released with the matching _free function. Strings returned
 * directly (char*) are owned by the caller as well.
 */
#ifndef LIESOL_H
#define LIESOL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LIESOL_API __declspec(dllexport)
#else
#define LIESOL_API __attribute__((visibility("default")))
#endif

typedef enum liesol_status {
  LIESOL_OK = 0,
  LIESOL_ERR_MISMATCH = 1,    /* corpus expectation failed */
  LIESOL_ERR_PARSE = 2,       /* syntax or schema error */
  LIESOL_ERR_JACOBI = 3,      /* bracket identity violated */
  LIESOL_ERR_UNSUPPORTED = 4, /* no certifiable computation path */
  LIESOL_ERR_CERTIFICATE = 5, /* internal certificate failed */
  LIESOL_ERR_INVALID = 6      /* invalid argument or state */
} liesol_status;

typedef struct liesol_algebra liesol_algebra;
typedef struct liesol_metric liesol_metric;

LIESOL_API const char* liesol_version(void);
LIESOL_API void liesol_string_free(char* s);
LIESOL_API void liesol_algebra_free(liesol_algebra* a);
LIESOL_API void liesol_metric_free(liesol_metric* m);

/* field: "Q" (default when NULL) or "Q(i)". */
LIESOL_API liesol_status liesol_algebra_parse(const char* text, const char* field,
                                              liesol_algebra** out, char** errmsg);
LIESOL_API liesol_status liesol_algebra_from_json(const char* json, liesol_algebra** out,
                                                  char** errmsg);
LIESOL_API char* liesol_algebra_to_json(const liesol_algebra* a);
LIESOL_API char* liesol_algebra_print(const liesol_algebra* a);
LIESOL_API int liesol_algebra_dim(const liesol_algebra* a);
LIESOL_API const char* liesol_algebra_field(const liesol_algebra* a);

LIESOL_API liesol_status liesol_metric_parse(const liesol_algebra* a, const char* text,
                                             liesol_metric** out, char** errmsg);
LIESOL_API liesol_status liesol_metric_from_json(const liesol_algebra* a, const char* json,
                                                 liesol_metric** out, char** errmsg);
LIESOL_API char* liesol_metric_to_json(const liesol_metric* m);
LIESOL_API char* liesol_metric_print(const liesol_metric* m);

/* Searches for a nondegenerate ad-invariant metric. sigma: NULL for the
 * unconstrained search, "auto" to search sigma-diagonal metrics over
 * compatible involutions, or an explicit involution "1:4,2:3" (fixed points
 * may be omitted). *out is NULL when no metric exists. */
LIESOL_API liesol_status liesol_metric_find(const liesol_algebra* a, const char* sigma,
                                            liesol_metric** out, char** errmsg);

/* Parse plus bracket-identity validation: LIESOL_OK, LIESOL_ERR_PARSE or
 * LIESOL_ERR_JACOBI. */
LIESOL_API liesol_status liesol_validate(const char* text, char** errmsg);

/* Full structural report as JSON (series, niceness, derivation dimensions,
 * S/D dimensions, solitary verdict, Nikolayevsky data, dual-pair verdict). */
LIESOL_API liesol_status liesol_analyze(const liesol_algebra* a, const liesol_metric* metric,
                                        char** json_out, char** errmsg);

/* Runs the embedded corpus (filter: tag or id substring, NULL = all) and
 * returns the JSON report. LIESOL_ERR_MISMATCH when any expectation fails. */
LIESOL_API liesol_status liesol_corpus_run(const char* filter, char** json_out, char** errmsg);

LIESOL_API liesol_status liesol_cotangent(const liesol_algebra* a, liesol_algebra** out,
                                          liesol_metric** out_metric, char** errmsg);
LIESOL_API liesol_status liesol_complexify(const liesol_algebra* a, liesol_algebra** out,
                                           char** errmsg);
/* json_j_out (optional) receives the multiplication-by-i matrix. */
LIESOL_API liesol_status liesol_realify(const liesol_algebra* a, liesol_algebra** out,
                                        char** json_j_out, char** errmsg);
LIESOL_API liesol_status liesol_direct_sum(const liesol_algebra* a, const liesol_algebra* b,
                                           const liesol_metric* ga, const liesol_metric* gb,
                                           liesol_algebra** out, liesol_metric** out_metric,
                                           char** errmsg);
/* data_json: {"d": <algebra>, "g_d": <metric>, "h": <algebra>,
 * "pi": [<matrix per h basis element>], "g_h": <metric|null>}. */
LIESOL_API liesol_status liesol_double_extension(const char* data_json, liesol_algebra** out,
                                                 liesol_metric** out_metric, char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* LIESOL_H */
