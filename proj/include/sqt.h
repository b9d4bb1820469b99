/* C interface to the square-tiled surface library. */
#ifndef SQT_H
#define SQT_H

#include <stddef.h>

#if defined(SQT_BUILDING) && defined(__GNUC__)
#define SQT_API __attribute__((visibility("default")))
#else
#define SQT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SQT_OK = 0,
    SQT_ERR_INVALID = 1,
    SQT_ERR_PARSE = 2,
    SQT_ERR_PRECONDITION = 3,
    SQT_ERR_RESOURCE = 4,
    SQT_ERR_NOT_FOUND = 5,
    SQT_ERR_INTERNAL = 6
} sqt_status;

typedef struct sqt_config sqt_config;
typedef struct sqt_origami sqt_origami;
typedef struct sqt_orbit sqt_orbit;
typedef struct sqt_sweep sqt_sweep;

/* Message of the last failing call on this thread; never NULL. */
SQT_API const char* sqt_last_error(void);
/* Strings returned through char** out-parameters are owned by the caller. */
SQT_API void sqt_string_free(char* s);

/* path may be NULL for defaults; SQT_* environment variables override either way. */
SQT_API sqt_status sqt_config_load(const char* path, sqt_config** out);
SQT_API sqt_status sqt_config_set(sqt_config* c, const char* key, const char* value);
SQT_API void sqt_config_free(sqt_config* c);

SQT_API sqt_status sqt_origami_parse(const char* text, sqt_origami** out);
SQT_API void sqt_origami_free(sqt_origami* o);
SQT_API int sqt_origami_squares(const sqt_origami* o);
SQT_API sqt_status sqt_origami_str(const sqt_origami* o, char** out);

SQT_API sqt_status sqt_orbit_build(const sqt_origami* seed, const sqt_config* c, sqt_orbit** out);
SQT_API void sqt_orbit_free(sqt_orbit* g);
SQT_API size_t sqt_orbit_size(const sqt_orbit* g);
SQT_API sqt_status sqt_orbit_diameter(const sqt_orbit* g, const sqt_config* c, int* out);
/* format: "dot", "json" or "edge_csv" */
SQT_API sqt_status sqt_orbit_export(const sqt_orbit* g, const char* format, char** out);
/* {n, stratum, hlk, vertices, edges, diameter} as JSON */
SQT_API sqt_status sqt_orbit_summary_json(const sqt_origami* seed, const sqt_config* c, char** out);

/* stratum: "h2", "prym4" or "prym6" */
SQT_API sqt_status sqt_sweep_run(const char* stratum, int n_min, int n_max, int n_step, const sqt_config* c, sqt_sweep** out);
SQT_API sqt_status sqt_sweep_append(sqt_sweep* into, const sqt_sweep* from);
SQT_API void sqt_sweep_free(sqt_sweep* s);
SQT_API size_t sqt_sweep_records(const sqt_sweep* s);
SQT_API sqt_status sqt_sweep_csv(const sqt_sweep* s, char** out);
SQT_API sqt_status sqt_sweep_json(const sqt_sweep* s, char** out);
SQT_API sqt_status sqt_sweep_fit(const sqt_sweep* s, double* alpha, double* C, double* residual);
SQT_API sqt_status sqt_sweep_max_ratio(const sqt_sweep* s, double* out);
SQT_API sqt_status sqt_sweep_svg(const sqt_sweep* s, char** out);

/* suite: golden, formulas, butterflies, hl, components, bounds or all; *passed is 1 when every check passed */
SQT_API sqt_status sqt_verify(const char* suite, const sqt_config* c, char** json, int* passed);

/* JSON traces; inputs are prototype literals such as "(1,24,2,2)" or origami literals */
SQT_API sqt_status sqt_reduce(const char* stratum, const char* input, char** out);
SQT_API sqt_status sqt_butterfly(const char* stratum, const char* input, const char* q, char** out);
/* n = 0 picks the realizing n from the discriminant */
SQT_API sqt_status sqt_path(const char* stratum, const char* start, const char* target, long long n, char** out);
SQT_API sqt_status sqt_census(const char* stratum, int n, char** out);

#ifdef __cplusplus
}
#endif

#endif
