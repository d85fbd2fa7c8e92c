/*
 * primelab.h
 *
 * C interface to the primelab core. Tables and run results are opaque
 * handles owned by the caller and released with the matching _destroy call.
 * Every fallible call returns a primelab_status; on failure the message is
 * available from primelab_last_error() on the same thread until the next
 * failing call.
 */
#ifndef PRIMELAB_H
#define PRIMELAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PRIMELAB_BUILDING)
#    define PRIMELAB_API __declspec(dllexport)
#  else
#    define PRIMELAB_API __declspec(dllimport)
#  endif
#else
#  define PRIMELAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum primelab_status {
    PRIMELAB_OK = 0,
    PRIMELAB_ERR_INVALID_ARGUMENT = 1, /* null pointer, zero limit, n > x, ... */
    PRIMELAB_ERR_OUT_OF_RANGE = 2,     /* query beyond a table limit */
    PRIMELAB_ERR_CONFIG = 3,           /* bad run configuration or label */
    PRIMELAB_ERR_IO = 4,
    PRIMELAB_ERR_NO_MEMORY = 5,
    PRIMELAB_ERR_INTERNAL = 6
} primelab_status;

typedef enum primelab_mode { PRIMELAB_MODE_VERIFY = 0, PRIMELAB_MODE_SCAN = 1 } primelab_mode;
typedef enum primelab_format { PRIMELAB_FORMAT_CSV = 0, PRIMELAB_FORMAT_JSON = 1 } primelab_format;
typedef enum primelab_filter { PRIMELAB_FILTER_ALL = 0, PRIMELAB_FILTER_ODD = 1 } primelab_filter;

typedef struct primelab_tables primelab_tables;
typedef struct primelab_run primelab_run;

PRIMELAB_API const char* primelab_version(void);
PRIMELAB_API const char* primelab_last_error(void);
PRIMELAB_API const char* primelab_status_string(primelab_status status);

/* Prime table (and Omega table when with_omega != 0) covering [1, limit]. */
PRIMELAB_API primelab_status primelab_tables_create(uint64_t limit, int with_omega, primelab_tables** out);
PRIMELAB_API void primelab_tables_destroy(primelab_tables* tables);
PRIMELAB_API primelab_status primelab_tables_limit(const primelab_tables* tables, uint64_t* out);

PRIMELAB_API primelab_status primelab_pi(const primelab_tables* tables, uint64_t x, uint64_t* out);
PRIMELAB_API primelab_status primelab_theta(const primelab_tables* tables, uint64_t x, double* out);
PRIMELAB_API primelab_status primelab_omega(const primelab_tables* tables, uint64_t n, unsigned* out);

PRIMELAB_API primelab_status primelab_floor_log2_ratio(uint64_t x, uint64_t n, uint32_t* k, int* exact_power_hit);
PRIMELAB_API primelab_status primelab_frac_log2_ratio(uint64_t x, uint64_t n, double* out);
PRIMELAB_API primelab_status primelab_log_factorial(uint64_t x, double* out);
PRIMELAB_API primelab_status primelab_stirling_main_terms(uint64_t x, double* out);

typedef struct primelab_point {
    uint64_t x;
    uint64_t pi;
    double theta;
    double h;
    uint64_t g;
    uint64_t t;
    double pi_formula;
    double big_theta;
    double nu;
    double r;
    double eta;
    double integral_theta;
    double integral_pi;
} primelab_point;

/* Requires an Omega table and 2 <= x <= limit. */
PRIMELAB_API primelab_status primelab_evaluate_point(const primelab_tables* tables, uint64_t x, primelab_point* out);

/* Renders the points as a table (CSV or JSON). path NULL or "" = stdout. */
PRIMELAB_API primelab_status primelab_points_export(const primelab_tables* tables, const uint64_t* xs, size_t count,
                                                    primelab_format format, const char* path);

typedef struct primelab_config {
    primelab_mode mode;
    const char* identity;  /* general, pi-formula, frac-sum, integrals, theta-estimate, nu, r, eta, dusart */
    uint64_t from;
    uint64_t to;
    uint32_t points;       /* 0 = every integer in [from, to] */
    primelab_filter filter; /* frac-sum only */
    uint64_t sieve_budget;
    int allow_large;
} primelab_config;

/* Fills defaults: verify, general, [1, 1], every integer, budget 10^7. */
PRIMELAB_API void primelab_config_init(primelab_config* config);
PRIMELAB_API primelab_status primelab_config_validate(const primelab_config* config);
/* 1 if the identity needs an Omega table, 0 if not; PRIMELAB_ERR_CONFIG for an unknown label. */
PRIMELAB_API primelab_status primelab_identity_needs_omega(const char* identity, int* out);

typedef struct primelab_summary {
    char identity[32];
    uint64_t rows_evaluated;
    uint64_t mismatches;
    double max_abs_diff;
    double max_scaled_diff;
    double wall_time_seconds;
} primelab_summary;

PRIMELAB_API primelab_status primelab_run_execute(const primelab_config* config, const primelab_tables* tables,
                                                  primelab_run** out);
PRIMELAB_API void primelab_run_destroy(primelab_run* run);
PRIMELAB_API primelab_status primelab_run_summary(const primelab_run* run, primelab_summary* out);
PRIMELAB_API primelab_status primelab_run_export(const primelab_run* run, primelab_format format, const char* path);

/* Copies the rendered export into buf (NUL-terminated) when it fits.
 * *needed always receives the length excluding the terminator. A buffer
 * that is too small is not an error; compare *needed with capacity. */
PRIMELAB_API primelab_status primelab_run_render(const primelab_run* run, primelab_format format, char* buf,
                                                 size_t capacity, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* PRIMELAB_H */
