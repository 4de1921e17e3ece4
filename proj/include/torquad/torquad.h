// Copyright 2026 The torquad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the torquad library. Every call returns a tq_status; on
 * failure tq_last_error() describes the problem for the calling thread.
 * Objects behind opaque handles are released with the matching _free call,
 * which accepts NULL. */

#ifndef TORQUAD_TORQUAD_H
#define TORQUAD_TORQUAD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TQ_API __declspec(dllexport)
#else
#define TQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tq_status
{
    TQ_OK = 0,
    TQ_ERR_INVALID_ARGUMENT = 1,
    TQ_ERR_PARSE = 2,
    TQ_ERR_OVERFLOW = 3,
    TQ_ERR_DEGENERATE = 4,
    TQ_ERR_NUMERIC = 5,
    TQ_ERR_BUFFER_TOO_SMALL = 6,
    TQ_ERR_OUT_OF_RANGE = 7,
    TQ_ERR_INTERNAL = 8
} tq_status;

typedef struct tq_quad tq_quad;
typedef struct tq_quad_list tq_quad_list;
typedef struct tq_series tq_series;
typedef struct tq_curve_report tq_curve_report;

TQ_API const char *tq_version(void);
TQ_API const char *tq_status_name(tq_status status);
/* Message of the last failing call on this thread, or "". */
TQ_API const char *tq_last_error(void);

/* ---- quads ---- */

/* "r,theta;r,theta;r,theta;r,theta" with fractions p/q or integers. */
TQ_API tq_status tq_quad_parse(const char *text, tq_quad **out);
/* Points as (r_num, r_den, theta_num, theta_den), four rows, reduced into R. */
TQ_API tq_status tq_quad_from_points(const int64_t points[16], tq_quad **out);
TQ_API tq_status tq_quad_clone(const tq_quad *q, tq_quad **out);
TQ_API void tq_quad_free(tq_quad *q);
/* Writes the canonical text with a terminating NUL. *needed receives the
 * size including the NUL; TQ_ERR_BUFFER_TOO_SMALL if cap is smaller. */
TQ_API tq_status tq_quad_format(const tq_quad *q, char *buf, size_t cap, size_t *needed);
/* Sorted point i in 0..3 as (r_num, r_den, theta_num, theta_den). */
TQ_API tq_status tq_quad_point(const tq_quad *q, int i, int64_t out[4]);
TQ_API tq_status tq_quad_order(const tq_quad *q, int64_t *out);
/* -1, 0, 1 in lexicographic order. */
TQ_API tq_status tq_quad_compare(const tq_quad *a, const tq_quad *b, int *out);

/* ---- SL2 action ---- */

/* m = (a, b, c, d) with ad - bc = 1. */
TQ_API tq_status tq_act(const int64_t m[4], const tq_quad *q, tq_quad **out);
TQ_API tq_status tq_orbit(const tq_quad *q, tq_quad_list **out);
/* The lexicographically least quad of the orbit and a matrix reaching it. */
TQ_API tq_status tq_minimal_representative(const tq_quad *q, tq_quad **min_out, int64_t witness[4]);
/* Order of the stabilizer image in SL2(Z/n) modulo +-I. */
TQ_API tq_status tq_stabilizer_order(const tq_quad *q, int64_t *psl_order);

TQ_API size_t tq_quad_list_size(const tq_quad_list *l);
/* Borrowed pointer, valid until the list is freed. */
TQ_API tq_status tq_quad_list_get(const tq_quad_list *l, size_t i, const tq_quad **out);
TQ_API void tq_quad_list_free(tq_quad_list *l);

/* ---- goodness and classification ---- */

/* *is_good = 1 with a coprime witness (a, b), else 0. */
TQ_API tq_status tq_good(const tq_quad *q, int *is_good, int64_t *a, int64_t *b);

typedef struct tq_classify_stats
{
    uint64_t minimal_quads;
    uint64_t quick_good;
    uint64_t progression_good;
    uint64_t full_scans;
} tq_classify_stats;

/* Minimal representatives of the non-good orbits of common order <= max_order,
 * sorted. stats may be NULL. */
TQ_API tq_status tq_classify(int64_t max_order, int prune, tq_quad_list **out, tq_classify_stats *stats);

typedef struct tq_family
{
    int case_number;     /* 1..11 */
    int has_param;       /* cases 1 and 2 carry a parameter */
    int64_t param_num;
    int64_t param_den;
    double constant;     /* 27/4, 0, 1/2 or 8/3 */
    const char *label;   /* static string "27/4", "0", "1/2" or "8/3" */
} tq_family;

/* *found = 0 when q is not a family member (then *out is untouched). */
TQ_API tq_status tq_family_lookup(const tq_quad *q, int *found, tq_family *out);
/* Number of family quads of common order <= max_order. */
TQ_API tq_status tq_family_count(int64_t max_order, size_t *out);
/* Compares a classification against the family table. */
TQ_API tq_status tq_match_families(const tq_quad_list *l, int64_t max_order, int *pass, size_t *missing, size_t *extra);

/* ---- q-series ---- */

/* mu_S to q^terms. */
TQ_API tq_status tq_mu_series(const tq_quad *q, int terms, tq_series **out);
TQ_API void tq_series_free(tq_series *s);

typedef struct tq_series_info
{
    int64_t scale; /* series in t = q^(1/scale) */
    int64_t lead;  /* exponent of the first stored coefficient */
    int64_t prec;  /* exponents below this are known */
    size_t count;  /* stored coefficients */
} tq_series_info;

TQ_API tq_status tq_series_get_info(const tq_series *s, tq_series_info *out);
/* Coefficient of t^e; zero outside the stored range, error at e >= prec. */
TQ_API tq_status tq_series_coeff(const tq_series *s, int64_t e, double *re, double *im);

typedef struct tq_constancy
{
    int constant;
    double value_re;
    double value_im;
    int64_t first_exponent; /* in units of q^(1/scale), when not constant */
    double first_re;
    double first_im;
    int64_t scale;
} tq_constancy;

TQ_API tq_status tq_is_constant(const tq_series *s, double tol, tq_constancy *out);
/* mu_S(q) by direct summation; terms 0 picks a default. */
TQ_API tq_status tq_mu_value(const tq_quad *q, double q_re, double q_im, int terms, double *re, double *im);

/* u = exp(2 pi i theta) q^r given by exact fractions. */
typedef struct tq_upoint
{
    int64_t theta_num;
    int64_t theta_den;
    int64_t r_num;
    int64_t r_den;
} tq_upoint;

/* Largest coefficient of the Tate-curve equation at (X(u), Y(u)) to q^terms. */
TQ_API tq_status tq_tate_residual(tq_upoint u, int terms, double *out);
/* |X(u) series at q - direct sum| and the same for Y, at real q. */
TQ_API tq_status tq_tate_direct_residual(tq_upoint u, int terms, double q, double *x_err, double *y_err);
/* Theta functional equation by direct products, for arbitrary complex u, q. */
TQ_API tq_status tq_theta_functional_residual(double u_re, double u_im, double q_re, double q_im, double *out);
/* Same, coefficientwise on series. */
TQ_API tq_status tq_theta_functional_series_residual(tq_upoint u, int terms, double *out);
/* X(u1) - X(u2) against its theta-product form, coefficientwise. */
TQ_API tq_status tq_x_difference_residual(tq_upoint u1, tq_upoint u2, int terms, double *out);
/* Theta-product ratio for the sorted points of q. *fallback = 1 when the
 * X cross ratio had to be used. */
TQ_API tq_status tq_theta_ratio(const tq_quad *q, double q_re, double q_im, int terms, double *re, double *im,
                                int *fallback);

/* ---- curve models ---- */

TQ_API tq_status tq_curve_verify(int case_number, int samples, uint64_t seed, tq_curve_report **out);
TQ_API void tq_curve_report_free(tq_curve_report *r);

typedef struct tq_curve_summary
{
    int case_number;
    int samples;
    uint64_t seed;
    const char *model; /* "jacobian" or "hessian"; owned by the report */
    double expected;
    double constant_error;
    double max_spread;
    double tol;
    size_t constant_count;
    size_t residual_count;
    int pass;
} tq_curve_summary;

TQ_API tq_status tq_curve_report_summary(const tq_curve_report *r, tq_curve_summary *out);
TQ_API tq_status tq_curve_report_constant(const tq_curve_report *r, size_t i, double *re, double *im);
/* Residuals in name order; *name is owned by the report. */
TQ_API tq_status tq_curve_report_residual(const tq_curve_report *r, size_t i, const char **name, double *value);

/* ---- modular groups ---- */

typedef struct tq_delta_summary
{
    int64_t n;
    int terms;
    double tol;
    int transpose_convention; /* 1 transpose, 0 direct */
    int64_t gamma_order_mod_pm;
    int64_t delta_order_mod_pm;
    size_t gamma_size;
    size_t delta_size;
    int delta_is_subgroup;
    int gamma_in_delta;
    int64_t alt_delta_order_mod_pm;
    int alt_gamma_in_delta;
} tq_delta_summary;

TQ_API tq_status tq_delta(const tq_quad *q, int terms, double tol, tq_delta_summary *out);

#ifdef __cplusplus
}
#endif

#endif
